#include <doctest.h>

#include <nlohmann/json.hpp>

#include "graphband/domain.hpp"
#include "graphband/errors.hpp"
#include "graphband/fixtures.hpp"

using namespace graphband;
using nlohmann::json;

TEST_CASE("reference domain of the five-vertex example") {
    FundamentalDomain dom = fixture_domain("paper-example");
    CHECK(dom.num_vertices() == 7);
    CHECK(dom.edges.size() == 10);
    CHECK(dom.num_inner == 3);

    // canonical order: inner v1,v2,v3 then boundary v4, v5, v5+(0,1), v4+(1,0)
    CHECK(dom.vertices[0] == DomainVertex{0, {0, 0}});
    CHECK(dom.vertices[1] == DomainVertex{1, {0, 0}});
    CHECK(dom.vertices[2] == DomainVertex{2, {0, 0}});
    CHECK(dom.vertices[3] == DomainVertex{3, {0, 0}});
    CHECK(dom.vertices[4] == DomainVertex{4, {0, 0}});
    CHECK(dom.vertices[5] == DomainVertex{4, {0, 1}});
    CHECK(dom.vertices[6] == DomainVertex{3, {1, 0}});

    CHECK(dom.domain_degree == std::vector<int>{2, 2, 6, 5, 2, 2, 1});
}

TEST_CASE("domain degrees re-derived from the edge list match the stored ones") {
    for (const auto& name : fixture_names()) {
        FundamentalDomain dom = fixture_domain(name);
        std::vector<int> kappa(dom.num_vertices(), 0);
        for (const auto& [a, b] : dom.edges) {
            kappa[a] += 1;
            kappa[b] += 1;  // loops land twice
        }
        CHECK(kappa == dom.domain_degree);
        // inner iff the domain degree equals the periodic degree
        for (int k = 0; k < dom.num_vertices(); ++k)
            CHECK((kappa[k] == dom.graph.degree[dom.vertices[k].base]) == (k < dom.num_inner));
    }
}

TEST_CASE("lattice domain has empty inner set") {
    FundamentalDomain dom = fixture_domain("z2-lattice");
    CHECK(dom.num_vertices() == 3);
    CHECK(dom.num_inner == 0);
    CHECK(dom.domain_degree == std::vector<int>{2, 1, 1});
}

TEST_CASE("covering violations are rejected") {
    FundamentalGraph g = fixture_graph("paper-example");

    json missing = fixture_domain_doc("paper-example");
    missing["edges"].erase(9);  // one fundamental edge uncovered
    CHECK_THROWS_AS(build_domain(g, missing), ValidationError);

    json doubled = fixture_domain_doc("paper-example");
    doubled["edges"].push_back(doubled["edges"][0]);  // same fundamental edge twice
    CHECK_THROWS_AS(build_domain(g, doubled), ValidationError);

    json dup = fixture_domain_doc("paper-example");
    dup["vertices"].push_back({{"base", "v5"}, {"cell", {0, 1}}});
    CHECK_THROWS_AS(build_domain(g, dup), ValidationError);
}

TEST_CASE("disconnected domains are rejected") {
    FundamentalGraph g = fixture_graph("z2-lattice");
    // both edges re-routed away from the origin copy
    json doc = {{"vertices",
                 {{{"base", "v1"}, {"cell", {1, 0}}},
                  {{"base", "v1"}, {"cell", {2, 0}}},
                  {{"base", "v1"}, {"cell", {2, 1}}}}},
                {"edges",
                 {{{{"base", "v1"}, {"cell", {1, 0}}}, {{"base", "v1"}, {"cell", {2, 0}}}},
                  {{{{"base", "v1"}, {"cell", {2, 0}}}, {{"base", "v1"}, {"cell", {2, 1}}}}}}}};
    CHECK_THROWS_AS(build_domain(g, doc), ValidationError);
}

TEST_CASE("vertex labels name the translated copies") {
    FundamentalDomain dom = fixture_domain("paper-example");
    CHECK(dom.vertex_label(0) == "v1");
    CHECK(dom.vertex_label(5) == "v5@(0,1)");
    CHECK(dom.vertex_label(6) == "v4@(1,0)");
}
