#include <doctest.h>

#include <numeric>

#include <nlohmann/json.hpp>

#include "graphband/errors.hpp"
#include "graphband/fixtures.hpp"
#include "graphband/graph.hpp"

using namespace graphband;
using nlohmann::json;

TEST_CASE("parsing the five-vertex example yields the printed degrees") {
    FundamentalGraph g = fixture_graph("paper-example");
    CHECK(g.dimension == 2);
    CHECK(g.num_vertices() == 5);
    CHECK(g.edges.size() == 10);
    CHECK(g.degree == std::vector<int>{2, 2, 6, 6, 4});
    CHECK(g.zero_potential());
}

TEST_CASE("loops count twice toward the degree") {
    FundamentalGraph g = fixture_graph("z2-lattice");
    CHECK(g.num_vertices() == 1);
    CHECK(g.degree == std::vector<int>{4});
}

TEST_CASE("degree sum equals twice the edge count") {
    for (const auto& name : fixture_names()) {
        FundamentalGraph g = fixture_graph(name);
        int sum = std::accumulate(g.degree.begin(), g.degree.end(), 0);
        CHECK(sum == 2 * static_cast<int>(g.edges.size()));
    }
}

TEST_CASE("schema violations are rejected") {
    json bad = fixture_graph_doc("z2-lattice");
    bad["edges"][0]["index"] = {1, 0, 0};  // length 3 on a d=2 graph
    CHECK_THROWS_AS(parse_graph(bad), ValidationError);

    json unknown = fixture_graph_doc("z2-lattice");
    unknown["edges"][0]["from"] = "nope";
    CHECK_THROWS_AS(parse_graph(unknown), ValidationError);

    json isolated = fixture_graph_doc("z2-lattice");
    isolated["vertices"].push_back("v2");
    CHECK_THROWS_AS(parse_graph(isolated), ValidationError);
}

TEST_CASE("lifted-graph connectivity via the cycle-index lattice") {
    CHECK_NOTHROW(validate_graph(fixture_graph("z2-lattice")));
    CHECK_NOTHROW(validate_graph(fixture_graph("paper-example")));

    json doc = {{"dimension", 2},
                {"vertices", {"v1"}},
                {"edges", {{{"from", "v1"}, {"to", "v1"}, {"index", {2, 0}}}}}};
    FundamentalGraph g = parse_graph(doc);
    CHECK_THROWS_WITH_AS(validate_graph(g), doctest::Contains("disconnected lifted graph"),
                         ValidationError);
}

TEST_CASE("bipartiteness over the lifted graph") {
    BipartiteCertificate z2 = is_bipartite(fixture_graph("z2-lattice"));
    CHECK(z2.bipartite);
    CHECK(z2.period_parity == std::vector<int>{1, 1});  // checkerboard

    CHECK(is_bipartite(fixture_graph("hex-bipartite")).bipartite);
    CHECK_FALSE(is_bipartite(fixture_graph("paper-example")).bipartite);

    // an index-(0,0) loop is an odd cycle no matter the parities
    json doc = {{"dimension", 2},
                {"vertices", {"v1"}},
                {"edges",
                 {{{"from", "v1"}, {"to", "v1"}, {"index", {1, 0}}},
                  {{"from", "v1"}, {"to", "v1"}, {"index", {0, 1}}},
                  {{"from", "v1"}, {"to", "v1"}, {"index", {0, 0}}}}}};
    CHECK_FALSE(is_bipartite(parse_graph(doc)).bipartite);
}

TEST_CASE("bipartiteness of the integer lattice in d = 1, 2, 3") {
    for (int d = 1; d <= 3; ++d) {
        json edges = json::array();
        for (int s = 0; s < d; ++s) {
            json idx = json::array();
            for (int t = 0; t < d; ++t) idx.push_back(t == s ? 1 : 0);
            edges.push_back({{"from", "v1"}, {"to", "v1"}, {"index", idx}});
        }
        json doc = {{"dimension", d}, {"vertices", {"v1"}}, {"edges", edges}};
        CHECK(is_bipartite(parse_graph(doc)).bipartite);
    }
}

TEST_CASE("torus quotient: sizes, degrees and edge counts") {
    FiniteGraph z2 = quotient_torus(fixture_graph("z2-lattice"), 2);
    CHECK(z2.num_vertices == 4);
    for (int v = 0; v < 4; ++v) CHECK(z2.degree[v] == 4);
    CHECK(z2.edges.size() == 8);  // N^d |E_F| = 4 * 2

    FundamentalGraph g = fixture_graph("paper-example");
    FiniteGraph t = quotient_torus(g, 2);
    CHECK(t.num_vertices == 20);
    CHECK(t.edges.size() == 40);
    for (int v = 0; v < t.num_vertices; ++v)
        CHECK(t.degree[v] == g.degree[v / 4]);  // class-homogeneous degrees
}

TEST_CASE("embedded lift of the integer lattice") {
    RationalEmbedding emb{2, {"v1"}, {{Rational(0), Rational(0)}}};
    std::vector<EmbeddedEdge> edges{
        {0, 0, RationalVec{Rational(1), Rational(0)}},
        {0, 0, RationalVec{Rational(0), Rational(1)}},
    };
    FundamentalGraph g = lift_embedded_graph(emb, edges);
    CHECK(g.num_vertices() == 1);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].index == IntVec{1, 0});
    CHECK(g.edges[1].index == IntVec{0, 1});
    CHECK(g.degree == std::vector<int>{4});
}

namespace {

bool same_graph(const FundamentalGraph& a, const FundamentalGraph& b) {
    if (a.dimension != b.dimension || a.vertex_names != b.vertex_names ||
        a.degree != b.degree || a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        const Edge &ea = a.edges[i], &eb = b.edges[i];
        if (ea.from != eb.from || ea.to != eb.to || ea.index != eb.index) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("embedded document lifts to the bundled fundamental graph") {
    FundamentalGraph lifted = parse_graph(embedded_example_doc());
    validate_graph(lifted);
    CHECK(same_graph(lifted, fixture_graph("paper-example")));
}

TEST_CASE("edge indices are invariant under integer translation of all coordinates") {
    json doc = embedded_example_doc();
    for (auto& v : doc["vertices"]) {
        RationalVec c{Rational::parse(v["coord"][0].get<std::string>()),
                      Rational::parse(v["coord"][1].get<std::string>())};
        v["coord"] = {(c[0] + Rational(3)).str(), (c[1] - Rational(2)).str()};
    }
    for (auto& e : doc["edges"])
        if (e.contains("to_coord")) {
            RationalVec c{Rational::parse(e["to_coord"][0].get<std::string>()),
                          Rational::parse(e["to_coord"][1].get<std::string>())};
            e["to_coord"] = {(c[0] + Rational(3)).str(), (c[1] - Rational(2)).str()};
        }
    CHECK(same_graph(parse_graph(doc), parse_graph(embedded_example_doc())));
}
