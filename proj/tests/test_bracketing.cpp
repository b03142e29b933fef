#include <doctest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "graphband/bracketing.hpp"
#include "graphband/errors.hpp"
#include "graphband/fixtures.hpp"

using namespace graphband;

namespace {

const FundamentalGraph& example_graph() {
    static FundamentalGraph g = fixture_graph("paper-example");
    return g;
}

const FundamentalDomain& example_domain() {
    static FundamentalDomain dom = fixture_domain("paper-example");
    return dom;
}

bool approx_interval(const Interval& iv, double lo, double hi, double tol) {
    return std::abs(iv.lo - lo) <= tol && std::abs(iv.hi - hi) <= tol;
}

// alternative representative set for the example: the two cross-cell edges at
// v3 use pulled-back copies instead of pushed-forward ones
FundamentalDomain second_example_domain() {
    nlohmann::json doc = {
        {"vertices",
         {{{"base", "v3"}, {"cell", {-1, 0}}},
          {{"base", "v3"}, {"cell", {0, -1}}},
          {{"base", "v4"}, {"cell", {0, -1}}}}},
        {"edges",
         {{{{"base", "v1"}}, {{"base", "v3"}}},
          {{{"base", "v1"}}, {{"base", "v4"}}},
          {{{"base", "v2"}}, {{"base", "v3"}}},
          {{{"base", "v2"}}, {{"base", "v4"}}},
          {{{"base", "v3"}}, {{"base", "v4"}}},
          {{{"base", "v3"}, {"cell", {-1, 0}}}, {{"base", "v4"}}},
          {{{"base", "v3"}}, {{"base", "v5"}}},
          {{{"base", "v3"}, {"cell", {0, -1}}}, {{"base", "v5"}}},
          {{{"base", "v4"}}, {{"base", "v5"}}},
          {{{"base", "v4"}, {"cell", {0, -1}}}, {{"base", "v5"}}}}}};
    return build_domain(example_graph(), doc);
}

}  // namespace

TEST_CASE("Neumann matrix of the reference domain") {
    Eigen::MatrixXd m = neumann_matrix(example_domain(), Potential::zero(5));
    REQUIRE(m.rows() == 7);
    // canonical order: v1 v2 v3 | v4 v5 v5@(0,1) v4@(1,0); kappa^1 = 2 2 6 5 2 2 1
    CHECK(m(0, 2) == doctest::Approx(-1.0 / std::sqrt(12.0)).epsilon(1e-14));
    CHECK(m(0, 3) == doctest::Approx(-1.0 / std::sqrt(10.0)).epsilon(1e-14));
    CHECK(m(2, 3) == doctest::Approx(-1.0 / std::sqrt(30.0)).epsilon(1e-14));
    CHECK(m(2, 6) == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(m(2, 4) == doctest::Approx(-1.0 / std::sqrt(12.0)).epsilon(1e-14));
    CHECK(m(3, 4) == doctest::Approx(-1.0 / std::sqrt(10.0)).epsilon(1e-14));
    CHECK(m(0, 1) == 0.0);
    CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-edge domain Neumann matrix") {
    FundamentalDomain dom;
    dom.graph.dimension = 1;
    dom.graph.vertex_names = {"a", "b"};
    dom.graph.degree = {1, 1};
    dom.graph.potential = {0.0, 0.0};
    dom.vertices = {{0, {0}}, {1, {0}}};
    dom.edges = {{0, 1}};
    dom.domain_degree = {1, 1};
    dom.num_inner = 0;
    Eigen::MatrixXd m = neumann_matrix(dom, Potential::zero(2));
    CHECK(m(0, 0) == 0.0);
    CHECK(m(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(m(1, 0) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("Dirichlet matrix is the inner principal submatrix with exact spectrum") {
    Eigen::MatrixXd n = neumann_matrix(example_domain(), Potential::zero(5));
    Eigen::MatrixXd d = dirichlet_matrix(example_domain(), Potential::zero(5));
    REQUIRE(d.rows() == 3);
    CHECK((d - n.topLeftCorner(3, 3)).cwiseAbs().maxCoeff() == 0.0);

    auto ev = eigvals_symmetric(d);
    const double s = 1.0 / std::sqrt(6.0);
    CHECK(std::abs(ev[0] + s) <= 1e-10);
    CHECK(std::abs(ev[1]) <= 1e-10);
    CHECK(std::abs(ev[2] - s) <= 1e-10);
}

TEST_CASE("domain spectra of the example") {
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    CHECK(e.nu == 5);
    CHECK(e.nu1 == 7);
    CHECK(e.nu_o == 3);
    const double neumann[] = {-1.0, -0.21, 0.0, 0.0, 0.0, 0.39, 0.82};
    REQUIRE(e.neumann.size() == 7);
    for (int n = 0; n < 7; ++n) CHECK(std::abs(e.neumann[n] - neumann[n]) <= 1e-2);
}

TEST_CASE("bracket intervals of the example match the reference table") {
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    Brackets br = bracket_intervals(e);
    REQUIRE(br.J.size() == 5);
    const double r6 = 1.0 / std::sqrt(6.0);  // 0.408
    CHECK(approx_interval(br.J[0], -1.0, -r6, 0.01));
    CHECK(approx_interval(br.J[1], -0.21, 0.0, 0.01));
    CHECK(approx_interval(br.J[2], 0.0, r6, 0.01));
    CHECK(approx_interval(br.J[3], 0.0, 1.0, 0.01));
    CHECK(approx_interval(br.J[4], 0.0, 1.0, 0.01));
    CHECK(approx_interval(br.K[0], -1.0, 0.0, 0.01));
    CHECK(approx_interval(br.K[1], -1.0, 0.0, 0.01));
    CHECK(approx_interval(br.K[2], -r6, 0.0, 0.01));
    CHECK(approx_interval(br.K[3], 0.0, 0.39, 0.01));
    CHECK(approx_interval(br.K[4], r6, 0.82, 0.01));

    // band 3 bracket collapses to the single point 0
    Interval cap3 = br.J[2].intersect(br.K[2]);
    CHECK(std::abs(cap3.lo) <= 1e-8);
    CHECK(std::abs(cap3.hi) <= 1e-8);
}

TEST_CASE("empty-inner-set case of the interval formulas") {
    DomainEigendata e = domain_eigendata(fixture_domain("z2-lattice"), Potential::zero(1));
    CHECK(e.nu_o == 0);
    Brackets br = bracket_intervals(e);
    REQUIRE(br.J.size() == 1);
    // star-domain Neumann spectrum {-1/ sqrt 1... } : 3 vertices, spectrum {-1,0,1}
    CHECK(approx_interval(br.J[0], e.neumann[0], 1.0, 1e-12));
    CHECK(approx_interval(br.K[0], -1.0, e.neumann[2], 1e-12));
    CHECK(br.J[0].lo == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(br.K[0].hi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the inclusion theorem holds on the example, with flat and gap deductions") {
    BandSpectrum b = band_sweep(example_graph(), Potential::zero(5), 64);
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    BracketReport r = verify_bracketing(b, bracket_intervals(e), e);
    CHECK(r.all_included);
    REQUIRE(r.bands.size() == 5);
    CHECK(r.bands[2].flat_forced);
    CHECK(r.bands[0].gap_after);  // cap_1 ends at -0.41 < -0.21 = start of cap_2
    CHECK(r.bands[3].gap_after);  // cap_4 ends at 0.39 < 0.41 = start of cap_5
    CHECK_FALSE(r.bands[1].gap_after);  // cap_2 and cap_3 touch at 0
}

TEST_CASE("inclusion on the lattice and the shrunken negative control") {
    FundamentalGraph g = fixture_graph("z2-lattice");
    BandSpectrum b = band_sweep(g, Potential::zero(1), 8);
    DomainEigendata e = domain_eigendata(fixture_domain("z2-lattice"), Potential::zero(1));
    Brackets br = bracket_intervals(e);
    BracketReport ok = verify_bracketing(b, br, e);
    CHECK(ok.all_included);

    Brackets shrunk = br;
    shrunk.J[0] = {-0.5, 0.5};
    BracketReport bad = verify_bracketing(b, shrunk, e);
    CHECK_FALSE(bad.all_included);
}

TEST_CASE("multi-domain intersection") {
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    Brackets br = bracket_intervals(e);

    auto single = intersect_domains({br});
    auto twice = intersect_domains({br, br});
    REQUIRE(single.size() == 5);
    for (int n = 0; n < 5; ++n) {
        Interval cap = br.J[n].intersect(br.K[n]);
        CHECK(single[n].lo == cap.lo);
        CHECK(single[n].hi == cap.hi);
        CHECK(twice[n].lo == cap.lo);
        CHECK(twice[n].hi == cap.hi);
    }

    FundamentalDomain other = second_example_domain();
    DomainEigendata e2 = domain_eigendata(other, Potential::zero(5));
    Brackets br2 = bracket_intervals(e2);
    auto both = intersect_domains({br, br2});
    for (int n = 0; n < 5; ++n) {
        Interval c1 = br.J[n].intersect(br.K[n]);
        Interval c2 = br2.J[n].intersect(br2.K[n]);
        CHECK(both[n].lo >= c1.lo - 1e-12);
        CHECK(both[n].hi <= c1.hi + 1e-12);
        CHECK(both[n].lo >= c2.lo - 1e-12);
        CHECK(both[n].hi <= c2.hi + 1e-12);
    }

    // the second domain still brackets the true bands
    BandSpectrum b = band_sweep(example_graph(), Potential::zero(5), 64);
    CHECK(verify_bracketing(b, br2, e2).all_included);
}

TEST_CASE("total length bound of the example") {
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    auto [bound, tag] = total_length_bound(e);
    CHECK(tag == "est-3");  // nu = 5 < 6 = 2 nu_o
    CHECK(std::abs(bound - 1.60) <= 0.01);

    auto [sum, measure] = band_measure(band_sweep(example_graph(), Potential::zero(5), 64));
    CHECK(sum <= bound + 1e-12);
}

TEST_CASE("total length bound with empty inner set") {
    DomainEigendata e = domain_eigendata(fixture_domain("z2-lattice"), Potential::zero(1));
    auto [bound, tag] = total_length_bound(e);
    CHECK(tag == "est-2");
    // sum over n=1..nu of lambda^1_{nu1-nu+n} - lambda^1_n with nu=1, nu1=3
    CHECK(bound == doctest::Approx(e.neumann[2] - e.neumann[0]).epsilon(1e-12));
    CHECK(bound >= 2.0 - 1e-10);  // dominates the full band [-1,1]
}

TEST_CASE("Cauchy interlacing of Neumann and Dirichlet spectra") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        Potential q{std::vector<double>(5)};
        for (auto& v : q.q) v = dist(rng);
        DomainEigendata e = domain_eigendata(example_domain(), q);
        for (int n = 1; n <= e.nu_o; ++n) {
            CHECK(e.neumann[n - 1] <= e.dirichlet[n - 1] + 1e-10);
            CHECK(e.dirichlet[n - 1] <= e.neumann[n + e.nu1 - e.nu_o - 1] + 1e-10);
        }
    }
}

TEST_CASE("inclusion with randomized potentials at N = 32") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        Potential q{std::vector<double>(5)};
        for (auto& v : q.q) v = dist(rng);
        BandSpectrum b = band_sweep(example_graph(), q, 32);
        DomainEigendata e = domain_eigendata(example_domain(), q);
        BracketReport r = verify_bracketing(b, bracket_intervals(e), e);
        CHECK(r.all_included);
        auto [sum, measure] = band_measure(b);
        CHECK(sum <= r.bound + 1e-10);
    }
}

TEST_CASE("bipartite bracket symmetry") {
    // non-bipartite example graph: check is skipped
    DomainEigendata e = domain_eigendata(example_domain(), Potential::zero(5));
    SymmetryVerdict skip = bipartite_symmetry_check(bracket_intervals(e), example_graph(), e);
    CHECK_FALSE(skip.applicable);

    for (const char* name : {"z2-lattice", "hex-bipartite"}) {
        FundamentalGraph g = fixture_graph(name);
        DomainEigendata eb =
            domain_eigendata(fixture_domain(name), Potential::zero(g.num_vertices()));
        SymmetryVerdict v = bipartite_symmetry_check(bracket_intervals(eb), g, eb);
        CHECK(v.applicable);
        CHECK(v.holds);
    }
}
