// Command-line surface: torus band sweeps, Dirichlet/Neumann bracketing,
// the metric-graph correspondence, and a seeded property-check suite.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphband/bracketing.hpp"
#include "graphband/cattaneo.hpp"
#include "graphband/csv.hpp"
#include "graphband/errors.hpp"
#include "graphband/fixtures.hpp"
#include "graphband/floquet.hpp"
#include "graphband/spectra.hpp"

namespace fs = std::filesystem;
using namespace graphband;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitVerdict = 3;
constexpr int kExitNumerical = 4;

struct Options {
    std::string graph_path;
    std::string fixture;
    std::vector<std::string> domain_paths;
    int grid = 64;
    double flat_tol = 1e-8;
    double zmax = 2.0 * std::numbers::pi;
    std::string output = ".";
    std::string format = "csv";
    int threads = 0;
    unsigned seed = 42;
    std::string theta_arg;  // matrix subcommand
};

void add_common(CLI::App* cmd, Options& opt, bool needs_domains) {
    auto* g = cmd->add_option("--graph", opt.graph_path, "graph document path");
    auto* f = cmd->add_option("--fixture", opt.fixture, "bundled fixture name");
    g->excludes(f);
    cmd->add_option("--grid", opt.grid, "torus grid size per dimension (even)");
    cmd->add_option("--flat-tol", opt.flat_tol, "flat band width tolerance");
    cmd->add_option("--output", opt.output, "output directory");
    cmd->add_option("--format", opt.format, "csv|text")
        ->check(CLI::IsMember({"csv", "text"}));
    cmd->add_option("--threads", opt.threads, "sweep thread cap (0 = all cores)");
    cmd->add_option("--seed", opt.seed, "seed for randomized property checks");
    if (needs_domains)
        cmd->add_option("--domain", opt.domain_paths, "domain document path (repeatable)");
}

FundamentalGraph load_graph(const Options& opt) {
    if (!opt.fixture.empty()) return fixture_graph(opt.fixture);
    if (opt.graph_path.empty())
        throw ValidationError("either --graph or --fixture is required");
    FundamentalGraph g = parse_graph_file(opt.graph_path);
    validate_graph(g);
    return g;
}

std::vector<FundamentalDomain> load_domains(const Options& opt, const FundamentalGraph& g) {
    std::vector<FundamentalDomain> domains;
    for (const auto& path : opt.domain_paths)
        domains.push_back(build_domain_file(g, path));
    if (domains.empty() && !opt.fixture.empty())
        domains.push_back(build_domain(g, fixture_domain_doc(opt.fixture)));
    return domains;
}

void emit(const Options& opt, const std::string& filename,
          const std::function<void(std::ostream&)>& writer) {
    if (opt.format == "text") {
        std::cout << "== " << filename << " ==\n";
        writer(std::cout);
        return;
    }
    fs::create_directories(opt.output);
    std::ofstream out(fs::path(opt.output) / filename, std::ios::binary);
    if (!out) throw ValidationError("cannot write to output directory '" + opt.output + "'");
    writer(out);
}

int cmd_bands(const Options& opt) {
    FundamentalGraph g = load_graph(opt);
    Potential q = Potential::of_graph(g);
    SweepOptions sw{opt.flat_tol, true, opt.threads};
    BandSpectrum b = band_sweep(g, q, opt.grid, sw);
    emit(opt, "bands.csv", [&](std::ostream& o) { write_band_summary(o, b); });
    emit(opt, "grid.csv", [&](std::ostream& o) { write_grid_table(o, b); });
    auto [sum, measure] = band_measure(b);
    std::cout << "bands: " << b.nu << ", length sum " << fmt_num(sum) << ", union measure "
              << fmt_num(measure) << "\n";
    return kExitOk;
}

int cmd_bracket(const Options& opt) {
    FundamentalGraph g = load_graph(opt);
    Potential q = Potential::of_graph(g);
    std::vector<FundamentalDomain> domains = load_domains(opt, g);
    if (domains.empty())
        throw ValidationError("bracket needs at least one --domain (or a fixture)");

    BandSpectrum b = band_sweep(g, q, opt.grid, {opt.flat_tol, false, opt.threads});

    std::vector<Brackets> all;
    std::vector<BracketReport> reports;
    for (const auto& dom : domains) {
        DomainEigendata e = domain_eigendata(dom, q);
        all.push_back(bracket_intervals(e));
        reports.push_back(verify_bracketing(b, all.back(), e, 1e-8, opt.flat_tol));
    }
    std::vector<Interval> cap = intersect_domains(all);

    bool ok = true;
    for (std::size_t a = 0; a < reports.size(); ++a) {
        std::string name = a == 0 ? "bracket.csv" : "bracket_" + std::to_string(a + 1) + ".csv";
        emit(opt, name, [&](std::ostream& o) {
            const auto& r = reports[a];
            if (domains.size() == 1) {
                write_bracket_report(o, r);
            } else {
                // intersected brackets appended when several domains are given
                o << "n,J_lo,J_hi,K_lo,K_hi,cap_lo,cap_hi,band_lo,band_hi,"
                     "included,flat_forced,int_lo,int_hi\n";
                for (std::size_t n = 0; n < r.bands.size(); ++n) {
                    const auto& v = r.bands[n];
                    o << (n + 1) << ',' << fmt_num(v.J.lo) << ',' << fmt_num(v.J.hi) << ','
                      << fmt_num(v.K.lo) << ',' << fmt_num(v.K.hi) << ','
                      << fmt_num(v.cap.lo) << ',' << fmt_num(v.cap.hi) << ','
                      << fmt_num(v.band.lo) << ',' << fmt_num(v.band.hi) << ','
                      << (v.included ? 1 : 0) << ',' << (v.flat_forced ? 1 : 0) << ','
                      << fmt_num(cap[n].lo) << ',' << fmt_num(cap[n].hi) << '\n';
                }
                o << "# total_length_bound," << r.bound_case << ',' << fmt_num(r.bound)
                  << '\n';
            }
        });
        if (!reports[a].all_included) ok = false;
        std::cout << "domain " << (a + 1) << ": "
                  << (reports[a].all_included ? "all inclusions hold" : "INCLUSION FAILED")
                  << ", bound " << fmt_num(reports[a].bound) << " (" << reports[a].bound_case
                  << ")\n";
    }
    return ok ? kExitOk : kExitVerdict;
}

int cmd_metric(const Options& opt) {
    FundamentalGraph g = load_graph(opt);
    Potential q = Potential::of_graph(g);
    if (!q.is_zero())
        throw ValidationError("metric correspondence requires zero potential");
    std::vector<FundamentalDomain> domains = load_domains(opt, g);

    BandSpectrum b = band_sweep(g, q, opt.grid, {opt.flat_tol, false, opt.threads});
    MetricSpectrum m = metric_bands(b, q);

    emit(opt, "metric_bands.csv", [&](std::ostream& o) {
        o << "n,z_minus,z_plus,flat\n";
        for (int n = 0; n < m.nu; ++n)
            o << (n + 1) << ',' << fmt_num(m.lo[n]) << ',' << fmt_num(m.hi[n]) << ','
              << (m.flat[n] ? 1 : 0) << '\n';
        for (const auto& fb : m.flat_bands)
            o << "# flat_band," << fmt_num(fb.value) << ",multiplicity "
              << fb.multiplicity << '\n';
        o << "# dirichlet_flat_band," << fmt_num(m.dirichlet_flat) << '\n';
    });
    emit(opt, "unfolded.csv",
         [&](std::ostream& o) { write_unfolded(o, unfold_spectrum(m, opt.zmax)); });

    bool ok = true;
    for (std::size_t a = 0; a < domains.size(); ++a) {
        DomainEigendata e = domain_eigendata(domains[a], q);
        Brackets br = metric_brackets(e);
        BracketReport r = verify_metric_bracketing(m, br, e, 1e-8, opt.flat_tol);
        std::string name = a == 0 ? "metric.csv" : "metric_" + std::to_string(a + 1) + ".csv";
        emit(opt, name, [&](std::ostream& o) { write_metric_report(o, r); });
        if (!r.all_included) ok = false;

        auto pi1 = pi_eigenvalue_check(domains[a], VertexConditions::kNeumann);
        auto pio = pi_eigenvalue_check(domains[a], VertexConditions::kDirichlet);
        std::cout << "domain " << (a + 1) << ": "
                  << (r.all_included ? "all inclusions hold" : "INCLUSION FAILED")
                  << ", measure bound " << fmt_num(r.bound) << ", pi in Neumann spectrum: "
                  << pi1.mechanism << ", pi in Dirichlet spectrum: " << pio.mechanism
                  << "\n";
    }
    auto [sum, measure] = m.measure();
    std::cout << "metric band length sum " << fmt_num(sum) << ", union measure "
              << fmt_num(measure) << "\n";
    return ok ? kExitOk : kExitVerdict;
}

int cmd_verify(const Options& opt) {
    FundamentalGraph g = load_graph(opt);
    std::vector<FundamentalDomain> domains = load_domains(opt, g);
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> pot_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * std::numbers::pi);

    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "pass  " : "FAIL  ") << name << "\n";
        if (!ok) ++failures;
    };

    const int nu = g.num_vertices();
    Potential q0 = Potential::zero(nu);

    // oracle equivalence at N = 2 and 4
    for (int N : {2, 4}) {
        std::vector<double> oracle = torus_oracle(g, q0, N);
        BandSpectrum b = band_sweep(g, q0, N, {opt.flat_tol, true, opt.threads});
        std::vector<double> swept;
        for (const auto& row : b.table) swept.insert(swept.end(), row.begin(), row.end());
        std::sort(swept.begin(), swept.end());
        bool ok = swept.size() == oracle.size();
        for (std::size_t i = 0; ok && i < swept.size(); ++i)
            ok = std::abs(swept[i] - oracle[i]) <= 1e-8;
        check("torus oracle multiset equality, N=" + std::to_string(N), ok);
    }

    // Hermiticity and the a-priori eigenvalue range, random theta and potential
    {
        bool herm = true, range = true;
        for (int t = 0; t < 100; ++t) {
            Potential q{std::vector<double>(nu)};
            for (auto& v : q.q) v = pot_dist(rng);
            std::vector<double> theta(g.dimension);
            for (auto& v : theta) v = theta_dist(rng);
            Eigen::MatrixXcd m = floquet_matrix(g, q, theta);
            if ((m - m.adjoint()).cwiseAbs().maxCoeff() != 0.0) herm = false;
            auto ev = eigvals_hermitian(m);
            auto qs = q.sorted();
            for (int n = 0; n < nu; ++n)
                if (ev[n] < qs[n] - 1.0 - 1e-10 || ev[n] > qs[n] + 1.0 + 1e-10) range = false;
        }
        check("exact Hermiticity at random (q, theta)", herm);
        check("a-priori bound q_n-1 <= lambda_n <= q_n+1", range);
    }

    // shift covariance
    {
        Potential q{std::vector<double>(nu)};
        for (auto& v : q.q) v = pot_dist(rng);
        const double c = 0.7;
        Potential qc = q;
        for (auto& v : qc.q) v += c;
        BandSpectrum b1 = band_sweep(g, q, 8, {opt.flat_tol, false, 1});
        BandSpectrum b2 = band_sweep(g, qc, 8, {opt.flat_tol, false, 1});
        bool ok = true;
        for (int n = 0; n < nu; ++n)
            ok = ok && std::abs(b2.lo[n] - b1.lo[n] - c) <= 1e-10 &&
                 std::abs(b2.hi[n] - b1.hi[n] - c) <= 1e-10;
        check("shift covariance of the sweep", ok);
    }

    // xi round trip
    {
        bool ok = true;
        std::uniform_real_distribution<double> lam(-1.0, 1.0);
        for (int t = 0; t < 1000; ++t) {
            double l = lam(rng);
            if (std::abs(-std::cos(xi_map(l)) - l) > 1e-12) ok = false;
        }
        check("xi round trip -cos(xi(lambda)) = lambda", ok);
    }

    // bracketing inclusion + interlacing with randomized potentials
    if (!domains.empty()) {
        bool incl = true, inter = true;
        for (int t = 0; t < 100 && (incl || inter); ++t) {
            Potential q{std::vector<double>(nu)};
            for (auto& v : q.q) v = pot_dist(rng);
            BandSpectrum b = band_sweep(g, q, 32, {opt.flat_tol, false, opt.threads});
            for (const auto& dom : domains) {
                DomainEigendata e = domain_eigendata(dom, q);
                BracketReport r = verify_bracketing(b, bracket_intervals(e), e);
                if (!r.all_included) incl = false;
                for (int n = 1; n <= e.nu_o; ++n) {
                    if (e.neumann[n - 1] > e.dirichlet[n - 1] + 1e-10) inter = false;
                    if (e.dirichlet[n - 1] > e.neumann[n + e.nu1 - e.nu_o - 1] + 1e-10)
                        inter = false;
                }
            }
        }
        check("bracket inclusion with randomized potentials", incl);
        check("Cauchy interlacing of domain spectra", inter);

        // bipartite eta symmetry at q = 0
        DomainEigendata e = domain_eigendata(domains.front(), q0);
        SymmetryVerdict sv = bipartite_symmetry_check(bracket_intervals(e), g, e);
        if (sv.applicable)
            check("bipartite bracket symmetry (" + sv.note + ")", sv.holds);
        else
            std::cout << "skip  bipartite bracket symmetry: " << sv.note << "\n";
    }

    std::cout << (failures == 0 ? "all checks passed" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? kExitOk : kExitVerdict;
}

int cmd_matrix(const Options& opt) {
    FundamentalGraph g = load_graph(opt);
    std::vector<double> theta(g.dimension, 0.0);
    if (!opt.theta_arg.empty()) {
        std::stringstream ss(opt.theta_arg);
        std::string part;
        std::size_t i = 0;
        while (std::getline(ss, part, ',') && i < theta.size()) theta[i++] = std::stod(part);
    }
    write_matrix(std::cout, floquet_matrix(g, Potential::of_graph(g), theta));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral bands of periodic graphs via Floquet torus sweeps, "
                 "Dirichlet/Neumann bracketing and the metric correspondence"};
    app.require_subcommand(1);
    Options opt;

    auto* bands = app.add_subcommand("bands", "band spectrum of the periodic operator");
    add_common(bands, opt, false);
    auto* bracket = app.add_subcommand("bracket", "Dirichlet/Neumann band bracketing");
    add_common(bracket, opt, true);
    auto* metric = app.add_subcommand("metric", "metric-graph momentum spectrum");
    add_common(metric, opt, true);
    metric->add_option("--zmax", opt.zmax, "unfold the momentum spectrum up to this value");
    auto* verify = app.add_subcommand("verify", "run the property-check suite");
    add_common(verify, opt, true);
    auto* matrix = app.add_subcommand("matrix", "print the fiber matrix as CSV");
    add_common(matrix, opt, false);
    matrix->add_option("--theta", opt.theta_arg, "comma-separated quasimomentum");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bands->parsed()) return cmd_bands(opt);
        if (bracket->parsed()) return cmd_bracket(opt);
        if (metric->parsed()) return cmd_metric(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (matrix->parsed()) return cmd_matrix(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const TheoremError& e) {
        std::cerr << "verdict failure: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
