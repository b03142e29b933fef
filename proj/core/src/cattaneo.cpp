#include "graphband/cattaneo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "graphband/errors.hpp"

namespace graphband {

namespace {
constexpr double kPi = std::numbers::pi;
}

double xi_map(double lambda) {
    if (std::abs(lambda) > 1.0 + 1e-12)
        throw ValidationError("xi_map argument " + std::to_string(lambda) +
                              " outside [-1,1]");
    // snap to the endpoints: arccos has infinite slope at +-1, so eigensolver
    // round-off below resolution would otherwise blow up to ~1e-8 in z
    if (lambda >= 1.0 - 1e-12) return kPi;
    if (lambda <= -1.0 + 1e-12) return 0.0;
    return std::acos(-lambda);
}

std::pair<double, double> MetricSpectrum::measure() const {
    double sum = 0.0;
    std::vector<std::pair<double, double>> iv;
    for (int n = 0; n < nu; ++n) {
        sum += hi[n] - lo[n];
        iv.emplace_back(lo[n], hi[n]);
    }
    std::sort(iv.begin(), iv.end());
    double measure = 0.0, cur_lo = 0.0, cur_hi = -1.0;
    bool open = false;
    for (const auto& [l, h] : iv) {
        if (!open || l > cur_hi) {
            if (open) measure += cur_hi - cur_lo;
            cur_lo = l;
            cur_hi = h;
            open = true;
        } else {
            cur_hi = std::max(cur_hi, h);
        }
    }
    if (open) measure += cur_hi - cur_lo;
    return {sum, measure};
}

MetricSpectrum metric_bands(const BandSpectrum& b, const Potential& q) {
    if (!q.is_zero())
        throw ValidationError("metric correspondence requires zero potential");

    MetricSpectrum m;
    m.nu = b.nu;
    m.dirichlet_flat = kPi;
    for (int n = 0; n < b.nu; ++n) {
        m.lo.push_back(xi_map(b.lo[n]));
        m.hi.push_back(xi_map(b.hi[n]));
        m.flat.push_back(b.flat[n]);
    }
    // discrete flat bands map through xi, except mu = 1 (absorbed by the
    // Dirichlet flat band pi)
    for (const auto& fb : detect_flat_bands(b, b.flat_tol, true)) {
        if (std::abs(fb.value - 1.0) <= b.flat_tol) continue;
        m.flat_bands.push_back({xi_map(fb.value), fb.multiplicity});
    }
    return m;
}

UnfoldedSpectrum unfold_spectrum(const MetricSpectrum& m, double z_max) {
    UnfoldedSpectrum u;
    std::vector<Interval> raw;
    std::vector<double> points;

    auto add_interval = [&](double lo, double hi) {
        if (lo >= z_max) return;
        hi = std::min(hi, z_max);
        if (hi > lo) raw.push_back({lo, hi});
    };
    auto add_point = [&](double z) {
        if (z >= 0.0 && z <= z_max) points.push_back(z);
    };

    for (double base = 0.0; base <= z_max; base += 2.0 * kPi) {
        for (int n = 0; n < m.nu; ++n) {
            if (m.flat[n]) continue;
            add_interval(base + m.lo[n], base + m.hi[n]);          // [0,pi] copy
            add_interval(base + 2.0 * kPi - m.hi[n], base + 2.0 * kPi - m.lo[n]);
        }
        for (int n = 0; n < m.nu; ++n) {
            if (!m.flat[n]) continue;
            add_point(base + m.lo[n]);
            add_point(base + 2.0 * kPi - m.hi[n]);
        }
    }
    for (int k = 1; k * kPi <= z_max + 1e-12; ++k) add_point(k * kPi);

    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (const auto& iv : raw) {
        if (!u.bands.empty() && iv.lo <= u.bands.back().hi)
            u.bands.back().hi = std::max(u.bands.back().hi, iv.hi);
        else
            u.bands.push_back(iv);
    }
    std::sort(points.begin(), points.end());
    for (double p : points)
        if (u.flat_points.empty() || p - u.flat_points.back() > 1e-12)
            u.flat_points.push_back(p);
    return u;
}

Brackets metric_brackets(const DomainEigendata& e) {
    if (!std::all_of(e.q_sorted.begin(), e.q_sorted.end(),
                     [](double q) { return q == 0.0; }))
        throw ValidationError("metric brackets require zero potential");
    if (e.nu_o > 0 && e.dirichlet[e.nu_o - 1] >= 1.0)
        throw ValidationError("lambda^o_{nu_o} >= 1: metric correspondence assumption violated");

    Brackets br;
    for (int n = 1; n <= e.nu; ++n) {
        Interval J, K;
        if (n <= e.nu_o)
            J = {xi_map(e.neumann[n - 1]), xi_map(e.dirichlet[n - 1])};
        else
            J = {xi_map(e.neumann[n - 1]), kPi};
        if (n <= e.nu - e.nu_o)
            K = {0.0, xi_map(e.neumann[n + e.nu1 - e.nu - 1])};
        else
            K = {xi_map(e.dirichlet[n - e.nu + e.nu_o - 1]),
                 xi_map(e.neumann[n + e.nu1 - e.nu - 1])};
        if (J.lo > J.hi || K.lo > K.hi)
            throw NumericalError("ill-ordered metric bracket at band " + std::to_string(n));
        br.J.push_back(J);
        br.K.push_back(K);
    }
    return br;
}

BracketReport verify_metric_bracketing(const MetricSpectrum& m, const Brackets& brackets,
                                       const DomainEigendata& e, double tol,
                                       double flat_tol) {
    if (m.nu != static_cast<int>(brackets.J.size()))
        throw ValidationError("band count does not match bracket count");

    BracketReport report;
    report.all_included = true;
    for (int n = 0; n < m.nu; ++n) {
        BandVerdict v;
        v.J = brackets.J[n];
        v.K = brackets.K[n];
        v.cap = v.J.intersect(v.K);
        v.band = {m.lo[n], m.hi[n]};
        v.included = (v.band.lo >= v.cap.lo - tol) && (v.band.hi <= v.cap.hi + tol);
        v.flat_forced = (v.cap.length() <= flat_tol);
        if (!v.included) report.all_included = false;
        report.bands.push_back(v);
    }
    for (int n = 0; n + 1 < m.nu; ++n)
        report.bands[n].gap_after = (report.bands[n].cap.hi < report.bands[n + 1].cap.lo);

    // the bound chain ends in the momentum variable
    report.bound = metric_measure_bound(total_length_bound(e).first);
    report.bound_case = "measure";
    return report;
}

double metric_measure_bound(double discrete_sum) {
    if (discrete_sum < 0.0)
        throw ValidationError("negative band length sum");
    return kPi / std::sqrt(2.0) * std::sqrt(discrete_sum);
}

namespace {

// rank of a small dense matrix, Gaussian elimination, fixed pivot threshold
int matrix_rank(std::vector<std::vector<double>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        double best = 1e-10;
        for (int r = rank; r < rows; ++r)
            if (std::abs(m[r][c]) > best) {
                best = std::abs(m[r][c]);
                p = r;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0.0) continue;
            const double f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool domain_is_bipartite(const FundamentalDomain& dom) {
    std::vector<int> color(dom.num_vertices(), -1);
    std::queue<int> work;
    color[0] = 0;
    work.push(0);
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        for (const auto& [a, b] : dom.edges) {
            if (a == b && (a == u)) return false;  // loop: odd cycle
            int other = (a == u) ? b : (b == u) ? a : -1;
            if (other < 0) continue;
            if (color[other] < 0) {
                color[other] = 1 - color[u];
                work.push(other);
            } else if (color[other] == color[u]) {
                return false;
            }
        }
    }
    return true;  // domain is connected by construction
}

}  // namespace

PiEigenvalueCheck pi_eigenvalue_check(const FundamentalDomain& dom, VertexConditions mode) {
    const int num_constraints =
        (mode == VertexConditions::kNeumann) ? dom.num_vertices() : dom.num_inner;
    const int num_edges = static_cast<int>(dom.edges.size());

    // edge amplitudes c_e with sum_{e at v} c_e = 0 at every constrained
    // vertex (loops twice); a nontrivial kernel gives a sin(pi t) eigenfunction
    std::vector<std::vector<double>> incidence(
        num_constraints, std::vector<double>(num_edges, 0.0));
    for (int e = 0; e < num_edges; ++e) {
        const auto& [a, b] = dom.edges[e];
        if (a < num_constraints) incidence[a][e] += 1.0;
        if (b < num_constraints) incidence[b][e] += 1.0;
    }

    PiEigenvalueCheck check;
    if (matrix_rank(incidence) < num_edges) {
        check.present = true;
        check.mechanism = "incidence-kernel";
        return check;
    }
    if (mode == VertexConditions::kNeumann && domain_is_bipartite(dom)) {
        check.present = true;
        check.mechanism = "bipartite";
        return check;
    }
    check.mechanism = "not-detected";
    return check;
}

}  // namespace graphband
