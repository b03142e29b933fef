#include "graphband/bracketing.hpp"

#include <algorithm>
#include <cmath>

#include "graphband/errors.hpp"

namespace graphband {

Interval Interval::intersect(const Interval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
}

Eigen::MatrixXd neumann_matrix(const FundamentalDomain& dom, const Potential& q) {
    const int n1 = dom.num_vertices();
    if (static_cast<int>(q.q.size()) != dom.graph.num_vertices())
        throw ValidationError("potential length does not match vertex count");

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1, n1);
    for (const auto& [a, b] : dom.edges) {
        const double w =
            -1.0 / std::sqrt(double(dom.domain_degree[a]) * double(dom.domain_degree[b]));
        m(a, b) += w;
        m(b, a) += w;  // loops land twice on the diagonal
    }
    // q^1_k = q_j for v_k in the class of v_j
    for (int k = 0; k < n1; ++k) m(k, k) += q.q[dom.vertices[k].base];
    return m;
}

Eigen::MatrixXd dirichlet_matrix(const FundamentalDomain& dom, const Potential& q) {
    return neumann_matrix(dom, q).topLeftCorner(dom.num_inner, dom.num_inner);
}

DomainEigendata domain_eigendata(const FundamentalDomain& dom, const Potential& q) {
    DomainEigendata e;
    e.nu = dom.graph.num_vertices();
    e.nu1 = dom.num_vertices();
    e.nu_o = dom.num_inner;
    e.neumann = eigvals_symmetric(neumann_matrix(dom, q));
    if (e.nu_o > 0) e.dirichlet = eigvals_symmetric(dirichlet_matrix(dom, q));
    e.q_sorted = q.sorted();
    return e;
}

Brackets bracket_intervals(const DomainEigendata& e) {
    if (static_cast<int>(e.neumann.size()) != e.nu1 ||
        static_cast<int>(e.dirichlet.size()) != e.nu_o ||
        static_cast<int>(e.q_sorted.size()) != e.nu || e.nu1 < e.nu)
        throw ValidationError("inconsistent eigendata lengths");

    Brackets br;
    for (int n = 1; n <= e.nu; ++n) {  // 1-based, as the index arithmetic reads
        Interval J, K;
        if (n <= e.nu_o)
            J = {e.neumann[n - 1], e.dirichlet[n - 1]};
        else
            J = {e.neumann[n - 1], e.q_sorted[n - 1] + 1.0};
        if (n <= e.nu - e.nu_o)
            K = {e.q_sorted[n - 1] - 1.0, e.neumann[n + e.nu1 - e.nu - 1]};
        else
            K = {e.dirichlet[n - e.nu + e.nu_o - 1], e.neumann[n + e.nu1 - e.nu - 1]};
        if (J.lo > J.hi || K.lo > K.hi)
            throw NumericalError("ill-ordered bracket interval at band " + std::to_string(n));
        br.J.push_back(J);
        br.K.push_back(K);
    }
    return br;
}

BracketReport verify_bracketing(const BandSpectrum& b, const Brackets& brackets,
                                const DomainEigendata& e, double tol, double flat_tol) {
    if (b.nu != static_cast<int>(brackets.J.size()))
        throw ValidationError("band count does not match bracket count");

    BracketReport report;
    report.all_included = true;
    for (int n = 0; n < b.nu; ++n) {
        BandVerdict v;
        v.J = brackets.J[n];
        v.K = brackets.K[n];
        v.cap = v.J.intersect(v.K);
        v.band = {b.lo[n], b.hi[n]};
        v.included = (v.band.lo >= v.cap.lo - tol) && (v.band.hi <= v.cap.hi + tol);
        v.flat_forced = (v.cap.length() <= flat_tol);
        if (!v.included) report.all_included = false;
        report.bands.push_back(v);
    }
    for (int n = 0; n + 1 < b.nu; ++n)
        report.bands[n].gap_after = (report.bands[n].cap.hi < report.bands[n + 1].cap.lo);

    auto [bound, tag] = total_length_bound(e);
    report.bound = bound;
    report.bound_case = tag;
    return report;
}

std::vector<Interval> intersect_domains(const std::vector<Brackets>& all) {
    if (all.empty()) throw ValidationError("no bracket sets to intersect");
    const std::size_t nu = all.front().J.size();
    std::vector<Interval> out;
    for (std::size_t n = 0; n < nu; ++n) {
        Interval cap = all.front().J[n].intersect(all.front().K[n]);
        for (std::size_t a = 1; a < all.size(); ++a) {
            if (all[a].J.size() != nu)
                throw ValidationError("bracket sets have mismatched band counts");
            cap = cap.intersect(all[a].J[n]).intersect(all[a].K[n]);
        }
        if (cap.lo > cap.hi)
            throw TheoremError("empty multi-domain intersection at band " +
                               std::to_string(n + 1));
        out.push_back(cap);
    }
    return out;
}

std::pair<double, std::string> total_length_bound(const DomainEigendata& e) {
    const auto& l1 = e.neumann;
    const auto& lo = e.dirichlet;
    if (e.nu >= 2 * e.nu_o) {
        double sum = 0.0;
        for (int n = 1; n <= e.nu - e.nu_o; ++n)
            sum += l1[e.nu1 - (e.nu - e.nu_o) + n - 1] - l1[n - 1];
        return {sum, "est-2"};
    }
    double sum = 0.0;
    for (int n = 1; n <= e.nu - e.nu_o; ++n)
        sum += lo[n - 1] - lo[(2 * e.nu_o - e.nu) + n - 1];
    for (int n = 1; n <= e.nu_o; ++n)
        sum -= l1[n - 1] - l1[(e.nu1 - e.nu_o) + n - 1];
    return {sum, "est-3"};
}

SymmetryVerdict bipartite_symmetry_check(const Brackets& brackets,
                                         const FundamentalGraph& g,
                                         const DomainEigendata& e, double tol) {
    SymmetryVerdict v;
    if (!std::all_of(e.q_sorted.begin(), e.q_sorted.end(),
                     [](double q) { return q == 0.0; })) {
        v.note = "skipped: nonzero potential";
        return v;
    }
    if (!is_bipartite(g).bipartite) {
        v.note = "skipped: graph is not bipartite";
        return v;
    }
    // the domain spectra must carry the symmetry too; checked, not assumed
    for (std::size_t k = 0; k < e.neumann.size(); ++k)
        if (std::abs(e.neumann[k] + e.neumann[e.neumann.size() - 1 - k]) > tol) {
            v.note = "skipped: domain Neumann spectrum not symmetric about 0";
            return v;
        }
    for (std::size_t k = 0; k < e.dirichlet.size(); ++k)
        if (std::abs(e.dirichlet[k] + e.dirichlet[e.dirichlet.size() - 1 - k]) > tol) {
            v.note = "skipped: domain Dirichlet spectrum not symmetric about 0";
            return v;
        }

    v.applicable = true;
    v.holds = true;
    const int nu = static_cast<int>(brackets.J.size());
    for (int n = 0; n < nu; ++n) {
        const Interval& K = brackets.K[n];
        const Interval& J = brackets.J[nu - 1 - n];
        if (std::abs(K.lo + J.hi) > tol || std::abs(K.hi + J.lo) > tol) {
            v.holds = false;
            v.note = "K_" + std::to_string(n + 1) + " != -J_" + std::to_string(nu - n);
            return v;
        }
    }
    v.note = "K_n = -J_{nu-n+1} for all n";
    return v;
}

}  // namespace graphband
