#ifndef GRAPHBAND_BRACKETING_HPP
#define GRAPHBAND_BRACKETING_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphband/domain.hpp"
#include "graphband/spectra.hpp"

namespace graphband {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    Interval intersect(const Interval& o) const;
};

// Sorted Neumann/Dirichlet spectra of a fundamental domain plus the sorted
// potential; everything the bracket construction needs.
struct DomainEigendata {
    int nu = 0;    // fundamental vertices
    int nu1 = 0;   // domain vertices
    int nu_o = 0;  // inner vertices
    std::vector<double> neumann;    // lambda^1, nu1 values
    std::vector<double> dirichlet;  // lambda^o, nu_o values
    std::vector<double> q_sorted;   // q-bullet, nu values
};

// Neumann operator on the domain: off-diagonal -kappa^1_jk / sqrt(kappa^1_j
// kappa^1_k), diagonal q of the vertex class.  Domain degrees, not periodic
// ones.  Loops count twice.
Eigen::MatrixXd neumann_matrix(const FundamentalDomain& dom, const Potential& q);

// Principal submatrix of the Neumann matrix on the inner vertices.
Eigen::MatrixXd dirichlet_matrix(const FundamentalDomain& dom, const Potential& q);

DomainEigendata domain_eigendata(const FundamentalDomain& dom, const Potential& q);

struct Brackets {
    std::vector<Interval> J, K;  // nu entries each
};

Brackets bracket_intervals(const DomainEigendata& e);

struct BandVerdict {
    Interval J, K, cap;
    Interval band;
    bool included = false;
    bool flat_forced = false;  // |J cap K| <= flat_tol
    bool gap_after = false;    // cap hi < next cap lo
};

struct BracketReport {
    std::vector<BandVerdict> bands;
    bool all_included = false;
    double bound = 0.0;         // total-length bound
    std::string bound_case;     // "est-2" or "est-3"
};

// Per-band inclusion check of the computed bands in J_n cap K_n.  A failed
// inclusion marks the report FAILED; callers treat that as a bug signal.
BracketReport verify_bracketing(const BandSpectrum& b, const Brackets& brackets,
                                const DomainEigendata& e, double tol = 1e-8,
                                double flat_tol = 1e-8);

// Intersection across domains, per band.  Empty intersection is a bug signal.
std::vector<Interval> intersect_domains(const std::vector<Brackets>& all);

// Upper bound on the sum of band lengths; case "est-2" when nu >= 2 nu_o,
// "est-3" otherwise.
std::pair<double, std::string> total_length_bound(const DomainEigendata& e);

struct SymmetryVerdict {
    bool applicable = false;
    bool holds = false;
    std::string note;
};

// For bipartite graphs with zero potential and a domain whose spectra share
// the symmetry: K_n = -J_{nu-n+1} reflected through 0.
SymmetryVerdict bipartite_symmetry_check(const Brackets& brackets,
                                         const FundamentalGraph& g,
                                         const DomainEigendata& e,
                                         double tol = 1e-8);

}  // namespace graphband

#endif
