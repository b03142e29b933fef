#ifndef GRAPHBAND_CATTANEO_HPP
#define GRAPHBAND_CATTANEO_HPP

#include <string>
#include <vector>

#include "graphband/bracketing.hpp"
#include "graphband/domain.hpp"
#include "graphband/spectra.hpp"

namespace graphband {

// xi(lambda) = arccos(-lambda): increasing bijection [-1,1] -> [0,pi].
// Inputs within 1e-12 of +-1 are clamped; anything further out is an error.
double xi_map(double lambda);

struct MetricFlatBand {
    double value = 0.0;
    int multiplicity = 0;
};

// Bands of the momentum operator on [0,pi]: the image of the discrete bands
// under xi, plus flat bands and the always-present Dirichlet flat band pi.
struct MetricSpectrum {
    int nu = 0;
    std::vector<double> lo, hi;  // z_n^-/+ in [0,pi]
    std::vector<bool> flat;
    std::vector<MetricFlatBand> flat_bands;  // from discrete flat bands
    double dirichlet_flat = 0.0;             // pi

    std::pair<double, double> measure() const;  // (band length sum, union)
};

// Requires zero potential: the metric correspondence is for the Laplacian.
MetricSpectrum metric_bands(const BandSpectrum& b, const Potential& q);

struct UnfoldedSpectrum {
    std::vector<Interval> bands;      // merged, sorted
    std::vector<double> flat_points;  // includes every pi*n <= z_max
};

// Reflects [0,pi] about pi, tiles with period 2*pi up to z_max.
UnfoldedSpectrum unfold_spectrum(const MetricSpectrum& m, double z_max);

// J_n/K_n on [0,pi], built from xi of the domain eigenvalues.  Requires
// zero potential and lambda^o_{nu_o} < 1.
Brackets metric_brackets(const DomainEigendata& e);

BracketReport verify_metric_bracketing(const MetricSpectrum& m, const Brackets& brackets,
                                       const DomainEigendata& e, double tol = 1e-8,
                                       double flat_tol = 1e-8);

// (pi/sqrt 2) * sqrt(discrete band length sum): bound on the metric measure.
double metric_measure_bound(double discrete_sum);

enum class VertexConditions { kNeumann, kDirichlet };

// Is pi an eigenvalue of the momentum operator on the domain?  Tests the two
// sufficient mechanisms: a sin(pi t) edge pattern with vanishing vertex
// values satisfying the flux balance, or (Neumann only) a bipartite domain.
// "present = false" means not detected, never certified absent.
struct PiEigenvalueCheck {
    bool present = false;
    std::string mechanism;  // "incidence-kernel", "bipartite" or "not-detected"
};

PiEigenvalueCheck pi_eigenvalue_check(const FundamentalDomain& dom, VertexConditions mode);

}  // namespace graphband

#endif
