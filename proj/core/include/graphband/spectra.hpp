#ifndef GRAPHBAND_SPECTRA_HPP
#define GRAPHBAND_SPECTRA_HPP

#include <vector>

#include <Eigen/Dense>

#include "graphband/floquet.hpp"
#include "graphband/graph.hpp"

namespace graphband {

// Sorted eigenvalues of a Hermitian matrix.  Throws NumericalError if the
// input is asymmetric beyond 1e-12.
std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& m);
std::vector<double> eigvals_symmetric(const Eigen::MatrixXd& m);

struct SweepOptions {
    double flat_tol = 1e-8;
    bool keep_table = false;
    int threads = 0;  // 0 = hardware concurrency
};

// Bands of the n-th sorted Floquet eigenvalue over the sampled torus grid.
// Endpoints are grid extrema: inner approximations of the true bands.
struct BandSpectrum {
    int nu = 0;
    int grid_n = 0;
    int dim = 0;
    double flat_tol = 1e-8;
    std::vector<double> lo, hi;  // lambda_n^-/+, n = 0..nu-1
    std::vector<bool> flat;
    std::vector<std::vector<double>> table;  // optional: [grid point][band]

    long num_points() const;
    std::vector<double> theta_of(long point) const;  // grid point -> theta
};

// Evaluates lambda_n(theta) on {2 pi k / N}^d.  N must be even so the corner
// momenta {0, pi}^d, where band extrema occur on the bundled examples, are
// sampled exactly.  d <= 3.
BandSpectrum band_sweep(const FundamentalGraph& g, const Potential& q, int N,
                        const SweepOptions& opts = {});

struct FlatBand {
    double value = 0.0;
    int multiplicity = 0;
    std::vector<int> bands;  // 0-based band numbers
};

// Bands with width <= eps, merged by value.  With zero potential a flat
// value at +-1 contradicts the basic spectral facts and raises an error.
std::vector<FlatBand> detect_flat_bands(const BandSpectrum& b, double eps,
                                        bool zero_potential);

// (sum of band lengths, Lebesgue measure of the union)
std::pair<double, double> band_measure(const BandSpectrum& b);

// Full spectrum of the quotient-torus operator: the brute-force multiset
// oracle for the sweep (discrete Bloch theory makes them equal).
std::vector<double> torus_oracle(const FundamentalGraph& g, const Potential& q, int N);

}  // namespace graphband

#endif
