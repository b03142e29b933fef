#include "graphband/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "graphband/errors.hpp"

namespace graphband {

std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NumericalError("matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("Hermitian eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> eigvals_symmetric(const Eigen::MatrixXd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw NumericalError("matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

long BandSpectrum::num_points() const {
    long n = 1;
    for (int s = 0; s < dim; ++s) n *= grid_n;
    return n;
}

std::vector<double> BandSpectrum::theta_of(long point) const {
    std::vector<double> theta(dim);
    for (int s = 0; s < dim; ++s) {
        theta[s] = 2.0 * std::numbers::pi * double(point % grid_n) / double(grid_n);
        point /= grid_n;
    }
    return theta;
}

BandSpectrum band_sweep(const FundamentalGraph& g, const Potential& q, int N,
                        const SweepOptions& opts) {
    if (N < 2 || N % 2 != 0)
        throw ValidationError("grid size must be even and >= 2");
    if (g.dimension > 3)
        throw ValidationError("torus sweep supports d <= 3");

    BandSpectrum b;
    b.nu = g.num_vertices();
    b.grid_n = N;
    b.dim = g.dimension;
    b.flat_tol = opts.flat_tol;

    const long npts = b.num_points();
    // every grid point has a preassigned slot: results are identical for any
    // thread count
    std::vector<std::vector<double>> table(npts);

    int nthreads = opts.threads > 0 ? opts.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = static_cast<int>(std::min<long>(nthreads, npts));

    auto worker = [&](int t) {
        for (long p = t; p < npts; p += nthreads) {
            table[p] = eigvals_hermitian(floquet_matrix(g, q, b.theta_of(p)));
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    b.lo.assign(b.nu, std::numeric_limits<double>::infinity());
    b.hi.assign(b.nu, -std::numeric_limits<double>::infinity());
    for (long p = 0; p < npts; ++p)
        for (int n = 0; n < b.nu; ++n) {
            b.lo[n] = std::min(b.lo[n], table[p][n]);
            b.hi[n] = std::max(b.hi[n], table[p][n]);
        }
    b.flat.resize(b.nu);
    for (int n = 0; n < b.nu; ++n) b.flat[n] = (b.hi[n] - b.lo[n] <= opts.flat_tol);
    if (opts.keep_table) b.table = std::move(table);
    return b;
}

std::vector<FlatBand> detect_flat_bands(const BandSpectrum& b, double eps,
                                        bool zero_potential) {
    std::vector<FlatBand> flats;
    for (int n = 0; n < b.nu; ++n) {
        if (b.hi[n] - b.lo[n] > eps) continue;
        const double value = 0.5 * (b.lo[n] + b.hi[n]);
        if (zero_potential && std::min(std::abs(value - 1.0), std::abs(value + 1.0)) <= eps)
            throw TheoremError("flat band detected at +-1 with zero potential");
        if (!flats.empty() && std::abs(flats.back().value - value) <= eps) {
            flats.back().multiplicity += 1;
            flats.back().bands.push_back(n);
        } else {
            flats.push_back({value, 1, {n}});
        }
    }
    return flats;
}

std::pair<double, double> band_measure(const BandSpectrum& b) {
    double sum = 0.0;
    std::vector<std::pair<double, double>> iv;
    for (int n = 0; n < b.nu; ++n) {
        sum += b.hi[n] - b.lo[n];
        iv.emplace_back(b.lo[n], b.hi[n]);
    }
    std::sort(iv.begin(), iv.end());
    double measure = 0.0;
    double cur_lo = 0.0, cur_hi = -std::numeric_limits<double>::infinity();
    bool open = false;
    for (const auto& [lo, hi] : iv) {
        if (!open || lo > cur_hi) {
            if (open) measure += cur_hi - cur_lo;
            cur_lo = lo;
            cur_hi = hi;
            open = true;
        } else {
            cur_hi = std::max(cur_hi, hi);
        }
    }
    if (open) measure += cur_hi - cur_lo;
    return {sum, measure};
}

std::vector<double> torus_oracle(const FundamentalGraph& g, const Potential& q, int N) {
    FiniteGraph t = quotient_torus(g, N);
    if (t.num_vertices > 4000)
        throw ValidationError("torus oracle size cap exceeded: " +
                              std::to_string(t.num_vertices) + " > 4000 vertices");

    // potential on the quotient comes from the argument, not the bundled one
    const long cells = t.num_vertices / g.num_vertices();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t.num_vertices, t.num_vertices);
    for (const auto& [a, b] : t.edges) {
        const double w = -1.0 / std::sqrt(double(t.degree[a]) * double(t.degree[b]));
        m(a, b) += w;
        m(b, a) += w;  // a loop lands on the diagonal twice
    }
    for (int v = 0; v < t.num_vertices; ++v) m(v, v) += q.q[v / cells];
    return eigvals_symmetric(m);
}

}  // namespace graphband
