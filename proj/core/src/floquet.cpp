#include "graphband/floquet.hpp"

#include <algorithm>
#include <cmath>

#include "graphband/errors.hpp"

namespace graphband {

std::vector<double> Potential::sorted() const {
    std::vector<double> s = q;
    std::sort(s.begin(), s.end());
    return s;
}

bool Potential::is_zero() const {
    return std::all_of(q.begin(), q.end(), [](double x) { return x == 0.0; });
}

Eigen::MatrixXcd floquet_matrix(const FundamentalGraph& g, const Potential& q,
                                const std::vector<double>& theta) {
    const int nu = g.num_vertices();
    if (static_cast<int>(theta.size()) != g.dimension)
        throw ValidationError("theta has length " + std::to_string(theta.size()) +
                              ", expected " + std::to_string(g.dimension));
    if (static_cast<int>(q.q.size()) != nu)
        throw ValidationError("potential length does not match vertex count");

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nu, nu);
    for (const auto& e : g.edges) {
        double phase = 0.0;
        for (int s = 0; s < g.dimension; ++s) phase += double(e.index[s]) * theta[s];
        const double w = -1.0 / std::sqrt(double(g.degree[e.from]) * double(g.degree[e.to]));
        if (e.from == e.to) {
            // both orientations: e^{i phi} + e^{-i phi}
            m(e.from, e.from) += 2.0 * w * std::cos(phase);
        } else {
            int j = e.from, k = e.to;
            std::complex<double> val = w * std::exp(std::complex<double>(0.0, phase));
            if (j > k) {
                std::swap(j, k);
                val = std::conj(val);
            }
            m(j, k) += val;  // upper triangle only
        }
    }
    // mirror by conjugation: Hermitian bit-exactly
    for (int j = 0; j < nu; ++j)
        for (int k = j + 1; k < nu; ++k) m(k, j) = std::conj(m(j, k));
    for (int j = 0; j < nu; ++j) m(j, j) += q.q[j];
    return m;
}

std::complex<double> char_poly_eval(const FundamentalGraph& g, const Potential& q,
                                    const std::vector<double>& theta, double lambda) {
    Eigen::MatrixXcd m = floquet_matrix(g, q, theta);
    m.diagonal().array() -= lambda;
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

}  // namespace graphband
