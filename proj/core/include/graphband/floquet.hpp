#ifndef GRAPHBAND_FLOQUET_HPP
#define GRAPHBAND_FLOQUET_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "graphband/graph.hpp"

namespace graphband {

// Per-vertex potential values q_j, in fundamental vertex order.
struct Potential {
    std::vector<double> q;

    static Potential zero(int nu) { return Potential{std::vector<double>(nu, 0.0)}; }
    static Potential of_graph(const FundamentalGraph& g) { return Potential{g.potential}; }

    std::vector<double> sorted() const;  // q-bullet, nondecreasing
    bool is_zero() const;
};

// Floquet fiber matrix H(theta) = Delta(theta) + diag(q).  Off-diagonal
// entries sum e^{i<tau,theta>} over oriented edges; loops land on the
// diagonal as 2 cos<tau,theta>.  Assembled exactly Hermitian: upper triangle
// from oriented edges, mirrored by conjugation.
Eigen::MatrixXcd floquet_matrix(const FundamentalGraph& g, const Potential& q,
                                const std::vector<double>& theta);

// det(H(theta) - lambda I) via complex LU with partial pivoting.
std::complex<double> char_poly_eval(const FundamentalGraph& g, const Potential& q,
                                    const std::vector<double>& theta, double lambda);

}  // namespace graphband

#endif
