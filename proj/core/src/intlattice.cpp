#include "graphband/intlattice.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace graphband {

std::string LatticeSpan::describe() const {
    if (full) return "Z^" + std::to_string(dim);
    std::string s = "sublattice spanned by {";
    for (std::size_t c = 0; c < basis.size(); ++c) {
        s += c ? ", (" : "(";
        for (int r = 0; r < dim; ++r)
            s += (r ? "," : "") + std::to_string(basis[c][r]);
        s += ")";
    }
    s += "}, rank " + std::to_string(basis.size());
    return s;
}

LatticeSpan lattice_span(int dim, const std::vector<IntVec>& generators) {
    // columns of M generate the lattice; column operations preserve the span
    std::vector<IntVec> cols = generators;
    const int m = static_cast<int>(cols.size());

    int pivot_col = 0;
    std::vector<int> pivot_rows;
    for (int r = 0; r < dim && pivot_col < m; ++r) {
        // gcd elimination in row r over columns >= pivot_col
        for (;;) {
            int best = -1;
            for (int j = pivot_col; j < m; ++j)
                if (cols[j][r] != 0 &&
                    (best < 0 || std::llabs(cols[j][r]) < std::llabs(cols[best][r])))
                    best = j;
            if (best < 0) break;
            std::swap(cols[pivot_col], cols[best]);
            bool clean = true;
            for (int j = pivot_col + 1; j < m; ++j) {
                if (cols[j][r] == 0) continue;
                std::int64_t q = cols[j][r] / cols[pivot_col][r];
                for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[pivot_col][i];
                if (cols[j][r] != 0) clean = false;
            }
            if (clean) break;
        }
        if (cols[pivot_col][r] != 0) {
            if (cols[pivot_col][r] < 0)
                for (int i = 0; i < dim; ++i) cols[pivot_col][i] = -cols[pivot_col][i];
            // reduce earlier columns against this pivot for a canonical basis
            for (int j = 0; j < pivot_col; ++j) {
                std::int64_t q = cols[j][r] / cols[pivot_col][r];
                if (cols[j][r] % cols[pivot_col][r] != 0 && cols[j][r] < 0) --q;
                if (q != 0)
                    for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[pivot_col][i];
            }
            pivot_rows.push_back(r);
            ++pivot_col;
        }
    }

    LatticeSpan span;
    span.dim = dim;
    const int rank = pivot_col;
    span.basis.assign(cols.begin(), cols.begin() + rank);
    span.full = (rank == dim);
    if (span.full)
        for (int c = 0; c < rank; ++c)
            if (cols[c][pivot_rows[c]] != 1) span.full = false;
    return span;
}

}  // namespace graphband
