#ifndef GRAPHBAND_INTLATTICE_HPP
#define GRAPHBAND_INTLATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphband {

using IntVec = std::vector<std::int64_t>;

// Sublattice of Z^d spanned by a set of integer vectors, described by its
// column-style Hermite normal form basis.
struct LatticeSpan {
    int dim = 0;
    std::vector<IntVec> basis;   // Hermite basis columns, rank = basis.size()
    bool full = false;           // true iff the span equals Z^d

    std::string describe() const;
};

// Column reduction of the generator matrix to Hermite form; the span is all
// of Z^d iff there are d pivots and every pivot equals 1 (equivalently all
// Smith elementary divisors are 1).
LatticeSpan lattice_span(int dim, const std::vector<IntVec>& generators);

}  // namespace graphband

#endif
