#ifndef GRAPHBAND_DOMAIN_HPP
#define GRAPHBAND_DOMAIN_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphband/graph.hpp"

namespace graphband {

// Vertex of a fundamental domain: a copy of fundamental vertex `base`
// translated by the integer cell offset.
struct DomainVertex {
    int base = 0;
    IntVec cell;

    bool operator==(const DomainVertex& o) const { return base == o.base && cell == o.cell; }
};

// A finite connected representative of the periodic graph: one copy of each
// fundamental edge, all cell-0 vertices present.  Vertices are stored in
// canonical order: inner vertices first (in fundamental order), boundary after.
struct FundamentalDomain {
    FundamentalGraph graph;                 // the underlying periodic graph
    std::vector<DomainVertex> vertices;     // V_1, inner-first ordering
    std::vector<std::pair<int, int>> edges; // E_1, indices into `vertices`
    std::vector<int> domain_degree;         // kappa^1, loops counted twice
    int num_inner = 0;                      // nu_o; vertices[0..num_inner) are V_o

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    std::string vertex_label(int k) const;
};

// Domain document: {"vertices": [{"base","cell"}...] (cell-0 copies implicit),
//                   "edges": [[{base,cell},{base,cell}], ...]}
FundamentalDomain build_domain(const FundamentalGraph& g, const nlohmann::json& doc);
FundamentalDomain build_domain_file(const FundamentalGraph& g, const std::string& path);

}  // namespace graphband

#endif
