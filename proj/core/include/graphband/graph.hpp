#ifndef GRAPHBAND_GRAPH_HPP
#define GRAPHBAND_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphband/intlattice.hpp"
#include "graphband/rational.hpp"

namespace graphband {

// Unoriented edge of the fundamental graph.  The index vector records which
// lattice cell the edge crosses; both orientations (tau and -tau) are implied.
struct Edge {
    int from = 0;
    int to = 0;
    IntVec index;
};

// A Z^d-periodic graph in finite form: the quotient graph plus edge indices.
// Loops and multi-edges are allowed; loops count twice toward the degree.
struct FundamentalGraph {
    int dimension = 0;
    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;
    std::vector<double> potential;  // q_j per vertex, default 0
    std::vector<int> degree;        // kappa_j, loops counted twice

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int vertex_id(const std::string& name) const;  // throws ValidationError
    bool zero_potential() const;
};

FundamentalGraph parse_graph(const nlohmann::json& doc);
FundamentalGraph parse_graph_file(const std::string& path);

// Connectivity of the lifted periodic graph: the quotient must be connected
// and the cycle-basis edge indices must span Z^d.  Throws ValidationError
// with the offending sublattice otherwise.
void validate_graph(const FundamentalGraph& g);

// 2-coloring of the lifted graph: vertex parities p plus period parities s
// such that p(u) + p(v) + <tau, s> = 1 (mod 2) on every edge.
struct BipartiteCertificate {
    bool bipartite = false;
    std::vector<int> vertex_parity;  // p(v_j) in {0,1}
    std::vector<int> period_parity;  // s in {0,1}^d
};

BipartiteCertificate is_bipartite(const FundamentalGraph& g);

// Plain finite graph, used as the brute-force oracle target.
struct FiniteGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // unoriented, loops as (v,v)
    std::vector<int> degree;                 // loops counted twice
    std::vector<double> potential;
};

// Quotient of the lifted graph by (N Z)^d: vertices (j, m) with
// m in (Z/NZ)^d, each fundamental edge wrapped modulo N.
FiniteGraph quotient_torus(const FundamentalGraph& g, int N);

// --- embedded input ---------------------------------------------------------

struct RationalEmbedding {
    int dimension = 0;
    std::vector<std::string> names;
    std::vector<RationalVec> coords;  // in the period basis
};

struct EmbeddedEdge {
    int from = 0;
    int to = 0;
    std::optional<RationalVec> to_coord;  // explicit translated endpoint
};

// tau(e) = floor(v) - floor(u), componentwise, exact.
IntVec compute_edge_index(const RationalVec& u, const RationalVec& v);

// Fundamental vertices are the distinct fractional parts (in first-appearance
// order); each input edge contributes one fundamental edge with computed index.
FundamentalGraph lift_embedded_graph(const RationalEmbedding& emb,
                                     const std::vector<EmbeddedEdge>& edges);

}  // namespace graphband

#endif
