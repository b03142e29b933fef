#include "graphband/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>

#include <nlohmann/json.hpp>

#include "graphband/errors.hpp"

namespace graphband {

using nlohmann::json;

int FundamentalGraph::vertex_id(const std::string& name) const {
    for (int j = 0; j < num_vertices(); ++j)
        if (vertex_names[j] == name) return j;
    throw ValidationError("unknown vertex id '" + name + "'");
}

bool FundamentalGraph::zero_potential() const {
    return std::all_of(potential.begin(), potential.end(),
                       [](double q) { return q == 0.0; });
}

namespace {

void compute_degrees(FundamentalGraph& g) {
    g.degree.assign(g.num_vertices(), 0);
    for (const auto& e : g.edges) {
        g.degree[e.from] += 1;
        g.degree[e.to] += 1;  // loop counted twice
    }
    for (int j = 0; j < g.num_vertices(); ++j)
        if (g.degree[j] == 0)
            throw ValidationError("isolated vertex '" + g.vertex_names[j] + "'");
}

void apply_potential(FundamentalGraph& g, const json& doc) {
    g.potential.assign(g.num_vertices(), 0.0);
    if (!doc.contains("potential")) return;
    const auto& pot = doc.at("potential");
    if (!pot.is_object()) throw ValidationError("'potential' must be an object");
    for (auto it = pot.begin(); it != pot.end(); ++it) {
        if (!it.value().is_number())
            throw ValidationError("potential value for '" + it.key() + "' is not a number");
        g.potential[g.vertex_id(it.key())] = it.value().get<double>();
    }
}

IntVec parse_index(const json& j, int dim, const char* what) {
    if (!j.is_array())
        throw ValidationError(std::string(what) + " must be an integer array");
    if (static_cast<int>(j.size()) != dim)
        throw ValidationError(std::string(what) + " has length " +
                              std::to_string(j.size()) + ", expected " + std::to_string(dim));
    IntVec v;
    for (const auto& c : j) {
        if (!c.is_number_integer())
            throw ValidationError(std::string(what) + " has a non-integer component");
        v.push_back(c.get<std::int64_t>());
    }
    return v;
}

RationalVec parse_coord(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ValidationError("coordinate must be an array of length " + std::to_string(dim));
    RationalVec v;
    for (const auto& c : j) {
        if (c.is_string())
            v.push_back(Rational::parse(c.get<std::string>()));
        else if (c.is_number_integer())
            v.push_back(Rational(c.get<std::int64_t>()));
        else
            throw ValidationError("coordinate components must be rational strings or integers");
    }
    return v;
}

FundamentalGraph parse_embedded(const json& doc, int dim) {
    RationalEmbedding emb;
    emb.dimension = dim;
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_object() || !v.contains("name") || !v.contains("coord"))
            throw ValidationError("embedded vertex needs 'name' and 'coord'");
        emb.names.push_back(v.at("name").get<std::string>());
        emb.coords.push_back(parse_coord(v.at("coord"), dim));
    }

    auto name_id = [&](const std::string& n) {
        for (std::size_t j = 0; j < emb.names.size(); ++j)
            if (emb.names[j] == n) return static_cast<int>(j);
        throw ValidationError("unknown vertex id '" + n + "'");
    };

    std::vector<EmbeddedEdge> edges;
    for (const auto& e : doc.at("edges")) {
        EmbeddedEdge ee;
        ee.from = name_id(e.at("from").get<std::string>());
        ee.to = name_id(e.at("to").get<std::string>());
        if (e.contains("to_coord")) ee.to_coord = parse_coord(e.at("to_coord"), dim);
        edges.push_back(ee);
    }
    FundamentalGraph g = lift_embedded_graph(emb, edges);
    apply_potential(g, doc);
    return g;
}

}  // namespace

FundamentalGraph parse_graph(const json& doc) {
    if (!doc.is_object()) throw ValidationError("graph document must be a JSON object");
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer())
        throw ValidationError("missing integer 'dimension'");
    const int dim = doc.at("dimension").get<int>();
    if (dim < 1) throw ValidationError("dimension must be positive");
    if (!doc.contains("vertices") || !doc.at("vertices").is_array() || doc.at("vertices").empty())
        throw ValidationError("missing non-empty 'vertices' array");
    if (!doc.contains("edges") || !doc.at("edges").is_array())
        throw ValidationError("missing 'edges' array");

    if (doc.at("vertices").front().is_object())
        return parse_embedded(doc, dim);

    FundamentalGraph g;
    g.dimension = dim;
    for (const auto& v : doc.at("vertices")) {
        if (!v.is_string()) throw ValidationError("vertex entries must be names");
        const auto name = v.get<std::string>();
        if (std::find(g.vertex_names.begin(), g.vertex_names.end(), name) != g.vertex_names.end())
            throw ValidationError("duplicate vertex '" + name + "'");
        g.vertex_names.push_back(name);
    }
    for (const auto& e : doc.at("edges")) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("index"))
            throw ValidationError("edge needs 'from', 'to' and 'index'");
        Edge edge;
        edge.from = g.vertex_id(e.at("from").get<std::string>());
        edge.to = g.vertex_id(e.at("to").get<std::string>());
        edge.index = parse_index(e.at("index"), dim, "edge index");
        g.edges.push_back(edge);
    }
    compute_degrees(g);
    apply_potential(g, doc);
    return g;
}

FundamentalGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph document '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
    return parse_graph(doc);
}

void validate_graph(const FundamentalGraph& g) {
    const int nu = g.num_vertices();
    if (nu < 1) throw ValidationError("graph has no vertices");

    // BFS spanning tree of the quotient, tracking integer cell potentials
    std::vector<int> seen(nu, 0);
    std::vector<IntVec> cell(nu, IntVec(g.dimension, 0));
    std::vector<IntVec> cycle_indices;
    std::queue<int> work;
    seen[0] = 1;
    work.push(0);
    std::vector<char> used(g.edges.size(), 0);
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
            const auto& e = g.edges[ei];
            int other;
            IntVec tau = e.index;
            if (e.from == u) {
                other = e.to;
            } else if (e.to == u) {
                other = e.from;
                for (auto& c : tau) c = -c;
            } else {
                continue;
            }
            if (!seen[other] && !used[ei]) {
                used[ei] = 1;
                seen[other] = 1;
                for (int s = 0; s < g.dimension; ++s) cell[other][s] = cell[u][s] + tau[s];
                work.push(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("disconnected fundamental graph");

    // chord cycle index = signed sum of tau along the tree cycle
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (used[ei]) continue;
        const auto& e = g.edges[ei];
        IntVec idx(g.dimension);
        for (int s = 0; s < g.dimension; ++s)
            idx[s] = cell[e.from][s] + e.index[s] - cell[e.to][s];
        cycle_indices.push_back(idx);
    }

    LatticeSpan span = lattice_span(g.dimension, cycle_indices);
    if (!span.full)
        throw ValidationError("disconnected lifted graph: cycle indices span " + span.describe());
}

BipartiteCertificate is_bipartite(const FundamentalGraph& g) {
    const int nu = g.num_vertices();
    const int nvars = nu + g.dimension;  // p(v_1..nu), s(1..d)

    // GF(2) system: p(u) + p(v) + <tau, s> = 1 per edge
    std::vector<std::vector<std::uint8_t>> rows;
    for (const auto& e : g.edges) {
        std::vector<std::uint8_t> row(nvars + 1, 0);
        row[e.from] ^= 1;
        row[e.to] ^= 1;
        for (int s = 0; s < g.dimension; ++s)
            if (e.index[s] & 1) row[nu + s] ^= 1;
        row[nvars] = 1;
        rows.push_back(std::move(row));
    }

    std::vector<int> pivot_of_col(nvars, -1);
    int rank = 0;
    for (int c = 0; c < nvars && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c]) { p = r; break; }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r][c])
                for (int k = c; k <= nvars; ++k) rows[r][k] ^= rows[rank][k];
        pivot_of_col[c] = rank;
        ++rank;
    }

    BipartiteCertificate cert;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][nvars]) return cert;  // inconsistent: odd cycle in the lift

    cert.bipartite = true;
    std::vector<std::uint8_t> x(nvars, 0);  // free variables set to 0
    for (int c = 0; c < nvars; ++c)
        if (pivot_of_col[c] >= 0) x[c] = rows[pivot_of_col[c]][nvars];
    cert.vertex_parity.assign(x.begin(), x.begin() + nu);
    cert.period_parity.assign(x.begin() + nu, x.end());
    return cert;
}

FiniteGraph quotient_torus(const FundamentalGraph& g, int N) {
    if (N < 1) throw ValidationError("torus order must be >= 1");
    const int nu = g.num_vertices();
    const int d = g.dimension;
    std::int64_t cells = 1;
    for (int s = 0; s < d; ++s) cells *= N;

    FiniteGraph q;
    q.num_vertices = static_cast<int>(nu * cells);
    q.degree.assign(q.num_vertices, 0);
    q.potential.assign(q.num_vertices, 0.0);

    auto vertex = [&](int j, std::int64_t m) { return static_cast<int>(j * cells + m); };
    auto shift = [&](std::int64_t m, const IntVec& tau) {
        std::int64_t out = 0, stride = 1;
        for (int s = 0; s < d; ++s) {
            std::int64_t comp = (m / stride) % N;
            comp = ((comp + tau[s]) % N + N) % N;
            out += comp * stride;
            stride *= N;
        }
        return out;
    };

    for (int j = 0; j < nu; ++j)
        for (std::int64_t m = 0; m < cells; ++m)
            q.potential[vertex(j, m)] = g.potential[j];

    for (const auto& e : g.edges) {
        for (std::int64_t m = 0; m < cells; ++m) {
            int a = vertex(e.from, m);
            int b = vertex(e.to, shift(m, e.index));
            q.edges.emplace_back(a, b);
            q.degree[a] += 1;
            q.degree[b] += 1;
        }
    }
    return q;
}

IntVec compute_edge_index(const RationalVec& u, const RationalVec& v) {
    if (u.size() != v.size())
        throw ValidationError("edge endpoints have different dimensions");
    IntVec tau(u.size());
    for (std::size_t s = 0; s < u.size(); ++s) tau[s] = v[s].floor() - u[s].floor();
    return tau;
}

FundamentalGraph lift_embedded_graph(const RationalEmbedding& emb,
                                     const std::vector<EmbeddedEdge>& edges) {
    const int d = emb.dimension;
    for (const auto& c : emb.coords)
        if (static_cast<int>(c.size()) != d)
            throw ValidationError("vertex coordinate has wrong dimension");

    // distinct fractional parts, in first-appearance order
    std::vector<RationalVec> fracs;
    std::vector<int> fund_of(emb.names.size());
    FundamentalGraph g;
    g.dimension = d;
    for (std::size_t j = 0; j < emb.coords.size(); ++j) {
        RationalVec f(d);
        for (int s = 0; s < d; ++s) f[s] = emb.coords[j][s].frac();
        auto it = std::find(fracs.begin(), fracs.end(), f);
        if (it == fracs.end()) {
            fund_of[j] = static_cast<int>(fracs.size());
            fracs.push_back(f);
            g.vertex_names.push_back(emb.names[j]);
        } else {
            fund_of[j] = static_cast<int>(it - fracs.begin());
        }
    }

    for (const auto& ee : edges) {
        const RationalVec& u = emb.coords[ee.from];
        RationalVec v = ee.to_coord ? *ee.to_coord : emb.coords[ee.to];
        if (static_cast<int>(v.size()) != d)
            throw ValidationError("to_coord has wrong dimension");
        RationalVec vf(d);
        for (int s = 0; s < d; ++s) vf[s] = v[s].frac();
        RationalVec expect(d);
        for (int s = 0; s < d; ++s) expect[s] = emb.coords[ee.to][s].frac();
        if (vf != expect)
            throw ValidationError("to_coord is not a lattice translate of the target vertex");
        Edge e;
        e.from = fund_of[ee.from];
        e.to = fund_of[ee.to];
        e.index = compute_edge_index(u, v);
        g.edges.push_back(e);
    }

    g.degree.assign(g.num_vertices(), 0);
    for (const auto& e : g.edges) {
        g.degree[e.from] += 1;
        g.degree[e.to] += 1;
    }
    for (int j = 0; j < g.num_vertices(); ++j)
        if (g.degree[j] == 0)
            throw ValidationError("isolated vertex '" + g.vertex_names[j] + "'");
    g.potential.assign(g.num_vertices(), 0.0);
    return g;
}

}  // namespace graphband
