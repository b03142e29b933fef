#include "graphband/domain.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>

#include <nlohmann/json.hpp>

#include "graphband/errors.hpp"

namespace graphband {

using nlohmann::json;

std::string FundamentalDomain::vertex_label(int k) const {
    const auto& v = vertices[k];
    std::string s = graph.vertex_names[v.base];
    bool zero = std::all_of(v.cell.begin(), v.cell.end(),
                            [](std::int64_t c) { return c == 0; });
    if (!zero) {
        s += "@(";
        for (std::size_t i = 0; i < v.cell.size(); ++i)
            s += (i ? "," : "") + std::to_string(v.cell[i]);
        s += ")";
    }
    return s;
}

namespace {

// canonical key of an unoriented fundamental edge with index
struct EdgeKey {
    int u, v;
    IntVec tau;
    bool operator<(const EdgeKey& o) const {
        if (u != o.u) return u < o.u;
        if (v != o.v) return v < o.v;
        return tau < o.tau;
    }
};

EdgeKey canonical_key(int u, int v, IntVec tau) {
    if (u > v) {
        std::swap(u, v);
        for (auto& c : tau) c = -c;
    } else if (u == v) {
        IntVec neg = tau;
        for (auto& c : neg) c = -c;
        if (neg < tau) tau = neg;
    }
    return {u, v, std::move(tau)};
}

IntVec parse_cell(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ValidationError("cell offset must be an integer array of length " +
                              std::to_string(dim));
    IntVec c;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ValidationError("cell offset has a non-integer component");
        c.push_back(x.get<std::int64_t>());
    }
    return c;
}

DomainVertex parse_ref(const FundamentalGraph& g, const json& j) {
    if (!j.is_object() || !j.contains("base"))
        throw ValidationError("domain vertex reference needs 'base'");
    DomainVertex v;
    v.base = g.vertex_id(j.at("base").get<std::string>());
    v.cell = j.contains("cell") ? parse_cell(j.at("cell"), g.dimension)
                                : IntVec(g.dimension, 0);
    return v;
}

}  // namespace

FundamentalDomain build_domain(const FundamentalGraph& g, const json& doc) {
    if (!doc.is_object()) throw ValidationError("domain document must be a JSON object");
    const int nu = g.num_vertices();

    FundamentalDomain dom;
    dom.graph = g;

    // V_1: implicit cell-0 copies of V_F, then the listed extras
    for (int j = 0; j < nu; ++j)
        dom.vertices.push_back({j, IntVec(g.dimension, 0)});
    if (doc.contains("vertices")) {
        for (const auto& v : doc.at("vertices")) {
            DomainVertex dv = parse_ref(g, v);
            if (std::find(dom.vertices.begin(), dom.vertices.end(), dv) != dom.vertices.end())
                throw ValidationError("duplicate domain vertex " + json(v).dump());
            dom.vertices.push_back(dv);
        }
    }
    auto find_vertex = [&](const DomainVertex& dv) {
        auto it = std::find(dom.vertices.begin(), dom.vertices.end(), dv);
        if (it == dom.vertices.end())
            throw ValidationError("domain edge references vertex not in V_1: " +
                                  g.vertex_names[dv.base]);
        return static_cast<int>(it - dom.vertices.begin());
    };

    if (!doc.contains("edges") || !doc.at("edges").is_array())
        throw ValidationError("domain document needs an 'edges' array");
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("domain edge must be a pair of vertex references");
        int a = find_vertex(parse_ref(g, e.at(0)));
        int b = find_vertex(parse_ref(g, e.at(1)));
        dom.edges.emplace_back(a, b);
    }

    // projection E_1 -> E_F must be a bijection (multiset equality)
    std::map<EdgeKey, int> fund_count;
    for (const auto& e : g.edges)
        fund_count[canonical_key(e.from, e.to, e.index)] += 1;
    std::map<EdgeKey, int> dom_count;
    for (const auto& [a, b] : dom.edges) {
        IntVec tau(g.dimension);
        for (int s = 0; s < g.dimension; ++s)
            tau[s] = dom.vertices[b].cell[s] - dom.vertices[a].cell[s];
        EdgeKey key = canonical_key(dom.vertices[a].base, dom.vertices[b].base, tau);
        if (!fund_count.count(key))
            throw ValidationError("domain edge does not project to a fundamental edge");
        dom_count[key] += 1;
    }
    for (const auto& [key, n] : fund_count) {
        int have = dom_count.count(key) ? dom_count.at(key) : 0;
        if (have < n)
            throw ValidationError("fundamental edge (" + g.vertex_names[key.u] + "," +
                                  g.vertex_names[key.v] + ") not covered by the domain");
        if (have > n)
            throw ValidationError("fundamental edge (" + g.vertex_names[key.u] + "," +
                                  g.vertex_names[key.v] + ") covered more than once");
    }

    // connectivity of (V_1, E_1)
    std::vector<int> seen(dom.num_vertices(), 0);
    std::queue<int> work;
    seen[0] = 1;
    work.push(0);
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        for (const auto& [a, b] : dom.edges) {
            int other = (a == u) ? b : (b == u) ? a : -1;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                work.push(other);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("fundamental domain is disconnected");

    dom.domain_degree.assign(dom.num_vertices(), 0);
    for (const auto& [a, b] : dom.edges) {
        dom.domain_degree[a] += 1;
        dom.domain_degree[b] += 1;
    }

    // inner vertices: full periodic degree inside the domain
    std::vector<char> inner(dom.num_vertices(), 0);
    for (int k = 0; k < dom.num_vertices(); ++k)
        inner[k] = (dom.domain_degree[k] == g.degree[dom.vertices[k].base]);

    // V_o must consist of cell-0 vertices; anything else means broken input
    for (int k = nu; k < dom.num_vertices(); ++k)
        if (inner[k])
            throw ValidationError("translated copy " + dom.vertex_label(k) +
                                  " has full degree; domain covers an edge twice");

    // per-class degree identity, a free consistency check of the covering
    for (int j = 0; j < nu; ++j) {
        int sum = 0;
        for (int k = 0; k < dom.num_vertices(); ++k)
            if (dom.vertices[k].base == j) sum += dom.domain_degree[k];
        if (sum != g.degree[j])
            throw NumericalError("class degree identity failed for vertex " +
                                 g.vertex_names[j]);
    }

    // canonical order: inner first (fundamental order), boundary after
    std::vector<int> order;
    for (int k = 0; k < dom.num_vertices(); ++k)
        if (inner[k]) order.push_back(k);
    dom.num_inner = static_cast<int>(order.size());
    for (int k = 0; k < dom.num_vertices(); ++k)
        if (!inner[k]) order.push_back(k);

    std::vector<int> pos(dom.num_vertices());
    for (int i = 0; i < dom.num_vertices(); ++i) pos[order[i]] = i;

    FundamentalDomain out;
    out.graph = std::move(dom.graph);
    out.num_inner = dom.num_inner;
    out.vertices.resize(dom.num_vertices());
    out.domain_degree.resize(dom.num_vertices());
    for (int i = 0; i < dom.num_vertices(); ++i) {
        out.vertices[i] = dom.vertices[order[i]];
        out.domain_degree[i] = dom.domain_degree[order[i]];
    }
    for (const auto& [a, b] : dom.edges) out.edges.emplace_back(pos[a], pos[b]);
    return out;
}

FundamentalDomain build_domain_file(const FundamentalGraph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open domain document '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
    return build_domain(g, doc);
}

}  // namespace graphband
