#include "graphband/fixtures.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "graphband/errors.hpp"

namespace graphband {

using nlohmann::json;

namespace {

const char* kExampleGraph = R"({
  "dimension": 2,
  "vertices": ["v1", "v2", "v3", "v4", "v5"],
  "edges": [
    {"from": "v1", "to": "v3", "index": [0, 0]},
    {"from": "v1", "to": "v4", "index": [0, 0]},
    {"from": "v2", "to": "v3", "index": [0, 0]},
    {"from": "v2", "to": "v4", "index": [0, 0]},
    {"from": "v3", "to": "v4", "index": [0, 0]},
    {"from": "v3", "to": "v4", "index": [1, 0]},
    {"from": "v3", "to": "v5", "index": [0, 0]},
    {"from": "v3", "to": "v5", "index": [0, 1]},
    {"from": "v4", "to": "v5", "index": [0, 0]},
    {"from": "v4", "to": "v5", "index": [0, 1]}
  ]
})";

// V_1 = {v1..v5, v5+a2, v4+a1}; one representative of each fundamental edge
const char* kExampleDomain = R"({
  "vertices": [
    {"base": "v5", "cell": [0, 1]},
    {"base": "v4", "cell": [1, 0]}
  ],
  "edges": [
    [{"base": "v1"}, {"base": "v3"}],
    [{"base": "v1"}, {"base": "v4"}],
    [{"base": "v2"}, {"base": "v3"}],
    [{"base": "v2"}, {"base": "v4"}],
    [{"base": "v3"}, {"base": "v4"}],
    [{"base": "v3"}, {"base": "v4", "cell": [1, 0]}],
    [{"base": "v3"}, {"base": "v5"}],
    [{"base": "v3"}, {"base": "v5", "cell": [0, 1]}],
    [{"base": "v4"}, {"base": "v5"}],
    [{"base": "v4"}, {"base": "v5", "cell": [0, 1]}]
  ]
})";

const char* kZ2Graph = R"({
  "dimension": 2,
  "vertices": ["v1"],
  "edges": [
    {"from": "v1", "to": "v1", "index": [1, 0]},
    {"from": "v1", "to": "v1", "index": [0, 1]}
  ]
})";

const char* kZ2Domain = R"({
  "vertices": [
    {"base": "v1", "cell": [1, 0]},
    {"base": "v1", "cell": [0, 1]}
  ],
  "edges": [
    [{"base": "v1"}, {"base": "v1", "cell": [1, 0]}],
    [{"base": "v1"}, {"base": "v1", "cell": [0, 1]}]
  ]
})";

// honeycomb-type bipartite graph: two vertex classes, three bridging edges
const char* kHexGraph = R"({
  "dimension": 2,
  "vertices": ["a", "b"],
  "edges": [
    {"from": "a", "to": "b", "index": [0, 0]},
    {"from": "a", "to": "b", "index": [1, 0]},
    {"from": "a", "to": "b", "index": [0, 1]}
  ]
})";

const char* kHexDomain = R"({
  "vertices": [
    {"base": "b", "cell": [1, 0]},
    {"base": "b", "cell": [0, 1]}
  ],
  "edges": [
    [{"base": "a"}, {"base": "b"}],
    [{"base": "a"}, {"base": "b", "cell": [1, 0]}],
    [{"base": "a"}, {"base": "b", "cell": [0, 1]}]
  ]
})";

const char* kEmbeddedExample = R"({
  "dimension": 2,
  "vertices": [
    {"name": "v1", "coord": ["1/2", "1/4"]},
    {"name": "v2", "coord": ["1/2", "3/4"]},
    {"name": "v3", "coord": ["11/14", "1/2"]},
    {"name": "v4", "coord": ["3/14", "1/2"]},
    {"name": "v5", "coord": ["1/2", "0"]}
  ],
  "edges": [
    {"from": "v1", "to": "v3"},
    {"from": "v1", "to": "v4"},
    {"from": "v2", "to": "v3"},
    {"from": "v2", "to": "v4"},
    {"from": "v3", "to": "v4"},
    {"from": "v3", "to": "v4", "to_coord": ["17/14", "1/2"]},
    {"from": "v3", "to": "v5"},
    {"from": "v3", "to": "v5", "to_coord": ["1/2", "1"]},
    {"from": "v4", "to": "v5"},
    {"from": "v4", "to": "v5", "to_coord": ["1/2", "1"]}
  ]
})";

struct FixtureDocs {
    const char* graph;
    const char* domain;
};

const FixtureDocs* lookup(const std::string& name) {
    static const std::pair<const char*, FixtureDocs> table[] = {
        {"paper-example", {kExampleGraph, kExampleDomain}},
        {"z2-lattice", {kZ2Graph, kZ2Domain}},
        {"hex-bipartite", {kHexGraph, kHexDomain}},
    };
    for (const auto& [key, docs] : table)
        if (name == key) return &docs;
    return nullptr;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"paper-example", "z2-lattice", "hex-bipartite"};
}

bool is_fixture(const std::string& name) { return lookup(name) != nullptr; }

json fixture_graph_doc(const std::string& name) {
    const auto* docs = lookup(name);
    if (!docs) throw ValidationError("unknown fixture '" + name + "'");
    return json::parse(docs->graph);
}

json fixture_domain_doc(const std::string& name) {
    const auto* docs = lookup(name);
    if (!docs) throw ValidationError("unknown fixture '" + name + "'");
    return json::parse(docs->domain);
}

FundamentalGraph fixture_graph(const std::string& name) {
    FundamentalGraph g = parse_graph(fixture_graph_doc(name));
    validate_graph(g);
    return g;
}

FundamentalDomain fixture_domain(const std::string& name) {
    return build_domain(fixture_graph(name), fixture_domain_doc(name));
}

json embedded_example_doc() { return json::parse(kEmbeddedExample); }

}  // namespace graphband
