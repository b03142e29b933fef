#ifndef GRAPHBAND_FIXTURES_HPP
#define GRAPHBAND_FIXTURES_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "graphband/domain.hpp"
#include "graphband/graph.hpp"

namespace graphband {

// Bundled named inputs: "paper-example" (the five-vertex example with its
// reference domain), "z2-lattice", "hex-bipartite".
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);

nlohmann::json fixture_graph_doc(const std::string& name);
nlohmann::json fixture_domain_doc(const std::string& name);

// Parsed and validated.
FundamentalGraph fixture_graph(const std::string& name);
FundamentalDomain fixture_domain(const std::string& name);

// The same five-vertex example given by exact rational coordinates instead
// of explicit edge indices; lifts to the same fundamental graph.
nlohmann::json embedded_example_doc();

}  // namespace graphband

#endif
