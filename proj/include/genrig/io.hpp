#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "genrig/certificate.hpp"
#include "genrig/decider.hpp"
#include "genrig/graph.hpp"
#include "genrig/oracle.hpp"
#include "genrig/orientation.hpp"
#include "genrig/stress.hpp"

namespace genrig {

using Json = nlohmann::ordered_json;

// {"v": 8, "d": 3, "edges": [[1,2], ...]}; "d" is optional.
struct GraphFile {
  Graph graph;
  std::optional<int> dim;
};

GraphFile graph_from_json(const Json& j);
Json graph_to_json(const Graph& g, std::optional<int> dim = std::nullopt);

// {"coords": {"1": ["0","1/2","3"], ...}}; numbers are accepted too.
Placement placement_from_json(const Json& j);
Json placement_to_json(const Placement& p);

// {"edges": [{"e":[1,3],"mode":"source"}, {"e":[5,3],"mode":"stream","into":3}, {"e":[1,2],"mode":"sink"}]}
Orientation orientation_from_json(const Json& j);
Json orientation_to_json(const Orientation& o);

// [{"e":[1,2],"w":"1"}, ...]
std::map<Edge, Rational> sink_values_from_json(const Json& j);

Json to_json(const RankReport& r);
Json to_json(const BalanceReport& r);
Json to_json(const Decision& d);
Json to_json(const StressAssignment& w);
Json to_json(const ResidualReport& r);

// Reads a whole file, or stdin for "-". ParseError on failure.
std::string read_text(const std::string& path);
Json read_json(const std::string& path);

}  // namespace genrig
