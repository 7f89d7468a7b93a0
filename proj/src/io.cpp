#include "genrig/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "genrig/error.hpp"

namespace genrig {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::ParseError, why); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("an edge is a pair [i, j]");
  return Edge(as_int(j[0], "edge endpoint"), as_int(j[1], "edge endpoint"));
}

Json edge_to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  bad("coordinates and weights are integers or \"p/q\" strings");
}

const char* mode_name(EdgeMode m) {
  switch (m) {
    case EdgeMode::Source: return "source";
    case EdgeMode::Stream: return "stream";
    case EdgeMode::Sink: return "sink";
  }
  return "?";
}

Json oriented_edge_to_json(const OrientedEdge& e) {
  Json j{{"e", edge_to_json(e.edge)}, {"mode", mode_name(e.mode)}};
  if (e.is_stream()) j["into"] = e.into;
  return j;
}

}  // namespace

GraphFile graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("edges")) bad("graph needs \"v\" and \"edges\"");
  const int v = as_int(j["v"], "\"v\"");
  if (!j["edges"].is_array()) bad("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) bad("an edge is a pair [i, j]");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  GraphFile out{Graph(v, edges), std::nullopt};
  if (j.contains("d")) out.dim = as_int(j["d"], "\"d\"");
  return out;
}

Json graph_to_json(const Graph& g, std::optional<int> dim) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_to_json(e));
  Json j{{"v", g.num_vertices()}};
  if (dim) j["d"] = *dim;
  j["edges"] = std::move(edges);
  return j;
}

Placement placement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object()) bad("placement needs a \"coords\" object");
  int dim = -1;
  std::map<Vertex, Point> coords;
  for (const auto& [key, value] : j["coords"].items()) {
    Vertex x = 0;
    try {
      std::size_t used = 0;
      x = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad("placement key \"" + key + "\" is not a vertex number");
    }
    if (!value.is_array()) bad("coordinates of vertex " + key + " must be an array");
    Point p;
    for (const Json& c : value) p.push_back(rational_from_json(c));
    if (dim < 0) dim = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != dim) throw Error(ErrorKind::DimensionMismatch, "vertex " + key + " has the wrong dimension");
    coords.emplace(x, std::move(p));
  }
  return Placement(std::max(dim, 0), std::move(coords));
}

Json placement_to_json(const Placement& p) {
  Json coords = Json::object();
  for (const auto& [x, pt] : p.coords()) {
    Json c = Json::array();
    for (const Rational& q : pt) c.push_back(format_rational(q));
    coords[std::to_string(x)] = std::move(c);
  }
  return Json{{"coords", std::move(coords)}};
}

Orientation orientation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) bad("orientation needs an \"edges\" array");
  std::vector<OrientedEdge> edges;
  for (const Json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("e") || !e.contains("mode")) bad("oriented edge needs \"e\" and \"mode\"");
    const Edge edge = edge_from_json(e["e"]);
    const std::string mode = e["mode"].is_string() ? e["mode"].get<std::string>() : "";
    if (mode == "source") {
      edges.push_back(OrientedEdge::source(edge.u, edge.v));
    } else if (mode == "sink") {
      edges.push_back(OrientedEdge::sink(edge.u, edge.v));
    } else if (mode == "stream") {
      if (!e.contains("into")) bad("stream " + to_string(edge) + " needs \"into\"");
      edges.push_back(OrientedEdge::stream(edge.u, edge.v, as_int(e["into"], "\"into\"")));
    } else {
      bad("mode must be source, stream or sink");
    }
  }
  return Orientation(std::move(edges));
}

Json orientation_to_json(const Orientation& o) {
  Json edges = Json::array();
  for (const OrientedEdge& e : o.edges()) edges.push_back(oriented_edge_to_json(e));
  return Json{{"edges", std::move(edges)}};
}

std::map<Edge, Rational> sink_values_from_json(const Json& j) {
  if (!j.is_array()) bad("sink values are an array of {\"e\":[i,j],\"w\":...}");
  std::map<Edge, Rational> out;
  for (const Json& item : j) {
    if (!item.is_object() || !item.contains("e") || !item.contains("w")) bad("sink value needs \"e\" and \"w\"");
    out[edge_from_json(item["e"])] = rational_from_json(item["w"]);
  }
  return out;
}

Json to_json(const RankReport& r) {
  return Json{{"rank", r.rank},
              {"right_kernel_dim", r.right_kernel_dim},
              {"left_kernel_dim", r.left_kernel_dim},
              {"verdict", to_string(r.verdict)},
              {"seed", r.seed},
              {"trials", r.trials}};
}

Json to_json(const BalanceReport& r) {
  Json pairs = Json::array();
  for (const PairEvidence& p : r.pairs) {
    pairs.push_back(Json{{"source", to_string(p.source)},
                         {"sink", to_string(p.sink)},
                         {"chains", p.chains},
                         {"terms", p.terms}});
  }
  Json sigmas = Json::array();
  for (const SigmaEvidence& s : r.sigmas) {
    Json item{{"sigma", s.sigma}, {"vanishes", s.vanishes}};
    if (r.mode == BalanceMode::Certified) {
      item["terms"] = s.terms;
      item["normal_form"] = s.normal_form;
    }
    sigmas.push_back(std::move(item));
  }
  return Json{{"balanced", r.balanced},
              {"mode", to_string(r.mode)},
              {"seed", r.seed},
              {"sources", r.num_sources},
              {"sinks", r.num_sinks},
              {"more_sinks_than_sources", r.more_sinks_than_sources},
              {"pairs", std::move(pairs)},
              {"sigmas", std::move(sigmas)}};
}

Json to_json(const Decision& d) {
  Json j{{"verdict", to_string(d.outcome)},
         {"method", to_string(d.method)},
         {"tightness", d.tightness},
         {"exhaustive", d.exhaustive},
         {"budget_exhausted", d.budget_exhausted}};
  if (d.method == DecisionMethod::TheoremSearch) j["orientations_examined"] = d.orientations_examined;
  if (d.certificate) j["certificate"] = orientation_to_json(*d.certificate);
  if (d.evidence) j["evidence"] = to_json(*d.evidence);
  if (d.oracle) j["oracle"] = to_json(*d.oracle);
  if (d.agreement) j["agreement"] = *d.agreement;
  if (d.reduced) j["reduced_graph"] = graph_to_json(*d.reduced);
  return j;
}

Json to_json(const StressAssignment& w) {
  Json out = Json::array();
  for (const auto& [e, value] : w.w) out.push_back(Json{{"e", edge_to_json(e)}, {"w", format_rational(value)}});
  return out;
}

Json to_json(const ResidualReport& r) {
  Json residual = Json::object();
  for (const auto& [x, pt] : r.residual) {
    Json c = Json::array();
    for (const Rational& q : pt) c.push_back(format_rational(q));
    residual[std::to_string(x)] = std::move(c);
  }
  return Json{{"pass", r.pass}, {"residual", std::move(residual)}};
}

std::string read_text(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace genrig
