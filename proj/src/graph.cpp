#include "genrig/graph.hpp"

#include <algorithm>
#include <set>

namespace genrig {

std::string to_string(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

std::optional<GraphViolation> find_graph_violation(int num_vertices,
                                                   const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (num_vertices < 1) return GraphViolation{ErrorKind::VertexOutOfRange, "graph needs at least one vertex"};
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    const std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a < 1 || a > num_vertices || b < 1 || b > num_vertices) {
      return GraphViolation{ErrorKind::VertexOutOfRange, "edge " + label + " leaves 1.." + std::to_string(num_vertices)};
    }
    if (a == b) return GraphViolation{ErrorKind::LoopEdge, "edge " + label + " is a loop"};
    if (!seen.insert(Edge(a, b)).second) return GraphViolation{ErrorKind::DuplicateEdge, "edge " + label + " repeated"};
  }
  return std::nullopt;
}

void validate_graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (auto violation = find_graph_violation(num_vertices, edges)) throw Error(violation->kind, violation->message);
}

Graph::Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) : v_(num_vertices) {
  validate_graph(num_vertices, edges);
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) edges_.emplace_back(a, b);
}

Graph::Graph(int num_vertices, std::vector<Edge> edges) : v_(num_vertices) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  validate_graph(num_vertices, pairs);
  edges_ = std::move(edges);
}

bool Graph::has_edge(const Edge& e) const { return edge_index(e).has_value(); }

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex x) const {
  std::vector<Vertex> out;
  for (const Edge& e : edges_) {
    if (e.has(x)) out.push_back(e.other(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::degree(Vertex x) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [x](const Edge& e) { return e.has(x); }));
}

Graph Graph::without_edge(std::size_t index) const {
  std::vector<Edge> kept = edges_;
  kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph(v_, std::move(kept));
}

std::int64_t tightness(const Graph& g, int dim) {
  const std::int64_t d = dim;
  return static_cast<std::int64_t>(g.num_edges()) - (d * g.num_vertices() - binomial2(d + 1));
}

Placement::Placement(int dim, std::map<Vertex, Point> coords) : dim_(dim), coords_(std::move(coords)) {
  for (const auto& [x, pt] : coords_) {
    if (static_cast<int>(pt.size()) != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "vertex " + std::to_string(x) + " has " + std::to_string(pt.size()) +
                                                    " coordinates, expected " + std::to_string(dim_));
    }
  }
}

const Point& Placement::at(Vertex x) const {
  auto it = coords_.find(x);
  if (it == coords_.end()) throw Error(ErrorKind::UnplacedVertex, "vertex " + std::to_string(x) + " has no coordinates");
  return it->second;
}

void Placement::set(Vertex x, Point p) {
  if (static_cast<int>(p.size()) != dim_) throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  coords_[x] = std::move(p);
}

void Placement::require_complete(const Graph& g) const {
  for (Vertex x = 1; x <= g.num_vertices(); ++x) {
    if (static_cast<int>(at(x).size()) != dim_) throw Error(ErrorKind::DimensionMismatch, "bad point dimension");
  }
}

Point edge_vector(const Placement& p, Vertex i, Vertex j) {
  const Point& pi = p.at(i);
  const Point& pj = p.at(j);
  Point e(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) e[k] = pj[k] - pi[k];
  return e;
}

}  // namespace genrig
