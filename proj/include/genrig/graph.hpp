#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genrig/error.hpp"
#include "genrig/rational.hpp"

namespace genrig {

// Vertices are labeled 1..v throughout the library and in every file format.
using Vertex = int;

// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const noexcept { return x == u || x == v; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// A finite simple graph on [v]. Construction validates.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return v_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(const Edge& e) const;
  std::optional<std::size_t> edge_index(const Edge& e) const;
  std::vector<Vertex> neighbors(Vertex x) const;
  int degree(Vertex x) const;

  Graph without_edge(std::size_t index) const;

 private:
  int v_ = 0;
  std::vector<Edge> edges_;  // insertion order = row order of the rigidity matrix
};

// First violation of the simple-graph invariants, or nullopt when valid.
struct GraphViolation {
  ErrorKind kind;
  std::string message;
};
std::optional<GraphViolation> find_graph_violation(int num_vertices,
                                                   const std::vector<std::pair<Vertex, Vertex>>& edges);

// Throws Error with the first violation.
void validate_graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

inline std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

// |E| - (d v - C(d+1, 2)). Zero means exactly the edge count of a minimally
// rigid graph.
std::int64_t tightness(const Graph& g, int dim);

using Point = std::vector<Rational>;

class Placement {
 public:
  Placement() = default;
  explicit Placement(int dim) : dim_(dim) {}
  Placement(int dim, std::map<Vertex, Point> coords);

  int dim() const noexcept { return dim_; }
  bool is_placed(Vertex x) const { return coords_.count(x) != 0; }
  const Point& at(Vertex x) const;
  void set(Vertex x, Point p);
  const std::map<Vertex, Point>& coords() const noexcept { return coords_; }

  // Throws UnplacedVertex unless every vertex of g has coordinates, and
  // DimensionMismatch when a point has the wrong length.
  void require_complete(const Graph& g) const;

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  int dim_ = 0;
  std::map<Vertex, Point> coords_;
};

// e_ij = p_j - p_i.
Point edge_vector(const Placement& p, Vertex i, Vertex j);

}  // namespace genrig
