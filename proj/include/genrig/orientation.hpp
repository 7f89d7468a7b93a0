#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genrig/graph.hpp"

namespace genrig {

enum class EdgeMode { Source, Stream, Sink };

// One edge of a source-stream-sink orientation. A source (i,j)_{ij} points
// into both endpoints, a stream (i,j)_i into `into` and out of the other
// endpoint, a sink (i,j)_0 out of both.
struct OrientedEdge {
  Edge edge;
  EdgeMode mode = EdgeMode::Sink;
  Vertex into = 0;  // streams only

  static OrientedEdge source(Vertex a, Vertex b) { return {Edge(a, b), EdgeMode::Source, 0}; }
  static OrientedEdge sink(Vertex a, Vertex b) { return {Edge(a, b), EdgeMode::Sink, 0}; }
  static OrientedEdge stream(Vertex a, Vertex b, Vertex head) { return {Edge(a, b), EdgeMode::Stream, head}; }

  bool is_source() const noexcept { return mode == EdgeMode::Source; }
  bool is_stream() const noexcept { return mode == EdgeMode::Stream; }
  bool is_sink() const noexcept { return mode == EdgeMode::Sink; }

  bool points_into(Vertex x) const noexcept {
    return edge.has(x) && (mode == EdgeMode::Source || (mode == EdgeMode::Stream && into == x));
  }
  bool points_out_of(Vertex x) const noexcept {
    return edge.has(x) && (mode == EdgeMode::Sink || (mode == EdgeMode::Stream && into != x));
  }
  // Tail of a stream.
  Vertex out_of() const noexcept { return edge.other(into); }

  auto operator<=>(const OrientedEdge&) const = default;
};

// "(4,8)_4", "(4,8)_{4,8}", "(1,2)_0".
std::string to_string(const OrientedEdge& e);

// Source-stream-sink orientation on the subgraph H formed by its edges.
// Immutable; edges are kept sorted by their canonical Edge.
class Orientation {
 public:
  Orientation() = default;
  // Throws InvalidOrientation for repeated edges or a stream pointing at a
  // non-endpoint.
  explicit Orientation(std::vector<OrientedEdge> edges);

  const std::vector<OrientedEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::optional<OrientedEdge> find(const Edge& e) const;

  // Vertices of H, ascending.
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int degree(Vertex x) const;
  int in_degree(Vertex x) const;
  int out_degree(Vertex x) const;
  // Edges pointing into / out of x, in edge order.
  std::vector<OrientedEdge> in_edges(Vertex x) const;
  std::vector<OrientedEdge> out_edges(Vertex x) const;

  std::vector<OrientedEdge> sources() const;
  std::vector<OrientedEdge> sinks() const;
  std::vector<OrientedEdge> streams() const;

  // Copy with one edge's mode replaced.
  Orientation with(const OrientedEdge& replacement) const;

  bool operator==(const Orientation& other) const { return edges_ == other.edges_; }

 private:
  std::vector<OrientedEdge> edges_;
  std::vector<Vertex> vertices_;
};

struct VertexDegrees {
  Vertex vertex = 0;
  int degree = 0;
  int in_degree = 0;
};

struct ValidityReport {
  std::vector<VertexDegrees> vertices;
  std::vector<std::string> violations;
  bool acyclic = true;
  std::vector<OrientedEdge> sources;
  std::vector<OrientedEdge> sinks;
  bool valid = false;
};

// Valid iff H is nonempty, every vertex of H has degree >= d+1 and in-degree
// exactly d, and there is no oriented cycle. Throws EdgeNotInGraph.
ValidityReport check_validity(const Orientation& o, const Graph& g, int dim);

// Streams mu_1 .. mu_l, mu_1 where each enters the vertex the next leaves.
std::optional<std::vector<OrientedEdge>> find_oriented_cycle(const Orientation& o);

// Breaks oriented cycles one at a time at the smallest vertex j of the cycle
// found: the incoming stream (i,j)_j becomes a sink and the outgoing stream
// (j,k)_k a source. Degrees and in-degrees are unchanged. Requires degree >=
// d+1 and in-degree d everywhere (PreconditionViolated).
Orientation remove_cycles(const Orientation& o, int dim);

// Greedy in-edge choice: at every vertex the listed incoming edges; an edge
// picked at both ends becomes a source, at one end a stream, else a sink.
Orientation orientation_from_choices(const std::vector<Edge>& h_edges,
                                     const std::vector<std::pair<Vertex, std::vector<Edge>>>& incoming);

struct SearchLimits {
  std::uint64_t max_subsets = std::uint64_t{1} << 22;       // edge subsets examined
  std::uint64_t max_orientations = std::uint64_t{1} << 22;  // in-edge choices examined
};

// Pull-based enumeration of every valid acyclic orientation of every edge
// subset H of g. Subsets are visited by increasing bitmask over g.edges(),
// per-vertex in-edge choices in lexicographic order. next() throws
// SearchBudgetExceeded once a limit is passed.
class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, int dim, SearchLimits limits = {});

  std::optional<Orientation> next();
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t subsets_examined() const noexcept { return subsets_; }
  std::uint64_t orientations_examined() const noexcept { return orientations_; }

 private:
  bool advance_subset();
  bool advance_choice();
  Orientation current_orientation() const;

  Graph graph_;
  int dim_;
  SearchLimits limits_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_end_ = 0;
  bool have_subset_ = false;
  bool exhausted_ = false;
  std::uint64_t subsets_ = 0;
  std::uint64_t orientations_ = 0;

  std::vector<Edge> h_edges_;
  std::vector<Vertex> h_vertices_;
  std::vector<std::vector<Edge>> incident_;           // per h_vertices_ entry
  std::vector<std::vector<std::size_t>> choice_;      // d-subset per vertex
};

std::vector<Orientation> enumerate_orientations(const Graph& g, int dim, SearchLimits limits = {});

}  // namespace genrig
