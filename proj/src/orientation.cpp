#include "genrig/orientation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace genrig {

std::string to_string(const OrientedEdge& e) {
  const std::string base = to_string(e.edge);
  switch (e.mode) {
    case EdgeMode::Source: return base + "_{" + std::to_string(e.edge.u) + "," + std::to_string(e.edge.v) + "}";
    case EdgeMode::Stream: return base + "_" + std::to_string(e.into);
    case EdgeMode::Sink: return base + "_0";
  }
  return base;
}

Orientation::Orientation(std::vector<OrientedEdge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const OrientedEdge& a, const OrientedEdge& b) { return a.edge < b.edge; });
  std::set<Vertex> vertices;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    OrientedEdge& e = edges_[i];
    if (e.edge.u == e.edge.v) throw Error(ErrorKind::InvalidOrientation, "loop " + to_string(e.edge));
    if (i > 0 && edges_[i - 1].edge == e.edge) {
      throw Error(ErrorKind::InvalidOrientation, "edge " + to_string(e.edge) + " oriented twice");
    }
    if (e.mode == EdgeMode::Stream && !e.edge.has(e.into)) {
      throw Error(ErrorKind::InvalidOrientation, "stream on " + to_string(e.edge) + " points into a non-endpoint");
    }
    if (e.mode != EdgeMode::Stream) e.into = 0;
    vertices.insert(e.edge.u);
    vertices.insert(e.edge.v);
  }
  vertices_.assign(vertices.begin(), vertices.end());
}

std::optional<OrientedEdge> Orientation::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const OrientedEdge& a, const Edge& b) { return a.edge < b; });
  if (it == edges_.end() || it->edge != e) return std::nullopt;
  return *it;
}

int Orientation::degree(Vertex x) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [x](const OrientedEdge& e) { return e.edge.has(x); }));
}

int Orientation::in_degree(Vertex x) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [x](const OrientedEdge& e) { return e.points_into(x); }));
}

int Orientation::out_degree(Vertex x) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [x](const OrientedEdge& e) { return e.points_out_of(x); }));
}

std::vector<OrientedEdge> Orientation::in_edges(Vertex x) const {
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& e : edges_)
    if (e.points_into(x)) out.push_back(e);
  return out;
}

std::vector<OrientedEdge> Orientation::out_edges(Vertex x) const {
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& e : edges_)
    if (e.points_out_of(x)) out.push_back(e);
  return out;
}

std::vector<OrientedEdge> Orientation::sources() const {
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& e : edges_)
    if (e.is_source()) out.push_back(e);
  return out;
}

std::vector<OrientedEdge> Orientation::sinks() const {
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& e : edges_)
    if (e.is_sink()) out.push_back(e);
  return out;
}

std::vector<OrientedEdge> Orientation::streams() const {
  std::vector<OrientedEdge> out;
  for (const OrientedEdge& e : edges_)
    if (e.is_stream()) out.push_back(e);
  return out;
}

Orientation Orientation::with(const OrientedEdge& replacement) const {
  std::vector<OrientedEdge> edges = edges_;
  for (OrientedEdge& e : edges)
    if (e.edge == replacement.edge) e = replacement;
  return Orientation(std::move(edges));
}

ValidityReport check_validity(const Orientation& o, const Graph& g, int dim) {
  ValidityReport report;
  for (const OrientedEdge& e : o.edges()) {
    if (!g.has_edge(e.edge)) throw Error(ErrorKind::EdgeNotInGraph, "edge " + to_string(e.edge) + " is not in the graph");
  }
  if (o.empty()) report.violations.push_back("empty subgraph");
  for (Vertex x : o.vertices()) {
    VertexDegrees vd{x, o.degree(x), o.in_degree(x)};
    if (vd.degree < dim + 1) {
      report.violations.push_back("vertex " + std::to_string(x) + " has degree " + std::to_string(vd.degree) + " < " +
                                  std::to_string(dim + 1));
    }
    if (vd.in_degree != dim) {
      report.violations.push_back("vertex " + std::to_string(x) + " has in-degree " + std::to_string(vd.in_degree) +
                                  " != " + std::to_string(dim));
    }
    report.vertices.push_back(vd);
  }
  if (auto cycle = find_oriented_cycle(o)) {
    report.acyclic = false;
    std::string text = "oriented cycle";
    for (const OrientedEdge& e : *cycle) text += " " + to_string(e);
    report.violations.push_back(text);
  }
  report.sources = o.sources();
  report.sinks = o.sinks();
  report.valid = report.violations.empty();
  return report;
}

std::optional<std::vector<OrientedEdge>> find_oriented_cycle(const Orientation& o) {
  // Stream digraph: tail -> head for every stream.
  std::map<Vertex, std::vector<OrientedEdge>> out;
  for (const OrientedEdge& e : o.edges())
    if (e.is_stream()) out[e.out_of()].push_back(e);

  enum class State { Fresh, Active, Done };
  std::map<Vertex, State> state;
  std::vector<OrientedEdge> path;

  // Iterative DFS; `path` holds the streams along the active branch.
  for (Vertex start : o.vertices()) {
    if (state[start] != State::Fresh) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{start, 0}};
    state[start] = State::Active;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto& succ = out[x];
      if (next == succ.size()) {
        state[x] = State::Done;
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const OrientedEdge e = succ[next++];
      const Vertex y = e.into;
      if (state[y] == State::Active) {
        // Close the cycle: streams from the first visit of y to here, then e.
        std::vector<OrientedEdge> cycle;
        std::size_t begin = 0;
        for (std::size_t k = 0; k < path.size(); ++k) {
          if (path[k].out_of() == y) {
            begin = k;
            break;
          }
          begin = path.size();
        }
        cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(begin), path.end());
        cycle.push_back(e);
        cycle.push_back(cycle.front());
        return cycle;
      }
      if (state[y] == State::Fresh) {
        state[y] = State::Active;
        path.push_back(e);
        stack.emplace_back(y, 0);
      }
    }
  }
  return std::nullopt;
}

Orientation remove_cycles(const Orientation& o, int dim) {
  for (Vertex x : o.vertices()) {
    if (o.degree(x) < dim + 1 || o.in_degree(x) != dim) {
      throw Error(ErrorKind::PreconditionViolated,
                  "vertex " + std::to_string(x) + " needs degree >= d+1 and in-degree d before removing cycles");
    }
  }
  Orientation current = o;
  while (auto cycle = find_oriented_cycle(current)) {
    // cycle[k] enters the vertex cycle[k+1] leaves; pick the smallest such vertex.
    std::size_t best = 0;
    for (std::size_t k = 0; k + 1 < cycle->size(); ++k) {
      if ((*cycle)[k].into < (*cycle)[best].into) best = k;
    }
    const OrientedEdge incoming = (*cycle)[best];
    const OrientedEdge outgoing = (*cycle)[best + 1];
    current = current.with(OrientedEdge::sink(incoming.edge.u, incoming.edge.v));
    current = current.with(OrientedEdge::source(outgoing.edge.u, outgoing.edge.v));
  }
  return current;
}

Orientation orientation_from_choices(const std::vector<Edge>& h_edges,
                                     const std::vector<std::pair<Vertex, std::vector<Edge>>>& incoming) {
  std::map<Edge, std::vector<Vertex>> picked_at;
  for (const auto& [x, edges] : incoming)
    for (const Edge& e : edges) picked_at[e].push_back(x);

  std::vector<OrientedEdge> oriented;
  oriented.reserve(h_edges.size());
  for (const Edge& e : h_edges) {
    const auto it = picked_at.find(e);
    const std::size_t count = it == picked_at.end() ? 0 : it->second.size();
    if (count == 2) {
      oriented.push_back(OrientedEdge::source(e.u, e.v));
    } else if (count == 1) {
      oriented.push_back(OrientedEdge::stream(e.u, e.v, it->second.front()));
    } else {
      oriented.push_back(OrientedEdge::sink(e.u, e.v));
    }
  }
  return Orientation(std::move(oriented));
}

OrientationSearch::OrientationSearch(const Graph& g, int dim, SearchLimits limits)
    : graph_(g), dim_(dim), limits_(limits) {
  if (g.num_edges() >= 64) throw Error(ErrorKind::SearchBudgetExceeded, "orientation search supports < 64 edges");
  mask_end_ = std::uint64_t{1} << g.num_edges();
}

bool OrientationSearch::advance_subset() {
  while (true) {
    ++mask_;
    if (mask_ >= mask_end_) return false;
    if (++subsets_ > limits_.max_subsets) {
      throw Error(ErrorKind::SearchBudgetExceeded, "edge-subset budget exhausted");
    }
    h_edges_.clear();
    std::map<Vertex, std::vector<Edge>> incident;
    for (std::size_t i = 0; i < graph_.num_edges(); ++i) {
      if (!(mask_ >> i & 1)) continue;
      const Edge& e = graph_.edges()[i];
      h_edges_.push_back(e);
      incident[e.u].push_back(e);
      incident[e.v].push_back(e);
    }
    bool ok = true;
    for (const auto& [x, edges] : incident) {
      if (static_cast<int>(edges.size()) < dim_ + 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    h_vertices_.clear();
    incident_.clear();
    choice_.clear();
    for (auto& [x, edges] : incident) {
      std::sort(edges.begin(), edges.end());
      h_vertices_.push_back(x);
      incident_.push_back(std::move(edges));
      std::vector<std::size_t> first(static_cast<std::size_t>(dim_));
      for (std::size_t k = 0; k < first.size(); ++k) first[k] = k;
      choice_.push_back(std::move(first));
    }
    return true;
  }
}

bool OrientationSearch::advance_choice() {
  // Odometer over per-vertex d-subsets, last vertex fastest.
  for (std::size_t v = choice_.size(); v-- > 0;) {
    auto& pick = choice_[v];
    const std::size_t n = incident_[v].size();
    const std::size_t k = pick.size();
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i > 0) {
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  }
  return false;
}

Orientation OrientationSearch::current_orientation() const {
  std::vector<std::pair<Vertex, std::vector<Edge>>> incoming;
  incoming.reserve(h_vertices_.size());
  for (std::size_t v = 0; v < h_vertices_.size(); ++v) {
    std::vector<Edge> chosen;
    for (std::size_t idx : choice_[v]) chosen.push_back(incident_[v][idx]);
    incoming.emplace_back(h_vertices_[v], std::move(chosen));
  }
  return orientation_from_choices(h_edges_, incoming);
}

std::optional<Orientation> OrientationSearch::next() {
  if (exhausted_) return std::nullopt;
  while (true) {
    if (!have_subset_) {
      if (!advance_subset()) {
        exhausted_ = true;
        return std::nullopt;
      }
      have_subset_ = true;
    } else if (!advance_choice()) {
      have_subset_ = false;
      continue;
    }
    if (++orientations_ > limits_.max_orientations) {
      throw Error(ErrorKind::SearchBudgetExceeded, "orientation budget exhausted");
    }
    Orientation o = current_orientation();
    if (!find_oriented_cycle(o)) return o;
  }
}

std::vector<Orientation> enumerate_orientations(const Graph& g, int dim, SearchLimits limits) {
  OrientationSearch search(g, dim, limits);
  std::vector<Orientation> out;
  while (auto o = search.next()) out.push_back(std::move(*o));
  return out;
}

}  // namespace genrig
