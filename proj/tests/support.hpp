#pragma once

// Fixtures and independent reference implementations shared by the unit tests
// and the acceptance runner. Nothing here calls into the rank or straightening
// code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genrig/graph.hpp"
#include "genrig/linalg.hpp"
#include "genrig/orientation.hpp"

namespace genrig::fixtures {

inline Graph double_banana() {
  return Graph(8, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4},
                                                         {1, 5}, {2, 5}, {3, 5}, {4, 6}, {4, 7}, {4, 8},
                                                         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
}

// One sink (1,2), seven sources, ten streams.
inline Orientation double_banana_gamma() {
  using E = OrientedEdge;
  return Orientation({E::source(1, 3), E::source(5, 6), E::source(5, 7), E::source(6, 7), E::source(7, 8),
                      E::source(4, 6), E::source(4, 8), E::sink(1, 2), E::stream(3, 5, 3), E::stream(1, 5, 1),
                      E::stream(2, 5, 2), E::stream(2, 3, 2), E::stream(3, 4, 3), E::stream(1, 4, 1),
                      E::stream(2, 4, 2), E::stream(5, 8, 5), E::stream(6, 8, 8), E::stream(4, 7, 4)});
}

// Leibniz expansion; only for tiny matrices.
inline Rational leibniz_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, static_cast<std::size_t>(perm[i]));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gauss-Jordan rank over Q, deliberately not the library's Bareiss.
inline std::size_t naive_rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline bool connected(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  for (Vertex x = 2; x <= g.num_vertices(); ++x)
    if (find(x) != find(1)) return false;
  return true;
}

// Laman count for d = 2: |E| = 2v - 3 and every vertex subset of size k >= 2
// spans at most 2k - 3 edges. Brute force over subsets.
inline bool laman_rigid(const Graph& g) {
  const int v = g.num_vertices();
  if (v == 1) return g.num_edges() == 0;
  if (static_cast<int>(g.num_edges()) != 2 * v - 3) return false;
  for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2) continue;
    int spanned = 0;
    for (const Edge& e : g.edges())
      if ((mask >> (e.u - 1) & 1) && (mask >> (e.v - 1) & 1)) ++spanned;
    if (spanned > 2 * k - 3) return false;
  }
  return true;
}

// Canonical form of a small labelled graph: the lexicographically smallest
// sorted edge list over all vertex relabelings.
inline std::vector<std::pair<int, int>> canonical_form(const Graph& g) {
  const int v = g.num_vertices();
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
      const int a = perm[static_cast<std::size_t>(e.u - 1)], b = perm[static_cast<std::size_t>(e.v - 1)];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    if (first || edges < best) {
      best = std::move(edges);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every graph on v vertices with m edges, one per isomorphism class.
inline std::vector<Graph> graphs_up_to_isomorphism(int v, int m) {
  std::vector<Edge> all;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
  std::vector<Graph> out;
  if (m < 0 || m > static_cast<int>(all.size())) return out;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) edges.push_back(all[i]);
    Graph g(v, edges);
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : code) ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> edges;
  for (int x : code) {
    for (int leaf = 1; leaf <= n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x)
    if (degree[static_cast<std::size_t>(x)] == 1) rest.push_back(x);
  if (rest.size() == 2) edges.emplace_back(rest[0], rest[1]);
  return Graph(n, edges);
}

// AHU encoding of a tree rooted at its center(s); equal strings iff isomorphic.
inline std::string tree_signature(const Graph& t) {
  const int n = t.num_vertices();
  if (n == 1) return "()";
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : t.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<int> layer;
  for (int x = 1; x <= n; ++x) {
    degree[static_cast<std::size_t>(x)] = static_cast<int>(adj[static_cast<std::size_t>(x)].size());
    if (degree[static_cast<std::size_t>(x)] <= 1) layer.push_back(x);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int x : layer)
      for (int y : adj[static_cast<std::size_t>(x)])
        if (--degree[static_cast<std::size_t>(y)] == 1) next.push_back(y);
    layer = std::move(next);
  }
  std::function<std::string(int, int)> encode = [&](int x, int parent) {
    std::vector<std::string> kids;
    for (int y : adj[static_cast<std::size_t>(x)])
      if (y != parent) kids.push_back(encode(y, x));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : layer) {
    const std::string s = encode(c, 0);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// One labelled representative per unlabelled tree on n vertices.
inline std::vector<Graph> trees_up_to_isomorphism(int n) {
  if (n == 1) return {Graph(1, std::vector<Edge>{})};
  if (n == 2) return {Graph(2, std::vector<Edge>{Edge(1, 2)})};
  std::map<std::string, Graph> classes;
  std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    Graph t = tree_from_pruefer(n, code);
    classes.emplace(tree_signature(t), std::move(t));
    std::size_t i = 0;
    while (i < code.size() && code[i] == n) code[i++] = 1;
    if (i == code.size()) break;
    ++code[i];
  }
  std::vector<Graph> out;
  for (auto& [sig, g] : classes) out.push_back(std::move(g));
  return out;
}

// Uniform simple graph with v vertices and m edges.
inline Graph random_graph(int v, int m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return Graph(v, all);
}

}  // namespace genrig::fixtures
