#include "genrig/oracle.hpp"

#include <algorithm>
#include <random>

namespace genrig {

const char* to_string(Verdict v) { return v == Verdict::Rigid ? "rigid" : "flexible"; }

RigidityMatrix build_rigidity_matrix(const Graph& g, const Placement& p) {
  const int d = p.dim();
  p.require_complete(g);
  RigidityMatrix a{d, g.num_vertices(), RationalMatrix(g.num_edges(), static_cast<std::size_t>(d) * g.num_vertices())};
  for (std::size_t row = 0; row < g.num_edges(); ++row) {
    const Edge& e = g.edges()[row];
    const Point eij = edge_vector(p, e.u, e.v);
    for (int k = 0; k < d; ++k) {
      a.entries(row, static_cast<std::size_t>((e.u - 1) * d + k)) = eij[k];
      a.entries(row, static_cast<std::size_t>((e.v - 1) * d + k)) = -eij[k];
    }
  }
  return a;
}

Placement random_placement(const Graph& g, int dim, std::uint64_t seed) {
  return random_placement(g.num_vertices(), dim, seed);
}

Placement random_placement(int num_vertices, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps the draw independent of the standard library's
  // distribution implementation.
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(kCoordinateBound) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span);
  auto draw = [&] {
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return static_cast<std::int64_t>(x % span) - kCoordinateBound;
  };

  Placement p(dim);
  for (Vertex x = 1; x <= num_vertices; ++x) {
    Point pt;
    pt.reserve(dim);
    for (int k = 0; k < dim; ++k) pt.push_back(make_rational(draw()));
    p.set(x, std::move(pt));
  }
  return p;
}

std::size_t rigidity_rank(const Graph& g, const Placement& p, RankBackend backend) {
  const RigidityMatrix a = build_rigidity_matrix(g, p);
  if (backend == RankBackend::Exact) return rank(a.entries);
  Matrix<std::uint64_t> m(a.entries.rows(), a.entries.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = modp::from_rational(a.entries(r, c));
  return modp::rank(std::move(m));
}

RankReport oracle_decide(const Graph& g, int dim, std::uint64_t seed, int trials, RankBackend backend) {
  RankReport report;
  report.seed = seed;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const Placement p = random_placement(g, dim, seed + static_cast<std::uint64_t>(t));
    report.rank = std::max(report.rank, rigidity_rank(g, p, backend));
  }
  const std::int64_t r = static_cast<std::int64_t>(report.rank);
  report.right_kernel_dim = static_cast<std::int64_t>(dim) * g.num_vertices() - r;
  report.left_kernel_dim = static_cast<std::int64_t>(g.num_edges()) - r;
  // fewer than d vertices span a smaller affine space, so fewer trivial motions
  const std::int64_t v = g.num_vertices();
  const std::int64_t trivial = v >= dim ? binomial2(dim + 1) : dim * v - binomial2(v);
  report.verdict = report.right_kernel_dim == trivial ? Verdict::Rigid : Verdict::Flexible;
  return report;
}

std::vector<RationalVector> left_kernel_basis(const Graph& g, const Placement& p) {
  return left_nullspace(build_rigidity_matrix(g, p).entries);
}

}  // namespace genrig
