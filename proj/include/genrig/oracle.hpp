#pragma once

#include <cstdint>
#include <vector>

#include "genrig/graph.hpp"
#include "genrig/linalg.hpp"

namespace genrig {

// Rows follow g.edges(); the columns of vertex x are [(x-1) d, x d). The row of
// edge (i,j) carries e_ij in the block of i and e_ji in the block of j, so the
// block of vertex i in wA is sum_j w_ij e_ij.
struct RigidityMatrix {
  int dim = 0;
  int num_vertices = 0;
  RationalMatrix entries;
};

RigidityMatrix build_rigidity_matrix(const Graph& g, const Placement& p);

// Integer coordinates drawn uniformly from [-kCoordinateBound, kCoordinateBound].
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 20;

// Deterministic in (g, dim, seed); every vertex 1..v is placed.
Placement random_placement(const Graph& g, int dim, std::uint64_t seed);
Placement random_placement(int num_vertices, int dim, std::uint64_t seed);

enum class RankBackend { Exact, ModPrime };

enum class Verdict { Rigid, Flexible };
const char* to_string(Verdict v);

struct RankReport {
  std::size_t rank = 0;
  std::int64_t right_kernel_dim = 0;
  std::int64_t left_kernel_dim = 0;
  Verdict verdict = Verdict::Flexible;
  std::uint64_t seed = 0;
  int trials = 0;
};

std::size_t rigidity_rank(const Graph& g, const Placement& p, RankBackend backend = RankBackend::Exact);

// Maximum rank over `trials` placements drawn with seeds seed, seed+1, ...
RankReport oracle_decide(const Graph& g, int dim, std::uint64_t seed = 0, int trials = 3,
                         RankBackend backend = RankBackend::Exact);

// Basis of {w : wA = 0} at p (exact). Vector entries follow g.edges().
std::vector<RationalVector> left_kernel_basis(const Graph& g, const Placement& p);

}  // namespace genrig
