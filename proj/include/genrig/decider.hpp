#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "genrig/certificate.hpp"
#include "genrig/graph.hpp"
#include "genrig/oracle.hpp"
#include "genrig/orientation.hpp"

namespace genrig {

enum class Outcome { Rigid, Flexible, InconclusiveRigid };
enum class DecisionMethod { Oracle, TheoremSearch, TheoremKernel };
enum class DecisionMode { Kernel, Search };

std::string to_string(Outcome o);
std::string to_string(DecisionMethod m);
std::string to_string(DecisionMode m);

struct DecideOptions {
  DecisionMode mode = DecisionMode::Kernel;
  std::uint64_t seed = 0;
  int trials = 3;                 // oracle placements
  bool verify = false;            // cross-check against the rank oracle
  BalanceMode balance = BalanceMode::Probabilistic;
  SearchLimits limits{};
};

struct Decision {
  Outcome outcome = Outcome::Rigid;
  DecisionMethod method = DecisionMethod::Oracle;
  std::optional<Orientation> certificate;
  std::optional<BalanceReport> evidence;
  std::optional<RankReport> oracle;
  std::optional<bool> agreement;
  bool exhaustive = false;          // search mode: the whole space was examined
  bool budget_exhausted = false;    // search mode: a limit stopped the search
  std::uint64_t orientations_examined = 0;
  std::int64_t tightness = 0;
  std::optional<Graph> reduced;     // set by decide() after surplus reduction
};

// Kernel-guided construction: one left-kernel vector with a single free
// variable set to 1, H its support, that edge a sink, d incoming edges per
// vertex toward the smallest neighbours, then cycle removal. nullopt when the
// left kernel at the sampled placement is zero.
std::optional<Orientation> certificate_from_kernel(const Graph& g, int dim, std::uint64_t seed);

// Requires tightness(g, dim) == 0 (PreconditionViolated).
Decision decide_tight(const Graph& g, int dim, const DecideOptions& options = {});

// Greedily deletes edges that keep the rigidity rank at d v - C(d+1,2) until
// the graph is tight. Requires positive tightness; CannotReduce when the rank
// is already below the bound.
Graph reduce_surplus(const Graph& g, int dim, std::uint64_t seed, int trials = 3);

// Any edge count: too few edges is flexible outright, surplus is reduced
// first (CannotReduce becomes a flexible oracle verdict).
Decision decide(const Graph& g, int dim, const DecideOptions& options = {});

}  // namespace genrig
