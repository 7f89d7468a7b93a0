#include "genrig/decider.hpp"

#include <algorithm>
#include <map>

#include "genrig/error.hpp"
#include "genrig/linalg.hpp"

namespace genrig {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Rigid: return "rigid";
    case Outcome::Flexible: return "flexible";
    case Outcome::InconclusiveRigid: return "inconclusive-rigid";
  }
  return "?";
}

std::string to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::Oracle: return "oracle";
    case DecisionMethod::TheoremSearch: return "theorem-search";
    case DecisionMethod::TheoremKernel: return "theorem-kernel";
  }
  return "?";
}

std::string to_string(DecisionMode m) { return m == DecisionMode::Kernel ? "kernel" : "search"; }

std::optional<Orientation> certificate_from_kernel(const Graph& g, int dim, std::uint64_t seed) {
  if (g.num_edges() == 0) return std::nullopt;
  const Placement p = random_placement(g, dim, seed);
  const RationalMatrix at = build_rigidity_matrix(g, p).entries.transposed();
  const RowEchelon e = rref(at);
  std::vector<bool> pivot(g.num_edges(), false);
  for (std::size_t c : e.pivot_columns) pivot[c] = true;
  const auto free = std::find(pivot.begin(), pivot.end(), false);
  if (free == pivot.end()) return std::nullopt;
  const std::size_t f = static_cast<std::size_t>(free - pivot.begin());

  // The unique kernel vector with w_f = 1 and every other free variable 0.
  RationalVector w(g.num_edges(), Rational(0));
  w[f] = 1;
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) w[e.pivot_columns[k]] = -e.reduced(k, f);

  std::vector<Edge> h;
  std::map<Vertex, std::vector<Edge>> incident;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    const Edge edge = g.edges()[i];
    h.push_back(edge);
    incident[edge.u].push_back(edge);
    incident[edge.v].push_back(edge);
  }
  const Edge sink = g.edges()[f];

  std::vector<std::pair<Vertex, std::vector<Edge>>> incoming;
  for (auto& [x, edges] : incident) {
    if (static_cast<int>(edges.size()) < dim + 1) {
      throw Error(ErrorKind::SingularDenominator,
                  "kernel support has a vertex of degree <= d; placement seed " + std::to_string(seed) + " is not generic");
    }
    std::vector<Edge> candidates;
    for (const Edge& edge : edges)
      if (edge != sink) candidates.push_back(edge);
    std::sort(candidates.begin(), candidates.end(),
              [x](const Edge& a, const Edge& b) { return a.other(x) < b.other(x); });
    candidates.resize(static_cast<std::size_t>(dim));
    incoming.emplace_back(x, std::move(candidates));
  }
  return remove_cycles(orientation_from_choices(h, incoming), dim);
}

namespace {

void cross_check(const Graph& g, int dim, const DecideOptions& options, Decision& d) {
  if (!options.verify) return;
  d.oracle = oracle_decide(g, dim, options.seed, options.trials);
  const bool rigid = d.outcome != Outcome::Flexible;
  d.agreement = rigid == (d.oracle->verdict == Verdict::Rigid);
}

}  // namespace

Decision decide_tight(const Graph& g, int dim, const DecideOptions& options) {
  Decision d;
  d.tightness = tightness(g, dim);
  if (d.tightness != 0) {
    throw Error(ErrorKind::PreconditionViolated,
                "decide_tight needs |E| = d v - C(d+1,2); tightness is " + std::to_string(d.tightness));
  }
  BalanceOptions balance;
  balance.mode = options.balance;
  balance.seed = options.seed;

  if (options.mode == DecisionMode::Kernel) {
    d.method = DecisionMethod::TheoremKernel;
    if (auto gamma = certificate_from_kernel(g, dim, options.seed)) {
      d.outcome = Outcome::Flexible;
      d.evidence = is_balanced(*gamma, dim, balance);
      d.certificate = std::move(gamma);
    } else {
      d.outcome = Outcome::Rigid;
    }
    cross_check(g, dim, options, d);
    return d;
  }

  d.method = DecisionMethod::TheoremSearch;
  OrientationSearch search(g, dim, options.limits);
  try {
    while (auto gamma = search.next()) {
      BalanceReport report = is_balanced(*gamma, dim, balance);
      if (report.balanced) {
        d.outcome = Outcome::Flexible;
        d.certificate = std::move(gamma);
        d.evidence = std::move(report);
        break;
      }
    }
    if (!d.certificate) {
      d.outcome = Outcome::Rigid;
      d.exhaustive = true;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SearchBudgetExceeded) throw;
    d.outcome = Outcome::InconclusiveRigid;
    d.budget_exhausted = true;
  }
  d.orientations_examined = search.orientations_examined();
  cross_check(g, dim, options, d);
  return d;
}

Graph reduce_surplus(const Graph& g, int dim, std::uint64_t seed, int trials) {
  const std::int64_t surplus = tightness(g, dim);
  if (surplus <= 0) throw Error(ErrorKind::PreconditionViolated, "reduce_surplus needs positive tightness");
  if (g.num_vertices() < dim) throw Error(ErrorKind::PreconditionViolated, "reduce_surplus needs at least d vertices");
  const std::size_t target = static_cast<std::size_t>(static_cast<std::int64_t>(dim) * g.num_vertices() -
                                                      binomial2(dim + 1));
  // Use the placement that attains the oracle's maximum rank.
  Placement best;
  std::size_t best_rank = 0;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    Placement p = random_placement(g, dim, seed + static_cast<std::uint64_t>(t));
    const std::size_t r = rigidity_rank(g, p);
    if (t == 0 || r > best_rank) {
      best_rank = r;
      best = std::move(p);
    }
  }
  if (best_rank < target) {
    throw Error(ErrorKind::CannotReduce, "rank " + std::to_string(best_rank) + " is below the tight bound " +
                                             std::to_string(target) + "; the graph is flexible");
  }
  Graph current = g;
  std::size_t i = 0;
  while (current.num_edges() > target && i < current.num_edges()) {
    Graph candidate = current.without_edge(i);
    if (rigidity_rank(candidate, best) == target) {
      current = std::move(candidate);
    } else {
      ++i;
    }
  }
  return current;
}

Decision decide(const Graph& g, int dim, const DecideOptions& options) {
  const std::int64_t t = tightness(g, dim);
  if (g.num_vertices() < dim) {
    // below d vertices the edge count is meaningless; rigid exactly when complete
    Decision d;
    d.tightness = t;
    d.method = DecisionMethod::Oracle;
    d.oracle = oracle_decide(g, dim, options.seed, options.trials);
    d.outcome = d.oracle->verdict == Verdict::Rigid ? Outcome::Rigid : Outcome::Flexible;
    d.agreement = true;
    return d;
  }
  if (t == 0) return decide_tight(g, dim, options);
  if (t < 0) {
    // Fewer rows than d v - C(d+1,2): the right kernel is too big.
    Decision d;
    d.tightness = t;
    d.outcome = Outcome::Flexible;
    d.method = DecisionMethod::Oracle;
    d.oracle = oracle_decide(g, dim, options.seed, options.trials);
    d.agreement = d.oracle->verdict == Verdict::Flexible;
    return d;
  }
  try {
    Graph reduced = reduce_surplus(g, dim, options.seed, options.trials);
    Decision d = decide_tight(reduced, dim, options);
    d.tightness = t;
    d.reduced = std::move(reduced);
    return d;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CannotReduce) throw;
    Decision d;
    d.tightness = t;
    d.outcome = Outcome::Flexible;
    d.method = DecisionMethod::Oracle;
    d.oracle = oracle_decide(g, dim, options.seed, options.trials);
    d.agreement = d.oracle->verdict == Verdict::Flexible;
    return d;
  }
}

}  // namespace genrig
