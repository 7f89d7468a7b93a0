#include "genrig/certificate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "genrig/error.hpp"
#include "genrig/evaluate.hpp"
#include "genrig/linalg.hpp"
#include "genrig/poly_text.hpp"

namespace genrig {

namespace {

SignedTableau signed_bracket(const std::vector<int>& tuple) {
  const SignedBracket b = bracket_from_tuple(tuple);
  if (b.is_zero()) throw Error(ErrorKind::InvalidOrientation, "repeated vertex in a shelf bracket");
  return {b.sign, Tableau{b.bracket}};
}

void require_source(const Orientation& o, const OrientedEdge& mu) {
  const auto found = o.find(mu.edge);
  if (!found || !found->is_source()) {
    throw Error(ErrorKind::InvalidOrientation, to_string(mu.edge) + " is not a source of the orientation");
  }
}

void require_sink(const Orientation& o, const OrientedEdge& nu) {
  const auto found = o.find(nu.edge);
  if (!found || !found->is_sink()) {
    throw Error(ErrorKind::InvalidOrientation, to_string(nu.edge) + " is not a sink of the orientation");
  }
}

SignedTableau power(const SignedTableau& t, std::uint64_t n) {
  SignedTableau out;
  for (std::uint64_t i = 0; i < n; ++i) out = out * t;
  return out;
}

// a / b where b divides a as monomials.
SignedTableau exact_quotient(const SignedTableau& a, const SignedTableau& b) {
  auto q = a.tableau.divide(b.tableau);
  if (!q) throw Error(ErrorKind::PreconditionViolated, "denominator does not divide " + to_string(a.tableau));
  return {a.sign * b.sign, std::move(*q)};
}

std::string pair_provenance(const OrientedEdge& mu, const OrientedEdge& nu) {
  return "T[" + to_string(mu) + "," + to_string(nu) + "]";
}

std::string sigma_provenance(const std::vector<std::size_t>& sigma) {
  std::string s = "T_sigma[";
  for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + "]";
}

void check_sigma(const std::vector<std::size_t>& sigma, std::size_t k, std::size_t l) {
  if (l > k) throw Error(ErrorKind::TooManySinks, std::to_string(l) + " sinks but only " + std::to_string(k) + " sources");
  if (sigma.size() != l) throw Error(ErrorKind::ShapeMismatch, "sigma must pick one source per sink");
  std::set<std::size_t> seen;
  for (std::size_t s : sigma) {
    if (s >= k || !seen.insert(s).second) throw Error(ErrorKind::ShapeMismatch, "sigma must be injective into the sources");
  }
}

// Sum over permutations pi of sgn(pi) prod_j entry(j, pi(j)).
template <class Entry>
CertificatePolynomial permutation_expand(std::size_t l, Entry entry) {
  CertificatePolynomial out;
  std::vector<int> pi(l);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    BracketPolynomial term = BracketPolynomial::monomial(Tableau{});
    std::size_t chains = 1;
    for (std::size_t j = 0; j < l && !term.is_zero(); ++j) {
      const CertificatePolynomial& e = entry(j, static_cast<std::size_t>(pi[j]));
      term = term * e.poly;
      chains *= e.chains;
    }
    if (permutation_sign(pi) < 0) term = -term;
    out.poly += term;
    out.chains += chains;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

MultiDegree edge_degree(const Edge& e) { return {{e.u, 1}, {e.v, 1}}; }

void accumulate(MultiDegree& into, const MultiDegree& add, int sign) {
  for (const auto& [x, k] : add) {
    into[x] += sign * k;
    if (into[x] == 0) into.erase(x);
  }
}

}  // namespace

std::vector<std::vector<int>> OrientationTree::maximal_chains() const {
  std::vector<std::vector<int>> chains;
  if (nodes.empty()) return chains;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int n) {
    path.push_back(n);
    const auto& kids = nodes[static_cast<std::size_t>(n)].children;
    if (kids.empty()) chains.push_back(path);
    for (int c : kids) walk(c);
    path.pop_back();
  };
  walk(0);
  return chains;
}

std::vector<int> OrientationTree::up_closure(int n) const {
  std::vector<int> out;
  for (int x = n; x >= 0; x = nodes[static_cast<std::size_t>(x)].parent) out.push_back(x);
  return out;
}

void require_certificate_ready(const Orientation& o, int dim) {
  if (o.empty()) throw Error(ErrorKind::InvalidOrientation, "empty orientation");
  for (Vertex x : o.vertices()) {
    if (o.degree(x) < dim + 1 || o.in_degree(x) != dim) {
      throw Error(ErrorKind::InvalidOrientation,
                  "vertex " + std::to_string(x) + " needs degree >= d+1 and in-degree d");
    }
  }
  if (auto cycle = find_oriented_cycle(o)) {
    throw Error(ErrorKind::InvalidOrientation, "orientation has an oriented cycle through " + to_string(cycle->front()));
  }
}

namespace {

void expand(const Orientation& o, OrientationTree& tree, int node, TreeLimits limits) {
  const OrientedEdge label = *tree.nodes[static_cast<std::size_t>(node)].label;
  if (label.is_sink()) return;
  for (const OrientedEdge& child : o.out_edges(label.into)) {
    if (tree.nodes.size() >= limits.max_nodes) {
      throw Error(ErrorKind::ExpressionBlowup, "tree exceeds " + std::to_string(limits.max_nodes) + " nodes");
    }
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({child, node, {}});
    tree.nodes[static_cast<std::size_t>(node)].children.push_back(id);
    expand(o, tree, id, limits);
  }
}

}  // namespace

StreamTree build_stream_tree(const Orientation& o, const OrientedEdge& root, TreeLimits limits) {
  if (!root.is_stream()) throw Error(ErrorKind::InvalidOrientation, "stream tree root must be a stream");
  const auto found = o.find(root.edge);
  if (!found || (found->is_stream() && found->into != root.into) || found->is_sink()) {
    throw Error(ErrorKind::InvalidOrientation, to_string(root) + " is not oriented that way");
  }
  if (find_oriented_cycle(o)) throw Error(ErrorKind::InvalidOrientation, "orientation has an oriented cycle");
  StreamTree tree;
  tree.nodes.push_back({root, -1, {}});
  expand(o, tree, 0, limits);
  return tree;
}

SourceTree build_source_tree(const Orientation& o, const OrientedEdge& mu, TreeLimits limits) {
  require_source(o, mu);
  if (find_oriented_cycle(o)) throw Error(ErrorKind::InvalidOrientation, "orientation has an oriented cycle");
  SourceTree tree;
  tree.source = OrientedEdge::source(mu.edge.u, mu.edge.v);
  tree.nodes.push_back({std::nullopt, -1, {}});
  for (Vertex head : {mu.edge.u, mu.edge.v}) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({OrientedEdge::stream(mu.edge.u, mu.edge.v, head), 0, {}});
    tree.nodes[0].children.push_back(id);
    expand(o, tree, id, limits);
    (head == mu.edge.u ? tree.positive_child : tree.negative_child) = id;
  }
  return tree;
}

ArrowWeight arrow_weight(const Orientation& o, Vertex a, Vertex b, Vertex c, int dim) {
  std::vector<int> j;
  for (const OrientedEdge& e : o.in_edges(a)) {
    const Vertex other = e.edge.other(a);
    if (other != b) j.push_back(other);
  }
  if (static_cast<int>(j.size()) != dim - 1) {
    throw Error(ErrorKind::InvalidOrientation, "vertex " + std::to_string(a) + " must have in-degree " +
                                                    std::to_string(dim) + " including the edge from " +
                                                    std::to_string(b));
  }
  std::sort(j.begin(), j.end());
  std::vector<int> num = j, den = j;
  num.push_back(a);
  num.push_back(c);
  den.push_back(b);
  den.push_back(a);
  return {signed_bracket(num), signed_bracket(den)};
}

DecoratedTree decorate(const OrientationTree& tree, const Orientation& o, int dim) {
  DecoratedTree out{tree, std::vector<std::optional<SignedTableau>>(tree.size()),
                    std::vector<std::optional<SignedTableau>>(tree.size())};
  for (std::size_t n = 0; n < tree.size(); ++n) {
    const TreeNode& node = tree.nodes[n];
    if (!node.label || node.children.empty()) continue;
    const Vertex a = node.label->into;
    const Vertex b = node.label->out_of();
    for (int child : node.children) {
      const Vertex c = tree.nodes[static_cast<std::size_t>(child)].label->edge.other(a);
      const ArrowWeight w = arrow_weight(o, a, b, c, dim);
      out.left[static_cast<std::size_t>(child)] = w.numerator;
      out.right[n] = w.denominator;
    }
  }
  return out;
}

DecoratedTree clear_right_shelves(const DecoratedTree& t, const std::vector<std::size_t>& chain_order) {
  DecoratedTree out = t;
  const auto chains = t.tree.maximal_chains();
  std::vector<std::size_t> order = chain_order;
  if (order.empty()) {
    order.resize(chains.size());
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i || sorted.size() != chains.size()) {
      throw Error(ErrorKind::ShapeMismatch, "chain order must permute the maximal chains");
    }
  }

  for (std::size_t idx : order) {
    const auto& chain = chains[idx];
    // Incomparable relatives hang off chain[pos]; they collect the right
    // shelves of the chain strictly below it.
    for (std::size_t pos = 0; pos + 1 < chain.size(); ++pos) {
      SignedTableau below;
      for (std::size_t q = pos + 1; q < chain.size(); ++q) {
        if (const auto& r = out.right[static_cast<std::size_t>(chain[q])]) below = below * *r;
      }
      for (int xi : t.tree.nodes[static_cast<std::size_t>(chain[pos])].children) {
        if (xi == chain[pos + 1]) continue;
        auto& shelf = out.left[static_cast<std::size_t>(xi)];
        shelf = shelf ? *shelf * below : below;
      }
    }
    for (int eta : chain) out.right[static_cast<std::size_t>(eta)].reset();
  }
  return out;
}

std::vector<SignedTableau> left_shelf_chain_products(const DecoratedTree& t) {
  std::vector<SignedTableau> out;
  for (const auto& chain : t.tree.maximal_chains()) {
    SignedTableau product;
    for (int eta : chain) {
      if (const auto& l = t.left[static_cast<std::size_t>(eta)]) product = product * *l;
    }
    out.push_back(std::move(product));
  }
  return out;
}

CertificatePolynomial t_mu_nu(const Orientation& o, const OrientedEdge& mu, const OrientedEdge& nu, int dim) {
  require_certificate_ready(o, dim);
  require_source(o, mu);
  require_sink(o, nu);
  const SourceTree tree = build_source_tree(o, mu);
  const DecoratedTree cleared = clear_right_shelves(decorate(tree, o, dim));
  const auto chains = tree.maximal_chains();
  const auto products = left_shelf_chain_products(cleared);

  CertificatePolynomial out;
  out.provenance = pair_provenance(o.find(mu.edge).value(), o.find(nu.edge).value());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& leaf = tree.nodes[static_cast<std::size_t>(chains[i].back())].label;
    if (!leaf || leaf->edge != nu.edge) continue;
    const int sign = chains[i][1] == tree.positive_child ? 1 : -1;
    out.poly.add_term(products[i].tableau, Rational(sign * products[i].sign));
    ++out.chains;
  }
  return out;
}

CertificatePolynomial t_sigma(const Orientation& o, const std::vector<std::size_t>& sigma, int dim) {
  require_certificate_ready(o, dim);
  const auto sources = o.sources();
  const auto sinks = o.sinks();
  check_sigma(sigma, sources.size(), sinks.size());
  std::map<std::pair<std::size_t, std::size_t>, CertificatePolynomial> cache;
  auto entry = [&](std::size_t j, std::size_t m) -> const CertificatePolynomial& {
    auto key = std::make_pair(sigma[j], m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, t_mu_nu(o, sources[sigma[j]], sinks[m], dim)).first;
    return it->second;
  };
  CertificatePolynomial out = permutation_expand(sinks.size(), entry);
  out.provenance = sigma_provenance(sigma);
  return out;
}

namespace {

// Oriented-edge DAG: nodes are the edges of the orientation, arrows run from
// an edge into x to every edge out of x.
class EdgeDag {
 public:
  EdgeDag(const Orientation& o, int dim) : o_(o), dim_(dim) {}

  // Number of directed paths from the source mu to the stream x, counting
  // the two endpoints of mu separately.
  std::uint64_t paths_to(const OrientedEdge& mu, const OrientedEdge& x) {
    const auto key = std::make_pair(mu.edge, x.edge);
    if (auto it = paths_.find(key); it != paths_.end()) return it->second;
    std::uint64_t total = 0;
    const Vertex tail = x.out_of();
    for (const OrientedEdge& e : o_.in_edges(tail)) {
      if (e.is_source()) {
        if (e.edge == mu.edge) ++total;
      } else {
        total += paths_to(mu, e);
      }
    }
    paths_.emplace(key, total);
    return total;
  }

  const ArrowWeight& weight(Vertex a, Vertex b, Vertex c) {
    const auto key = std::make_tuple(a, b, c);
    auto it = weights_.find(key);
    if (it == weights_.end()) it = weights_.emplace(key, arrow_weight(o_, a, b, c, dim_)).first;
    return it->second;
  }

  const Orientation& orientation() const { return o_; }

 private:
  const Orientation& o_;
  int dim_;
  std::map<std::pair<Edge, Edge>, std::uint64_t> paths_;
  std::map<std::tuple<Vertex, Vertex, Vertex>, ArrowWeight> weights_;
};

SignedTableau d_of_mu_impl(EdgeDag& dag, const OrientedEdge& mu, int dim) {
  const Orientation& o = dag.orientation();
  SignedTableau out;
  for (Vertex a : {mu.edge.u, mu.edge.v}) {
    const Vertex b = mu.edge.other(a);
    const auto outs = o.out_edges(a);
    if (outs.empty()) continue;
    out = out * dag.weight(a, b, outs.front().edge.other(a)).denominator;
  }
  for (const OrientedEdge& x : o.streams()) {
    const std::uint64_t n = dag.paths_to(mu, x);
    if (n == 0) continue;
    const auto outs = o.out_edges(x.into);
    if (outs.empty()) continue;
    out = out * power(dag.weight(x.into, x.out_of(), outs.front().edge.other(x.into)).denominator, n);
  }
  (void)dim;
  return out;
}

struct PathStep {
  int sign = 1;
  SignedTableau numerator;
  SignedTableau denominator;
};

// Depth-first enumeration of node-disjoint path systems from sources[0..] to
// distinct sinks. `visit` receives the sink index chosen for each source and
// the accumulated arrow weights.
class PathSystems {
 public:
  PathSystems(EdgeDag& dag, std::vector<OrientedEdge> sources, std::vector<OrientedEdge> sinks, PathLimits limits)
      : dag_(dag), sources_(std::move(sources)), sinks_(std::move(sinks)), limits_(limits) {}

  template <class Visit>
  void run(Visit visit) {
    std::vector<std::size_t> pi;
    PathStep acc;
    std::set<Edge> used;
    for (const auto& s : sources_) used.insert(s.edge);
    next_source(0, pi, acc, used, visit);
  }

 private:
  template <class Visit>
  void next_source(std::size_t i, std::vector<std::size_t>& pi, const PathStep& acc, std::set<Edge>& used,
                   Visit& visit) {
    if (i == sources_.size()) {
      if (++systems_ > limits_.max_path_systems) {
        throw Error(ErrorKind::SearchBudgetExceeded, "path-system budget exhausted");
      }
      visit(pi, acc);
      return;
    }
    const OrientedEdge& mu = sources_[i];
    for (Vertex a : {mu.edge.u, mu.edge.v}) {
      PathStep step = acc;
      step.sign *= a == mu.edge.u ? 1 : -1;
      walk(i, a, mu.edge.other(a), pi, step, used, visit);
    }
  }

  template <class Visit>
  void walk(std::size_t i, Vertex a, Vertex b, std::vector<std::size_t>& pi, const PathStep& acc,
            std::set<Edge>& used, Visit& visit) {
    for (const OrientedEdge& e : dag_.orientation().out_edges(a)) {
      if (used.count(e.edge)) continue;
      const Vertex c = e.edge.other(a);
      const ArrowWeight& w = dag_.weight(a, b, c);
      PathStep step{acc.sign, acc.numerator * w.numerator, acc.denominator * w.denominator};
      used.insert(e.edge);
      if (e.is_sink()) {
        const auto it = std::find_if(sinks_.begin(), sinks_.end(), [&](const OrientedEdge& s) { return s.edge == e.edge; });
        if (it != sinks_.end()) {
          pi.push_back(static_cast<std::size_t>(it - sinks_.begin()));
          next_source(i + 1, pi, step, used, visit);
          pi.pop_back();
        }
      } else {
        walk(i, c, a, pi, step, used, visit);
      }
      used.erase(e.edge);
    }
  }

  EdgeDag& dag_;
  std::vector<OrientedEdge> sources_;
  std::vector<OrientedEdge> sinks_;
  PathLimits limits_;
  std::uint64_t systems_ = 0;
};

}  // namespace

SignedTableau d_of_mu(const Orientation& o, const OrientedEdge& mu, int dim) {
  require_certificate_ready(o, dim);
  require_source(o, mu);
  EdgeDag dag(o, dim);
  return d_of_mu_impl(dag, mu, dim);
}

CertificatePolynomial d_mu_times_q(const Orientation& o, const OrientedEdge& mu, const OrientedEdge& nu, int dim,
                                   PathLimits limits) {
  require_certificate_ready(o, dim);
  require_source(o, mu);
  require_sink(o, nu);
  EdgeDag dag(o, dim);
  const SignedTableau big_d = d_of_mu_impl(dag, mu, dim);
  CertificatePolynomial out;
  out.provenance = pair_provenance(o.find(mu.edge).value(), o.find(nu.edge).value());
  PathSystems systems(dag, {*o.find(mu.edge)}, {*o.find(nu.edge)}, limits);
  systems.run([&](const std::vector<std::size_t>&, const PathStep& step) {
    const SignedTableau term = exact_quotient(big_d * step.numerator, step.denominator);
    out.poly.add_term(term.tableau, Rational(step.sign * term.sign));
    ++out.chains;
  });
  return out;
}

CertificatePolynomial lgv_t_sigma(const Orientation& o, const std::vector<std::size_t>& sigma, int dim,
                                  PathLimits limits) {
  require_certificate_ready(o, dim);
  const auto sources = o.sources();
  const auto sinks = o.sinks();
  check_sigma(sigma, sources.size(), sinks.size());
  EdgeDag dag(o, dim);
  std::vector<OrientedEdge> chosen;
  SignedTableau big_d;
  for (std::size_t s : sigma) {
    chosen.push_back(sources[s]);
    big_d = big_d * d_of_mu_impl(dag, sources[s], dim);
  }
  CertificatePolynomial out;
  out.provenance = sigma_provenance(sigma);
  PathSystems systems(dag, chosen, sinks, limits);
  systems.run([&](const std::vector<std::size_t>& pi, const PathStep& step) {
    std::vector<int> perm(pi.begin(), pi.end());
    const SignedTableau term = exact_quotient(big_d * step.numerator, step.denominator);
    out.poly.add_term(term.tableau, Rational(permutation_sign(perm) * step.sign * term.sign));
    ++out.chains;
  });
  return out;
}

std::vector<std::vector<std::size_t>> sigma_choices(std::size_t k, std::size_t l) {
  std::vector<std::vector<std::size_t>> out;
  if (l > k) return out;
  std::vector<std::size_t> pick(l);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    std::size_t i = l;
    while (i > 0 && pick[i - 1] == k - l + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::string to_string(BalanceMode m) { return m == BalanceMode::Certified ? "certified" : "probabilistic"; }

BalanceReport is_balanced(const Orientation& o, int dim, const BalanceOptions& options) {
  require_certificate_ready(o, dim);
  const auto sources = o.sources();
  const auto sinks = o.sinks();
  BalanceReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  report.num_sources = sources.size();
  report.num_sinks = sinks.size();
  if (sinks.size() > sources.size()) {
    report.more_sinks_than_sources = true;
    report.balanced = true;
    return report;
  }

  const std::size_t k = sources.size(), l = sinks.size();
  std::vector<std::vector<CertificatePolynomial>> table(k);
  EdgeDag dag(o, dim);
  for (std::size_t a = 0; a < k; ++a) {
    const SignedTableau big_d = options.mode == BalanceMode::Probabilistic ? d_of_mu_impl(dag, sources[a], dim)
                                                                           : SignedTableau{};
    for (std::size_t m = 0; m < l; ++m) {
      CertificatePolynomial t = t_mu_nu(o, sources[a], sinks[m], dim);
      report.pairs.push_back({sources[a], sinks[m], t.chains, t.poly.size()});
      if (options.mode == BalanceMode::Probabilistic && !t.poly.is_zero()) {
        const Homogeneity h = is_multi_homogeneous(t.poly);
        MultiDegree expected = multidegree(big_d.tableau);
        accumulate(expected, edge_degree(sinks[m].edge), 1);
        accumulate(expected, edge_degree(sources[a].edge), -1);
        if (!h.homogeneous || h.degree != expected) {
          throw Error(ErrorKind::NotMultiHomogeneous, t.provenance + " breaks the telescoping multidegree");
        }
      }
      table[a].push_back(std::move(t));
    }
  }

  const auto choices = sigma_choices(k, l);
  report.balanced = true;
  if (options.mode == BalanceMode::Certified) {
    for (const auto& sigma : choices) {
      CertificatePolynomial t = permutation_expand(
          l, [&](std::size_t j, std::size_t m) -> const CertificatePolynomial& { return table[sigma[j]][m]; });
      SigmaEvidence ev{sigma, t.poly.size(), true, {}};
      if (!t.poly.is_zero()) {
        const BracketPolynomial reduced = t.poly.divided_by(t.poly.content_factor());
        const BracketPolynomial normal = straighten(reduced, options.straighten);
        ev.vanishes = normal.is_zero();
        if (!ev.vanishes) ev.normal_form = format_polynomial(normal);
      }
      report.balanced = report.balanced && ev.vanishes;
      report.sigmas.push_back(std::move(ev));
    }
    return report;
  }

  const int n = o.vertices().back();
  std::vector<bool> vanishes(choices.size(), true);
  for (int trial = 0; trial < options.trials; ++trial) {
    const GenericMatrix m = GenericMatrix::random(dim, n, options.seed + static_cast<std::uint64_t>(trial));
    RationalMatrix values(k, l);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < l; ++b) values(a, b) = evaluate(table[a][b].poly, m);
    for (std::size_t s = 0; s < choices.size(); ++s) {
      if (!vanishes[s]) continue;
      RationalMatrix minor(l, l);
      for (std::size_t j = 0; j < l; ++j)
        for (std::size_t b = 0; b < l; ++b) minor(j, b) = values(choices[s][j], b);
      if (det(minor) != 0) vanishes[s] = false;
    }
  }
  for (std::size_t s = 0; s < choices.size(); ++s) {
    report.sigmas.push_back({choices[s], 0, vanishes[s], {}});
    report.balanced = report.balanced && vanishes[s];
  }
  return report;
}

}  // namespace genrig
