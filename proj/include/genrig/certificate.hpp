#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genrig/bracket.hpp"
#include "genrig/orientation.hpp"
#include "genrig/straighten.hpp"

namespace genrig {

struct TreeNode {
  // Edge label as treated in the tree; a source under its source-tree root
  // appears as the stream into one endpoint. Empty for the source-tree root.
  std::optional<OrientedEdge> label;
  int parent = -1;
  std::vector<int> children;
};

// Rooted tree of oriented edges; node 0 is the root. Children of (a,b)_a are
// the edges oriented out of a, in edge order; sinks are leaves.
struct OrientationTree {
  std::vector<TreeNode> nodes;
  // Source trees only.
  std::optional<OrientedEdge> source;
  int positive_child = -1;  // the stream into the smaller endpoint
  int negative_child = -1;

  std::size_t size() const noexcept { return nodes.size(); }
  bool is_leaf(int n) const { return nodes[static_cast<std::size_t>(n)].children.empty(); }
  // Maximal chains root to leaf, depth first with children in order.
  std::vector<std::vector<int>> maximal_chains() const;
  // Node indices from n up to the root, n first.
  std::vector<int> up_closure(int n) const;
};

using StreamTree = OrientationTree;
using SourceTree = OrientationTree;

struct TreeLimits {
  std::size_t max_nodes = std::size_t{1} << 20;  // ExpressionBlowup beyond this
};

// Requires every vertex of H to have degree >= d+1 and in-degree d, and no
// oriented cycle (InvalidOrientation otherwise).
void require_certificate_ready(const Orientation& o, int dim);

StreamTree build_stream_tree(const Orientation& o, const OrientedEdge& root, TreeLimits limits = {});
SourceTree build_source_tree(const Orientation& o, const OrientedEdge& mu, TreeLimits limits = {});

// Shelf tableaux of the arrow from (a,b)_a to the out-edge (a,c):
// numerator [J a c] and denominator [J b a], J the other in-neighbours of a
// in ascending order. Both sign-normalised.
struct ArrowWeight {
  SignedTableau numerator;
  SignedTableau denominator;
};
ArrowWeight arrow_weight(const Orientation& o, Vertex a, Vertex b, Vertex c, int dim);

struct DecoratedTree {
  OrientationTree tree;
  std::vector<std::optional<SignedTableau>> left;
  std::vector<std::optional<SignedTableau>> right;
};

DecoratedTree decorate(const OrientationTree& tree, const Orientation& o, int dim);

// Clears right shelves chain by chain. `chain_order` permutes the indices of
// tree.maximal_chains(); empty means the natural depth-first order.
DecoratedTree clear_right_shelves(const DecoratedTree& t, const std::vector<std::size_t>& chain_order = {});

// Product of the left shelves along each maximal chain, in maximal_chains() order.
std::vector<SignedTableau> left_shelf_chain_products(const DecoratedTree& t);

struct CertificatePolynomial {
  BracketPolynomial poly;
  std::string provenance;  // "T[(4,8)_{4,8},(1,2)_0]" or "T_sigma[0,3]"
  std::size_t chains = 0;  // signed chain or path-system terms before collection
};

CertificatePolynomial t_mu_nu(const Orientation& o, const OrientedEdge& mu, const OrientedEdge& nu, int dim);

// sigma lists 0-based indices into o.sources() (lexicographic), one per sink.
CertificatePolynomial t_sigma(const Orientation& o, const std::vector<std::size_t>& sigma, int dim);

// Product of every right shelf of the decorated source tree of mu, computed
// from path counts in the oriented-edge DAG rather than from the tree.
SignedTableau d_of_mu(const Orientation& o, const OrientedEdge& mu, int dim);

struct PathLimits {
  std::uint64_t max_path_systems = std::uint64_t{1} << 22;  // SearchBudgetExceeded beyond this
};

// D(mu) * Q_{mu,nu} expanded over directed paths of the oriented-edge DAG.
CertificatePolynomial d_mu_times_q(const Orientation& o, const OrientedEdge& mu, const OrientedEdge& nu, int dim,
                                   PathLimits limits = {});

// T_sigma as (prod D) times the signed sum over node-disjoint path systems.
CertificatePolynomial lgv_t_sigma(const Orientation& o, const std::vector<std::size_t>& sigma, int dim,
                                  PathLimits limits = {});

// Every l-subset of {0..k-1} in lexicographic order.
std::vector<std::vector<std::size_t>> sigma_choices(std::size_t k, std::size_t l);

enum class BalanceMode { Certified, Probabilistic };
std::string to_string(BalanceMode m);

struct BalanceOptions {
  BalanceMode mode = BalanceMode::Probabilistic;
  std::uint64_t seed = 0;
  int trials = 5;
  StraightenOptions straighten{};
};

struct PairEvidence {
  OrientedEdge source;
  OrientedEdge sink;
  std::size_t chains = 0;
  std::size_t terms = 0;
};

struct SigmaEvidence {
  std::vector<std::size_t> sigma;
  std::size_t terms = 0;        // certified mode only
  bool vanishes = false;
  std::string normal_form;      // certified mode; empty when zero
};

struct BalanceReport {
  bool balanced = false;
  BalanceMode mode = BalanceMode::Probabilistic;
  std::uint64_t seed = 0;
  std::size_t num_sources = 0;
  std::size_t num_sinks = 0;
  bool more_sinks_than_sources = false;
  std::vector<PairEvidence> pairs;
  std::vector<SigmaEvidence> sigmas;
};

// Certified: each T_sigma straightens to zero after removing its monomial
// content. Probabilistic: T_{mu,nu} are checked multi-homogeneous with the
// telescoping multidegree, then every l x l minor of the evaluated matrix
// must vanish at `trials` random matrices.
BalanceReport is_balanced(const Orientation& o, int dim, const BalanceOptions& options = {});

}  // namespace genrig
