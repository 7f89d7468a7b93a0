#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

#include "genrig/certificate.hpp"
#include "genrig/error.hpp"
#include "genrig/evaluate.hpp"
#include "genrig/poly_text.hpp"
#include "genrig/straighten.hpp"
#include "support.hpp"

using namespace genrig;
using E = OrientedEdge;

namespace {

const OrientedEdge kMu = E::source(4, 8);
const OrientedEdge kNu = E::sink(1, 2);

std::string path_of(const OrientationTree& t, int n) {
  std::string s;
  for (int x : t.up_closure(n)) {
    const auto& label = t.nodes[static_cast<std::size_t>(x)].label;
    if (label) s = "/" + to_string(*label) + s;
  }
  return s;
}

struct Shelves {
  std::vector<int> left, right;
};

// Shelf contents of the decorated (4,8) source tree, read column by column.
const std::map<std::string, Shelves>& reference_shelves() {
  static const std::map<std::string, Shelves> table = {
      {"/(4,8)_4", {{}, {6, 7, 8, 4}}},
      {"/(4,8)_4/(1,4)_1", {{6, 7, 4, 1}, {3, 5, 4, 1}}},
      {"/(4,8)_4/(1,4)_1/(1,2)_0", {{3, 5, 1, 2}, {}}},
      {"/(4,8)_4/(2,4)_2", {{6, 7, 4, 2}, {3, 5, 4, 2}}},
      {"/(4,8)_4/(2,4)_2/(1,2)_0", {{3, 5, 2, 1}, {}}},
      {"/(4,8)_4/(3,4)_3", {{6, 7, 4, 3}, {1, 5, 4, 3}}},
      {"/(4,8)_4/(3,4)_3/(2,3)_2", {{1, 5, 3, 2}, {4, 5, 3, 2}}},
      {"/(4,8)_4/(3,4)_3/(2,3)_2/(1,2)_0", {{4, 5, 2, 1}, {}}},
      {"/(4,8)_8", {{}, {6, 7, 4, 8}}},
      {"/(4,8)_8/(5,8)_5", {{6, 7, 8, 5}, {6, 7, 8, 5}}},
      {"/(4,8)_8/(5,8)_5/(1,5)_1", {{6, 7, 5, 1}, {3, 4, 5, 1}}},
      {"/(4,8)_8/(5,8)_5/(1,5)_1/(1,2)_0", {{3, 4, 1, 2}, {}}},
      {"/(4,8)_8/(5,8)_5/(2,5)_2", {{6, 7, 5, 2}, {3, 4, 5, 2}}},
      {"/(4,8)_8/(5,8)_5/(2,5)_2/(1,2)_0", {{3, 4, 2, 1}, {}}},
      {"/(4,8)_8/(5,8)_5/(3,5)_3", {{6, 7, 5, 3}, {1, 4, 5, 3}}},
      {"/(4,8)_8/(5,8)_5/(3,5)_3/(2,3)_2", {{1, 4, 3, 2}, {4, 5, 3, 2}}},
      {"/(4,8)_8/(5,8)_5/(3,5)_3/(2,3)_2/(1,2)_0", {{4, 5, 2, 1}, {}}},
  };
  return table;
}

void expect_shelf(const std::optional<SignedTableau>& shelf, const std::vector<int>& tuple, const std::string& where) {
  if (tuple.empty()) {
    EXPECT_FALSE(shelf.has_value()) << where;
    return;
  }
  ASSERT_TRUE(shelf.has_value()) << where;
  EXPECT_EQ(*shelf, signed_tableau_from_tuples({tuple})) << where;
}

BracketPolynomial poly(const std::vector<std::vector<int>>& tuples) {
  return BracketPolynomial::from(signed_tableau_from_tuples(tuples));
}

}  // namespace

TEST(SourceTree, ShapeMatchesReference) {
  const Orientation o = fixtures::double_banana_gamma();
  const SourceTree t = build_source_tree(o, kMu);
  EXPECT_EQ(t.size(), 18u);  // root plus 17 labelled nodes
  EXPECT_FALSE(t.nodes[0].label.has_value());
  ASSERT_EQ(t.nodes[0].children.size(), 2u);
  EXPECT_EQ(*t.nodes[static_cast<std::size_t>(t.positive_child)].label, E::stream(4, 8, 4));
  EXPECT_EQ(*t.nodes[static_cast<std::size_t>(t.negative_child)].label, E::stream(4, 8, 8));
  std::set<std::string> paths;
  for (std::size_t n = 1; n < t.size(); ++n) paths.insert(path_of(t, static_cast<int>(n)));
  std::set<std::string> expected;
  for (const auto& [p, s] : reference_shelves()) expected.insert(p);
  EXPECT_EQ(paths, expected);

  const auto chains = t.maximal_chains();
  ASSERT_EQ(chains.size(), 6u);
  int under_positive = 0;
  for (const auto& c : chains) {
    EXPECT_EQ(*t.nodes[static_cast<std::size_t>(c.back())].label, kNu);
    if (c[1] == t.positive_child) ++under_positive;
  }
  EXPECT_EQ(under_positive, 3);
}

TEST(SourceTree, StreamTreeMatchesSubtree) {
  const Orientation o = fixtures::double_banana_gamma();
  const StreamTree t = build_stream_tree(o, E::stream(4, 8, 4));
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(t.maximal_chains().size(), 3u);
}

TEST(Decoration, ShelvesMatchReference) {
  const Orientation o = fixtures::double_banana_gamma();
  const DecoratedTree d = decorate(build_source_tree(o, kMu), o, 3);
  EXPECT_FALSE(d.left[0].has_value());
  EXPECT_FALSE(d.right[0].has_value());
  for (std::size_t n = 1; n < d.tree.size(); ++n) {
    const std::string p = path_of(d.tree, static_cast<int>(n));
    const Shelves& s = reference_shelves().at(p);
    expect_shelf(d.left[n], s.left, p + " left");
    expect_shelf(d.right[n], s.right, p + " right");
  }
}

TEST(Decoration, ArrowWeight) {
  const Orientation o = fixtures::double_banana_gamma();
  const ArrowWeight w = arrow_weight(o, 4, 8, 1, 3);
  EXPECT_EQ(w.numerator, signed_tableau_from_tuples({{6, 7, 4, 1}}));
  EXPECT_EQ(w.denominator, signed_tableau_from_tuples({{6, 7, 8, 4}}));
  EXPECT_EQ(w.numerator.sign, -1);
}

TEST(Clearing, Postcondition) {
  const Orientation o = fixtures::double_banana_gamma();
  const DecoratedTree d = decorate(build_source_tree(o, kMu), o, 3);
  const auto chains = d.tree.maximal_chains();
  const auto products = left_shelf_chain_products(clear_right_shelves(d));
  ASSERT_EQ(products.size(), chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    std::set<int> on(chains[c].begin(), chains[c].end());
    SignedTableau expected;
    for (std::size_t n = 0; n < d.tree.size(); ++n) {
      if (on.count(static_cast<int>(n)) && d.left[n]) expected = expected * *d.left[n];
      if (!on.count(static_cast<int>(n)) && d.right[n]) expected = expected * *d.right[n];
    }
    EXPECT_EQ(products[c], expected) << "chain " << c;
  }
  for (const auto& r : clear_right_shelves(d).right) EXPECT_FALSE(r.has_value());
}

TEST(Clearing, OrderIndependent) {
  const Orientation o = fixtures::double_banana_gamma();
  const DecoratedTree d = decorate(build_source_tree(o, kMu), o, 3);
  std::vector<std::size_t> order(d.tree.maximal_chains().size());
  std::iota(order.begin(), order.end(), 0);
  const auto natural = left_shelf_chain_products(clear_right_shelves(d, order));
  std::reverse(order.begin(), order.end());
  const auto reversed = left_shelf_chain_products(clear_right_shelves(d, order));
  EXPECT_EQ(natural, reversed);
  EXPECT_THROW(clear_right_shelves(d, {0, 0, 1, 2, 3, 4}), Error);
}

TEST(Tmunu, MatchesKnownExpansion) {
  const Orientation o = fixtures::double_banana_gamma();
  const CertificatePolynomial t = t_mu_nu(o, kMu, kNu, 3);
  EXPECT_EQ(t.chains, 6u);

  const BracketPolynomial first =
      poly({{4, 5, 3, 2}, {1, 4, 5, 3}, {3, 4, 5, 1}, {3, 4, 5, 2}, {6, 7, 8, 5}, {6, 7, 4, 8}}) *
      (poly({{3, 5, 4, 2}, {4, 5, 3, 2}, {1, 5, 4, 3}, {6, 7, 4, 1}, {3, 5, 1, 2}}) +
       poly({{3, 5, 4, 1}, {4, 5, 3, 2}, {1, 5, 4, 3}, {6, 7, 4, 2}, {3, 5, 2, 1}}) +
       poly({{3, 5, 4, 1}, {3, 5, 4, 2}, {6, 7, 4, 3}, {1, 5, 3, 2}, {4, 5, 2, 1}}));
  const BracketPolynomial second =
      poly({{3, 5, 4, 1}, {3, 5, 4, 2}, {4, 5, 3, 2}, {1, 5, 4, 3}, {6, 7, 8, 4}, {6, 7, 8, 5}}) *
      (poly({{4, 5, 3, 2}, {1, 4, 5, 3}, {3, 4, 5, 2}, {6, 7, 5, 1}, {3, 4, 1, 2}}) +
       poly({{4, 5, 3, 2}, {1, 4, 5, 3}, {3, 4, 5, 1}, {6, 7, 5, 2}, {3, 4, 2, 1}}) +
       poly({{3, 4, 5, 1}, {3, 4, 5, 2}, {6, 7, 5, 3}, {1, 4, 3, 2}, {4, 5, 2, 1}}));
  const BracketPolynomial expected = first - second;
  EXPECT_TRUE(t.poly == expected || t.poly == -expected);

  const BracketPolynomial reduced = t.poly.divided_by(t.poly.content_factor());
  const BracketPolynomial six = parse_polynomial(
      "[1,2,3,5][1,4,6,7][2,3,4,5] - [1,2,3,5][1,3,4,5][2,4,6,7] + [1,2,3,5][1,2,4,5][3,4,6,7]"
      " - [1,2,3,4][1,5,6,7][2,3,4,5] + [1,2,3,4][1,3,4,5][2,5,6,7] - [1,2,3,4][1,2,4,5][3,5,6,7]");
  EXPECT_TRUE(reduced == six || reduced == -six);
  EXPECT_TRUE(straightens_to_zero(reduced));
  EXPECT_TRUE(probably_zero(t.poly, 3, 0));
}

TEST(Tmunu, MultiHomogeneousWithTelescopingDegree) {
  const Orientation o = fixtures::double_banana_gamma();
  for (const OrientedEdge& mu : o.sources()) {
    const CertificatePolynomial t = t_mu_nu(o, mu, kNu, 3);
    if (t.poly.is_zero()) continue;  // chains cancelled on collection
    const Homogeneity h = is_multi_homogeneous(t.poly);
    ASSERT_TRUE(h.homogeneous) << to_string(mu);
    MultiDegree expected = multidegree(d_of_mu(o, mu, 3).tableau);
    ++expected[kNu.edge.u];
    ++expected[kNu.edge.v];
    --expected[mu.edge.u];
    --expected[mu.edge.v];
    for (auto it = expected.begin(); it != expected.end();) it = it->second == 0 ? expected.erase(it) : std::next(it);
    EXPECT_EQ(h.degree, expected) << to_string(mu);
  }
}

TEST(Tsigma, SingleSinkReducesToTmunu) {
  const Orientation o = fixtures::double_banana_gamma();
  const auto sources = o.sources();
  ASSERT_EQ(sources.size(), 7u);
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const CertificatePolynomial a = t_sigma(o, {s}, 3);
    EXPECT_EQ(a.poly, t_mu_nu(o, sources[s], kNu, 3).poly);
    EXPECT_EQ(lgv_t_sigma(o, {s}, 3).poly, a.poly);
    EXPECT_EQ(d_mu_times_q(o, sources[s], kNu, 3).poly, t_mu_nu(o, sources[s], kNu, 3).poly);
  }
}

TEST(Tsigma, DOfMuIsRightShelfProduct) {
  const Orientation o = fixtures::double_banana_gamma();
  for (const OrientedEdge& mu : o.sources()) {
    const DecoratedTree d = decorate(build_source_tree(o, mu), o, 3);
    SignedTableau all;
    for (const auto& r : d.right)
      if (r) all = all * *r;
    EXPECT_EQ(d_of_mu(o, mu, 3), all) << to_string(mu);
  }
}

TEST(Tsigma, Errors) {
  // K4 at d=1 with two disjoint sources and four sinks
  const Orientation o({E::source(1, 2), E::source(3, 4), E::sink(1, 3), E::sink(1, 4), E::sink(2, 3),
                       E::sink(2, 4)});
  try {
    t_sigma(o, {0, 1, 0, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManySinks);
  }
  const BalanceReport r = is_balanced(o, 1);
  EXPECT_TRUE(r.more_sinks_than_sources);
  EXPECT_TRUE(r.balanced);

  const Orientation g = fixtures::double_banana_gamma();
  EXPECT_THROW(t_sigma(g, {0, 1}, 3), Error);
  EXPECT_THROW(t_sigma(g, {9}, 3), Error);
  EXPECT_THROW(t_mu_nu(g, kMu, kNu, 2), Error);
}

TEST(Tsigma, Choices) {
  EXPECT_EQ(sigma_choices(7, 1).size(), 7u);
  EXPECT_EQ(sigma_choices(5, 2).size(), 10u);
  EXPECT_EQ(sigma_choices(4, 4).size(), 1u);
  EXPECT_EQ(sigma_choices(5, 2).front(), (std::vector<std::size_t>{0, 1}));
}

TEST(Balance, DoubleBananaBothModes) {
  const Orientation o = fixtures::double_banana_gamma();
  BalanceOptions opt;
  const BalanceReport p = is_balanced(o, 3, opt);
  EXPECT_TRUE(p.balanced);
  EXPECT_EQ(p.num_sources, 7u);
  EXPECT_EQ(p.sigmas.size(), 7u);
  opt.mode = BalanceMode::Certified;
  const BalanceReport c = is_balanced(o, 3, opt);
  EXPECT_TRUE(c.balanced);
  for (const auto& s : c.sigmas) {
    EXPECT_TRUE(s.vanishes);
    EXPECT_TRUE(s.normal_form.empty());
  }
}

TEST(Balance, FourCycleAtDimOne) {
  const Orientation o({E::source(1, 4), E::stream(3, 4, 3), E::stream(2, 3, 2), E::sink(1, 2)});
  BalanceOptions opt;
  opt.mode = BalanceMode::Certified;
  EXPECT_TRUE(is_balanced(o, 1, opt).balanced);
  // the single T is a tableau minus itself before collection
  const CertificatePolynomial t = t_mu_nu(o, E::source(1, 4), E::sink(1, 2), 1);
  EXPECT_EQ(t.chains, 2u);
  EXPECT_TRUE(t.poly.is_zero());
}

TEST(Balance, RigidLamanGraphHasNoBalancedOrientation) {
  // the triangular prism is minimally rigid in the plane and 3-regular
  const Graph g(6, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                                         {1, 4}, {2, 5}, {3, 6}});
  ASSERT_TRUE(fixtures::laman_rigid(g));
  const auto all = enumerate_orientations(g, 2);
  EXPECT_FALSE(all.empty());
  for (const Orientation& o : all) {
    BalanceOptions opt;
    opt.mode = BalanceMode::Certified;
    EXPECT_FALSE(is_balanced(o, 2, opt).balanced);
    opt.mode = BalanceMode::Probabilistic;
    EXPECT_FALSE(is_balanced(o, 2, opt).balanced);
  }
}
