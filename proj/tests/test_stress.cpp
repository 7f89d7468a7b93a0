#include <gtest/gtest.h>

#include <random>

#include "genrig/certificate.hpp"
#include "genrig/error.hpp"
#include "genrig/oracle.hpp"
#include "genrig/stress.hpp"
#include "support.hpp"

using namespace genrig;
using E = OrientedEdge;

namespace {

const std::map<Edge, Rational> kUnitSink{{Edge(1, 2), Rational(1)}};

Graph prism() {
  return Graph(6, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6},
                                                         {1, 4}, {2, 5}, {3, 6}});
}

}  // namespace

TEST(Cramer, EdgeVectorsAgreeWithBrackets) {
  const Graph g = fixtures::double_banana();
  const Orientation o = fixtures::double_banana_gamma();
  const Placement p = random_placement(g, 3, 7);
  for (const OrientedEdge& e : o.edges()) {
    for (Vertex a : {e.edge.u, e.edge.v}) {
      if (!e.points_into(a)) continue;
      EXPECT_EQ(local_cramer(o, a, e.edge.other(a), p), bracket_cramer(o, a, e.edge.other(a), p, 3))
          << to_string(e) << " at " << a;
    }
  }
}

TEST(Cramer, SingularDenominator) {
  const Orientation o = fixtures::double_banana_gamma();
  Placement p(3);
  for (Vertex x = 1; x <= 8; ++x) p.set(x, {0, 0, 0});
  try {
    local_cramer(o, 4, 8, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularDenominator);
  }
}

TEST(Stress, DoubleBananaResidualsVanish) {
  const Graph g = fixtures::double_banana();
  const Orientation o = fixtures::double_banana_gamma();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SynthesisResult r = synthesize_at_random(g, o, 3, seed, kUnitSink);
    const ResidualReport rep = verify_stress(g, r.placement, r.stress);
    EXPECT_TRUE(rep.pass);
    for (const auto& [x, pt] : rep.residual)
      for (const Rational& q : pt) EXPECT_EQ(q, 0);
    EXPECT_EQ(r.stress.at(Edge(1, 2)), 1);

    // the left kernel is one-dimensional, so w is a multiple of its basis vector
    const auto basis = left_kernel_basis(g, r.placement);
    ASSERT_EQ(basis.size(), 1u);
    const auto idx = *g.edge_index(Edge(1, 2));
    ASSERT_NE(basis[0][idx], 0);
    for (std::size_t i = 0; i < g.num_edges(); ++i)
      EXPECT_EQ(r.stress.at(g.edges()[i]), basis[0][i] / basis[0][idx]);
  }
}

TEST(Stress, SinkSystemVanishesForBalancedOrientation) {
  const Graph g = fixtures::double_banana();
  const Orientation o = fixtures::double_banana_gamma();
  const Placement p = random_placement(g, 3, 3);
  const SinkSystem sys = build_sink_system(o, p, 3);
  ASSERT_EQ(sys.values.rows(), 7u);
  ASSERT_EQ(sys.values.cols(), 1u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(sys.values(i, 0), 0);
  EXPECT_EQ(solve_sink_system(o, p, 3).size(), 1u);
}

TEST(Stress, Linearity) {
  const Graph g = fixtures::double_banana();
  const Orientation o = fixtures::double_banana_gamma();
  const Placement p = random_placement(g, 3, 11);
  const StressAssignment one = synthesize_stress(o, p, 3, kUnitSink);
  const StressAssignment three = synthesize_stress(o, p, 3, {{Edge(1, 2), Rational(3)}});
  for (const Edge& e : g.edges()) EXPECT_EQ(three.at(e), 3 * one.at(e));
  const StressAssignment zero = synthesize_stress(o, p, 3, {{Edge(1, 2), Rational(0)}});
  for (const Edge& e : g.edges()) EXPECT_EQ(zero.at(e), 0);
}

TEST(Stress, StreamFormulaMatchesSynthesis) {
  const Graph g = fixtures::double_banana();
  const Orientation o = fixtures::double_banana_gamma();
  const Placement p = random_placement(g, 3, 12);
  const StressAssignment w = synthesize_stress(o, p, 3, kUnitSink);
  for (const OrientedEdge& s : o.streams()) {
    const SinkForm f = stream_formula(o, s, p, 3);
    EXPECT_EQ(f.at(Edge(1, 2)), w.at(s.edge)) << to_string(s);
  }
}

TEST(Stress, RandomWeightsFail) {
  const Graph g = fixtures::double_banana();
  const Placement p = random_placement(g, 3, 13);
  std::mt19937_64 rng(5);
  StressAssignment w;
  for (const Edge& e : g.edges()) w.w[e] = Rational(static_cast<long>(rng() % 7) + 1);
  EXPECT_FALSE(verify_stress(g, p, w).pass);
  StressAssignment stray;
  stray.w[Edge(1, 6)] = 1;
  EXPECT_THROW(verify_stress(g, p, stray), Error);
}

TEST(Stress, UnbalancedOrientationIsInconsistent) {
  const Graph g = prism();
  const auto all = enumerate_orientations(g, 2);
  ASSERT_FALSE(all.empty());
  const Orientation& o = all.front();
  const Placement p = random_placement(g, 2, 1);
  EXPECT_TRUE(solve_sink_system(o, p, 2).empty());
  std::map<Edge, Rational> ones;
  for (const OrientedEdge& s : o.sinks()) ones[s.edge] = 1;
  try {
    synthesize_stress(o, p, 2, ones);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentSource);
  }
  EXPECT_THROW(synthesize_stress(o, p, 2, {{o.streams().front().edge, Rational(1)}}), Error);
}

TEST(Stress, FourCycleOnTheLine) {
  const Graph g(4, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const Orientation o({E::source(1, 4), E::stream(3, 4, 3), E::stream(2, 3, 2), E::sink(1, 2)});
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SynthesisResult r = synthesize_at_random(g, o, 1, seed, kUnitSink);
    EXPECT_TRUE(verify_stress(g, r.placement, r.stress).pass);
    for (const Edge& e : g.edges()) EXPECT_NE(r.stress.at(e), 0);
  }
}
