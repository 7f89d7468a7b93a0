#include <gtest/gtest.h>

#include "genrig/error.hpp"
#include "genrig/graph.hpp"
#include "genrig/oracle.hpp"
#include "support.hpp"

using namespace genrig;

namespace {

ErrorKind kind_of(int v, std::vector<std::pair<Vertex, Vertex>> edges) {
  try {
    Graph g(v, edges);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Graph, Validation) {
  EXPECT_EQ(kind_of(3, {{1, 1}}), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of(3, {{1, 2}, {2, 1}}), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of(3, {{1, 4}}), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of(3, {{0, 2}}), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of(0, {}), ErrorKind::VertexOutOfRange);
}

TEST(Graph, Tightness) {
  EXPECT_EQ(tightness(fixtures::double_banana(), 3), 0);
  EXPECT_EQ(tightness(Graph(4, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), 2), 1);
  EXPECT_EQ(tightness(Graph(6, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}}), 1), 0);
}

TEST(Oracle, RigidityMatrixRows) {
  Graph g(3, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}});
  Placement p(2, {{1, {0, 0}}, {2, {1, 2}}, {3, {5, 3}}});
  const RigidityMatrix a = build_rigidity_matrix(g, p);
  ASSERT_EQ(a.entries.rows(), 2u);
  ASSERT_EQ(a.entries.cols(), 6u);
  // row (1,2): e_12 in the block of 1, e_21 in the block of 2
  EXPECT_EQ(a.entries(0, 0), 1);
  EXPECT_EQ(a.entries(0, 1), 2);
  EXPECT_EQ(a.entries(0, 2), -1);
  EXPECT_EQ(a.entries(0, 3), -2);
  EXPECT_EQ(a.entries(0, 4), 0);
  EXPECT_EQ(a.entries(1, 2), 4);
  EXPECT_EQ(a.entries(1, 5), -1);
}

TEST(Oracle, UnplacedVertex) {
  Graph g(3, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}});
  Placement p(2, {{1, {0, 0}}, {2, {1, 2}}});
  try {
    build_rigidity_matrix(g, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnplacedVertex);
  }
}

TEST(Oracle, DoubleBanana) {
  const RankReport r = oracle_decide(fixtures::double_banana(), 3, 0, 3);
  EXPECT_EQ(r.rank, 17u);
  EXPECT_EQ(r.right_kernel_dim, 7);
  EXPECT_EQ(r.left_kernel_dim, 1);
  EXPECT_EQ(r.verdict, Verdict::Flexible);
  const RankReport m = oracle_decide(fixtures::double_banana(), 3, 0, 3, RankBackend::ModPrime);
  EXPECT_EQ(m.rank, 17u);
}

TEST(Oracle, PlanarExamples) {
  Graph k4(4, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(oracle_decide(k4, 2).verdict, Verdict::Rigid);
  EXPECT_EQ(oracle_decide(k4, 2).rank, 5u);
  Graph c4(4, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_EQ(oracle_decide(c4, 2).verdict, Verdict::Flexible);
  EXPECT_EQ(oracle_decide(c4, 1).verdict, Verdict::Rigid);
  EXPECT_EQ(oracle_decide(Graph(1, std::vector<Edge>{}), 2).verdict, Verdict::Rigid);
}

TEST(Oracle, LeftKernelVectorsAreStresses) {
  const Graph g = fixtures::double_banana();
  const Placement p = random_placement(g, 3, 5);
  const auto basis = left_kernel_basis(g, p);
  ASSERT_EQ(basis.size(), 1u);
  const RigidityMatrix a = build_rigidity_matrix(g, p);
  for (const Rational& v : multiply(basis[0], a.entries)) EXPECT_EQ(v, 0);
}

TEST(Oracle, Deterministic) {
  const Graph g = fixtures::double_banana();
  EXPECT_EQ(random_placement(g, 3, 42), random_placement(g, 3, 42));
  EXPECT_NE(random_placement(g, 3, 42), random_placement(g, 3, 43));
}

TEST(Oracle, LamanAgreementSmall) {
  for (int v = 2; v <= 5; ++v)
    for (const Graph& g : fixtures::graphs_up_to_isomorphism(v, 2 * v - 3))
      EXPECT_EQ(oracle_decide(g, 2).verdict == Verdict::Rigid, fixtures::laman_rigid(g));
}
