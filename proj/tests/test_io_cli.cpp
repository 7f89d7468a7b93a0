#include <gtest/gtest.h>

#include <sstream>

#include "genrig/cli.hpp"
#include "genrig/error.hpp"
#include "genrig/io.hpp"
#include "support.hpp"

using namespace genrig;

namespace {

const std::string kData = GENRIG_TEST_DATA;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorKind parse_kind(const std::string& text) {
  try {
    graph_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidOrientation;
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  const GraphFile f = graph_from_json(read_json(kData + "/doublebanana.json"));
  EXPECT_EQ(f.dim, 3);
  EXPECT_EQ(f.graph.num_edges(), 18u);
  const GraphFile back = graph_from_json(graph_to_json(f.graph, f.dim));
  EXPECT_EQ(back.graph.edges(), f.graph.edges());
  EXPECT_EQ(parse_kind(R"({"v": 3})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"v": 3, "edges": [[1, 2, 3]]})"), ErrorKind::ParseError);
  EXPECT_EQ(parse_kind(R"({"v": 3, "edges": [[1, 1]]})"), ErrorKind::LoopEdge);
  EXPECT_THROW(read_json(kData + "/missing.json"), Error);
}

TEST(Io, OrientationRoundTrip) {
  const Orientation o = orientation_from_json(read_json(kData + "/doublebanana_gamma.json"));
  EXPECT_EQ(o, fixtures::double_banana_gamma());
  EXPECT_EQ(orientation_from_json(orientation_to_json(o)), o);
  EXPECT_THROW(orientation_from_json(Json::parse(R"({"edges": [{"e": [1, 2], "mode": "stream"}]})")), Error);
  EXPECT_THROW(orientation_from_json(Json::parse(R"({"edges": [{"e": [1, 2], "mode": "up"}]})")), Error);
}

TEST(Io, PlacementRoundTrip) {
  Placement p(2, {{1, {Rational(1, 2), 3}}, {2, {-4, Rational(7, 3)}}});
  EXPECT_EQ(placement_from_json(placement_to_json(p)), p);
  const Placement q = placement_from_json(Json::parse(R"({"coords": {"1": [1, "2/4"]}})"));
  EXPECT_EQ(q.at(1)[1], Rational(1, 2));
  EXPECT_THROW(placement_from_json(Json::parse(R"({"coords": {"x": [1]}})")), Error);
  EXPECT_THROW(placement_from_json(Json::parse(R"({"coords": {"1": [1], "2": [1, 2]}})")), Error);
}

TEST(Io, SinkValues) {
  const auto v = sink_values_from_json(Json::parse(R"([{"e": [2, 1], "w": "3/2"}])"));
  EXPECT_EQ(v.at(Edge(1, 2)), Rational(3, 2));
}

TEST(Cli, CheckDoubleBanana) {
  const CliResult r = run({"check", kData + "/doublebanana.json", "--dim", "3", "--mode", "kernel", "--verify", "--json"});
  EXPECT_EQ(r.code, kExitFlexible);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "flexible");
  EXPECT_EQ(j["method"], "theorem-kernel");
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["evidence"]["balanced"], true);
}

TEST(Cli, CheckTree) {
  EXPECT_EQ(run({"check", kData + "/tree.json", "--dim", "1"}).code, kExitRigid);
  EXPECT_EQ(run({"check", kData + "/tree.json"}).code, kExitRigid);  // d from the file
}

TEST(Cli, CheckSearchBudget) {
  const CliResult r = run({"check", kData + "/doublebanana.json", "--mode", "search", "--budget", "3"});
  EXPECT_EQ(r.code, kExitLimit);
}

TEST(Cli, Straighten) {
  CliResult r = run({"straighten", kData + "/plucker.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = run({"straighten", kData + "/sixterm.txt"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"straighten", kData + "/plucker.txt", "--max-terms", "1"});
  EXPECT_EQ(r.code, kExitLimit);
}

TEST(Cli, Oracle) {
  const CliResult r = run({"oracle", kData + "/doublebanana.json", "--json"});
  EXPECT_EQ(r.code, kExitFlexible);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["rank"], 17);
  EXPECT_EQ(j["right_kernel_dim"], 7);
}

TEST(Cli, BalancedAndStress) {
  const std::string g = kData + "/doublebanana.json", o = kData + "/doublebanana_gamma.json";
  CliResult r = run({"balanced", g, o});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["balanced"], true);
  r = run({"stress", g, o, "--sinks", R"([{"e":[1,2],"w":"1"}])"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["residual"]["pass"], true);
  r = run({"stress", g, o});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, CertificateAndReduce) {
  CliResult r = run({"certificate", kData + "/doublebanana.json"});
  EXPECT_EQ(r.code, kExitFlexible);
  EXPECT_NO_THROW(orientation_from_json(Json::parse(r.out)));
  r = run({"reduce", kData + "/doublebanana.json"});
  EXPECT_NE(r.code, 0);  // already tight
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"check"}).code, kExitUsage);
  EXPECT_EQ(run({"check", kData + "/missing.json"}).code, kExitUsage);
  EXPECT_EQ(run({"check", kData + "/doublebanana.json", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}
