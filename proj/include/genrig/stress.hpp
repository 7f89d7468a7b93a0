#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "genrig/graph.hpp"
#include "genrig/linalg.hpp"
#include "genrig/orientation.hpp"

namespace genrig {

// Linear form in the sink variables: sink edge -> coefficient.
using SinkForm = std::map<Edge, Rational>;

struct StressAssignment {
  std::map<Edge, Rational> w;  // edges of H; missing edges carry 0
  Rational at(const Edge& e) const;
};

// One Cramer step at vertex a for the in-edge (a,b): coefficients c_k with
// w_ab = sum_k c_k w_{a c_k} over the out-edges (a,c_k) of a. Computed from
// d x d determinants of edge vectors at p. SingularDenominator when the
// in-edge vectors at a are dependent.
std::map<Edge, Rational> local_cramer(const Orientation& o, Vertex a, Vertex b, const Placement& p);

// Same coefficients from the shelf brackets [J a c] / [J b a] evaluated at
// the lifted matrix of p.
std::map<Edge, Rational> bracket_cramer(const Orientation& o, Vertex a, Vertex b, const Placement& p, int dim);

// w of a stream (or of a source treated as the stream into `into`) as a
// linear form in the sink variables.
SinkForm stream_formula(const Orientation& o, const OrientedEdge& stream, const Placement& p, int dim);

// Row per source (lexicographic), column per sink: T_{mu,nu} evaluated at p,
// obtained as D(mu)|_M times the difference of the two stream formulas.
struct SinkSystem {
  std::vector<OrientedEdge> sources;
  std::vector<OrientedEdge> sinks;
  RationalMatrix values;
};

SinkSystem build_sink_system(const Orientation& o, const Placement& p, int dim);

// Basis of sink-value vectors (ordered like SinkSystem::sinks) satisfying
// every source constraint.
std::vector<RationalVector> solve_sink_system(const Orientation& o, const Placement& p, int dim);

// Propagates sink values to every edge of H. InconsistentSource when the two
// formulas of some source disagree.
StressAssignment synthesize_stress(const Orientation& o, const Placement& p, int dim,
                                   const std::map<Edge, Rational>& sink_values);

struct ResidualReport {
  std::map<Vertex, Point> residual;  // sum_j w_ij e_ij per vertex
  bool pass = true;
};

ResidualReport verify_stress(const Graph& g, const Placement& p, const StressAssignment& w);

struct SynthesisResult {
  Placement placement;
  std::uint64_t seed = 0;  // seed that produced the placement
  StressAssignment stress;
};

// Random placement of g, resampled with the next seed on SingularDenominator
// (at most `attempts` placements).
SynthesisResult synthesize_at_random(const Graph& g, const Orientation& o, int dim, std::uint64_t seed,
                                     const std::map<Edge, Rational>& sink_values, int attempts = 10);

}  // namespace genrig
