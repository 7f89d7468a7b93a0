#include "genrig/stress.hpp"

#include <algorithm>

#include "genrig/certificate.hpp"
#include "genrig/error.hpp"
#include "genrig/evaluate.hpp"
#include "genrig/oracle.hpp"

namespace genrig {

namespace {

Rational signed_value(const SignedTableau& t, const GenericMatrix& m) {
  Rational v = t.sign;
  for (const Bracket& b : t.tableau.rows()) v *= m.minor(b);
  return v;
}

GenericMatrix lifted(const Orientation& o, const Placement& p) {
  const int n = o.vertices().empty() ? 0 : o.vertices().back();
  return GenericMatrix::from_placement(p, n);
}

void add_scaled(SinkForm& into, const SinkForm& form, const Rational& c) {
  for (const auto& [e, x] : form) {
    Rational& slot = into[e];
    slot += c * x;
    if (slot == 0) into.erase(e);
  }
}

// Memoised propagation of stream formulas at one placement.
class Propagator {
 public:
  Propagator(const Orientation& o, const Placement& p, int dim) : o_(o), m_(lifted(o, p)), dim_(dim) {}

  // Form of w for the edge of `e` seen as entering a from b.
  const SinkForm& entering(Vertex a, Vertex b) {
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SinkForm form;
    for (const auto& [out, c] : ratios(a, b)) {
      const OrientedEdge e = *o_.find(out);
      if (e.is_sink()) {
        add_scaled(form, SinkForm{{e.edge, Rational(1)}}, c);
      } else {
        add_scaled(form, entering(e.into, a), c);
      }
    }
    return memo_.emplace(key, std::move(form)).first->second;
  }

  std::map<Edge, Rational> ratios(Vertex a, Vertex b) {
    std::map<Edge, Rational> out;
    for (const OrientedEdge& e : o_.out_edges(a)) {
      const ArrowWeight w = arrow_weight(o_, a, b, e.edge.other(a), dim_);
      const Rational den = signed_value(w.denominator, m_);
      if (den == 0) {
        throw Error(ErrorKind::SingularDenominator,
                    "in-edge brackets at vertex " + std::to_string(a) + " vanish at this placement");
      }
      out[e.edge] = signed_value(w.numerator, m_) / den;
    }
    return out;
  }

  const GenericMatrix& matrix() const { return m_; }

 private:
  const Orientation& o_;
  GenericMatrix m_;
  int dim_;
  std::map<std::pair<Vertex, Vertex>, SinkForm> memo_;
};

Rational apply(const SinkForm& form, const std::map<Edge, Rational>& values) {
  Rational total = 0;
  for (const auto& [e, c] : form) {
    auto it = values.find(e);
    if (it != values.end()) total += c * it->second;
  }
  return total;
}

}  // namespace

Rational StressAssignment::at(const Edge& e) const {
  auto it = w.find(e);
  return it == w.end() ? Rational(0) : it->second;
}

std::map<Edge, Rational> local_cramer(const Orientation& o, Vertex a, Vertex b, const Placement& p) {
  const int d = p.dim();
  std::vector<Vertex> others;
  for (const OrientedEdge& e : o.in_edges(a)) {
    const Vertex x = e.edge.other(a);
    if (x != b) others.push_back(x);
  }
  if (static_cast<int>(others.size()) != d - 1) {
    throw Error(ErrorKind::InvalidOrientation, "vertex " + std::to_string(a) + " must have in-degree " + std::to_string(d));
  }
  std::sort(others.begin(), others.end());
  auto det_with_last = [&](Vertex last) {
    RationalMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      const Point col = edge_vector(p, a, k < d - 1 ? others[static_cast<std::size_t>(k)] : last);
      for (int r = 0; r < d; ++r) m(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = col[static_cast<std::size_t>(r)];
    }
    return det(m);
  };
  const Rational den = det_with_last(b);
  if (den == 0) {
    throw Error(ErrorKind::SingularDenominator, "in-edge vectors at vertex " + std::to_string(a) + " are dependent");
  }
  std::map<Edge, Rational> out;
  for (const OrientedEdge& e : o.out_edges(a)) out[e.edge] = -det_with_last(e.edge.other(a)) / den;
  return out;
}

std::map<Edge, Rational> bracket_cramer(const Orientation& o, Vertex a, Vertex b, const Placement& p, int dim) {
  Propagator prop(o, p, dim);
  return prop.ratios(a, b);
}

SinkForm stream_formula(const Orientation& o, const OrientedEdge& stream, const Placement& p, int dim) {
  if (!stream.is_stream()) throw Error(ErrorKind::InvalidOrientation, "stream_formula needs a stream");
  require_certificate_ready(o, dim);
  Propagator prop(o, p, dim);
  return prop.entering(stream.into, stream.out_of());
}

SinkSystem build_sink_system(const Orientation& o, const Placement& p, int dim) {
  require_certificate_ready(o, dim);
  Propagator prop(o, p, dim);
  SinkSystem sys{o.sources(), o.sinks(), RationalMatrix(o.sources().size(), o.sinks().size())};
  for (std::size_t a = 0; a < sys.sources.size(); ++a) {
    const Edge mu = sys.sources[a].edge;
    SinkForm diff = prop.entering(mu.u, mu.v);
    add_scaled(diff, prop.entering(mu.v, mu.u), Rational(-1));
    const Rational scale = signed_value(d_of_mu(o, sys.sources[a], dim), prop.matrix());
    for (std::size_t b = 0; b < sys.sinks.size(); ++b) {
      auto it = diff.find(sys.sinks[b].edge);
      if (it != diff.end()) sys.values(a, b) = scale * it->second;
    }
  }
  return sys;
}

std::vector<RationalVector> solve_sink_system(const Orientation& o, const Placement& p, int dim) {
  const SinkSystem sys = build_sink_system(o, p, dim);
  if (sys.sources.empty()) {
    std::vector<RationalVector> basis;
    for (std::size_t b = 0; b < sys.sinks.size(); ++b) {
      RationalVector v(sys.sinks.size());
      v[b] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return nullspace(sys.values);
}

StressAssignment synthesize_stress(const Orientation& o, const Placement& p, int dim,
                                   const std::map<Edge, Rational>& sink_values) {
  require_certificate_ready(o, dim);
  for (const auto& entry : sink_values) {
    const auto found = o.find(entry.first);
    if (!found || !found->is_sink()) {
      throw Error(ErrorKind::InvalidOrientation, to_string(entry.first) + " is not a sink of the orientation");
    }
  }
  Propagator prop(o, p, dim);
  StressAssignment out;
  for (const OrientedEdge& e : o.edges()) {
    if (e.is_sink()) {
      auto it = sink_values.find(e.edge);
      out.w[e.edge] = it == sink_values.end() ? Rational(0) : it->second;
    } else if (e.is_stream()) {
      out.w[e.edge] = apply(prop.entering(e.into, e.out_of()), sink_values);
    } else {
      const Rational first = apply(prop.entering(e.edge.u, e.edge.v), sink_values);
      const Rational second = apply(prop.entering(e.edge.v, e.edge.u), sink_values);
      if (first != second) {
        throw Error(ErrorKind::InconsistentSource, "source " + to_string(e) + " gets " + format_rational(first) +
                                                       " from one side and " + format_rational(second) +
                                                       " from the other");
      }
      out.w[e.edge] = first;
    }
  }
  return out;
}

ResidualReport verify_stress(const Graph& g, const Placement& p, const StressAssignment& w) {
  ResidualReport report;
  for (Vertex x = 1; x <= g.num_vertices(); ++x) report.residual[x] = Point(static_cast<std::size_t>(p.dim()));
  for (const auto& [e, value] : w.w) {
    if (!g.has_edge(e)) throw Error(ErrorKind::EdgeNotInGraph, "stress on " + to_string(e) + " outside the graph");
    if (value == 0) continue;
    const Point vec = edge_vector(p, e.u, e.v);
    Point& ru = report.residual[e.u];
    Point& rv = report.residual[e.v];
    for (std::size_t k = 0; k < vec.size(); ++k) {
      ru[k] += value * vec[k];
      rv[k] -= value * vec[k];
    }
  }
  for (const auto& [x, r] : report.residual)
    for (const Rational& c : r)
      if (c != 0) report.pass = false;
  return report;
}

SynthesisResult synthesize_at_random(const Graph& g, const Orientation& o, int dim, std::uint64_t seed,
                                     const std::map<Edge, Rational>& sink_values, int attempts) {
  for (int t = 0; t < attempts; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    Placement p = random_placement(g, dim, s);
    try {
      StressAssignment w = synthesize_stress(o, p, dim, sink_values);
      return {std::move(p), s, std::move(w)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularDenominator) throw;
    }
  }
  throw Error(ErrorKind::SingularDenominator, "every sampled placement was singular");
}

}  // namespace genrig
