#include "genrig/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "genrig/error.hpp"
#include "genrig/io.hpp"
#include "genrig/poly_text.hpp"
#include "genrig/straighten.hpp"

namespace genrig {

namespace {

struct Common {
  std::optional<int> dim;
  std::uint64_t seed = 0;
  int trials = 3;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--dim", c.dim, "Dimension d (defaults to the graph file's \"d\")");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--trials", c.trials, "Random placements / evaluations")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "JSON output");
}

int resolve_dim(const Common& c, const GraphFile& f) {
  if (c.dim) return *c.dim;
  if (f.dim) return *f.dim;
  throw Error(ErrorKind::ParseError, "no dimension: pass --dim or put \"d\" in the graph file");
}

std::string describe(const Orientation& o) {
  std::string s;
  for (const OrientedEdge& e : o.edges()) s += (s.empty() ? "" : " ") + to_string(e);
  return s;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError: return kExitUsage;
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::ExpressionBlowup: return kExitLimit;
    default: return kExitFailure;
  }
}

int check_command(const std::string& path, const Common& c, const std::string& mode, bool certified,
                  std::optional<std::uint64_t> budget, bool verify, std::ostream& out) {
  const GraphFile f = graph_from_json(read_json(path));
  const int dim = resolve_dim(c, f);
  DecideOptions options;
  options.mode = mode == "search" ? DecisionMode::Search : DecisionMode::Kernel;
  options.seed = c.seed;
  options.trials = c.trials;
  options.verify = verify;
  options.balance = certified ? BalanceMode::Certified : BalanceMode::Probabilistic;
  if (budget) options.limits = {*budget, *budget};
  const Decision d = decide(f.graph, dim, options);

  if (c.json) {
    out << to_json(d).dump(2) << "\n";
  } else {
    out << "verdict: " << to_string(d.outcome) << "\n";
    out << "method: " << to_string(d.method) << "\n";
    if (d.reduced) out << "reduced to " << d.reduced->num_edges() << " edges\n";
    if (d.certificate) out << "certificate: " << describe(*d.certificate) << "\n";
    if (d.evidence) {
      out << "balanced: " << (d.evidence->balanced ? "true" : "false") << " (" << to_string(d.evidence->mode) << ", "
          << d.evidence->sigmas.size() << " sigma)\n";
    }
    if (d.budget_exhausted) out << "search budget exhausted after " << d.orientations_examined << " orientations\n";
    if (d.oracle) {
      out << "oracle: rank " << d.oracle->rank << ", right kernel " << d.oracle->right_kernel_dim << ", "
          << to_string(d.oracle->verdict) << "\n";
    }
    if (d.agreement) out << "agreement: " << (*d.agreement ? "true" : "false") << "\n";
  }
  if (d.budget_exhausted) return kExitLimit;
  return d.outcome == Outcome::Flexible ? kExitFlexible : kExitRigid;
}

int oracle_command(const std::string& path, const Common& c, std::ostream& out) {
  const GraphFile f = graph_from_json(read_json(path));
  const RankReport r = oracle_decide(f.graph, resolve_dim(c, f), c.seed, c.trials);
  if (c.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "rank " << r.rank << "\nright kernel " << r.right_kernel_dim << "\nleft kernel " << r.left_kernel_dim
        << "\nverdict " << to_string(r.verdict) << "\n";
  }
  return r.verdict == Verdict::Flexible ? kExitFlexible : kExitRigid;
}

int straighten_command(const std::string& path, std::size_t max_terms, bool json, std::ostream& out) {
  const BracketPolynomial p = parse_polynomial(read_text(path));
  const BracketPolynomial normal = straighten(p, {max_terms});
  if (json) {
    out << Json{{"input", format_polynomial(p)},
                {"normal_form", format_polynomial(normal)},
                {"terms", normal.size()},
                {"zero", normal.is_zero()}}
               .dump(2)
        << "\n";
  } else {
    out << format_polynomial(normal) << "\n";
  }
  return kExitRigid;
}

int balanced_command(const std::string& graph_path, const std::string& orientation_path, const Common& c,
                     bool certified, std::ostream& out, std::ostream& err) {
  const GraphFile f = graph_from_json(read_json(graph_path));
  const int dim = resolve_dim(c, f);
  const Orientation o = orientation_from_json(read_json(orientation_path));
  const ValidityReport v = check_validity(o, f.graph, dim);
  if (!v.valid) {
    for (const std::string& s : v.violations) err << "invalid: " << s << "\n";
    return kExitFailure;
  }
  BalanceOptions options;
  options.mode = certified ? BalanceMode::Certified : BalanceMode::Probabilistic;
  options.seed = c.seed;
  options.trials = c.trials;
  out << to_json(is_balanced(o, dim, options)).dump(2) << "\n";
  return kExitRigid;
}

int stress_command(const std::string& graph_path, const std::string& orientation_path, const Common& c,
                   const std::string& placement_path, const std::string& sinks, std::ostream& out) {
  const GraphFile f = graph_from_json(read_json(graph_path));
  const int dim = resolve_dim(c, f);
  const Orientation o = orientation_from_json(read_json(orientation_path));
  std::optional<std::map<Edge, Rational>> given;
  if (!sinks.empty()) {
    const bool inline_json = sinks.front() == '[';
    given = sink_values_from_json(inline_json ? Json::parse(sinks) : read_json(sinks));
  }

  auto run = [&](const Placement& p) {
    std::map<Edge, Rational> values;
    if (given) {
      values = *given;
    } else {
      const auto basis = solve_sink_system(o, p, dim);
      if (basis.empty()) throw Error(ErrorKind::InconsistentSource, "the source constraints only admit zero sink values");
      const auto sink_edges = o.sinks();
      for (std::size_t b = 0; b < sink_edges.size(); ++b) values[sink_edges[b].edge] = basis.front()[b];
    }
    StressAssignment w = synthesize_stress(o, p, dim, values);
    return std::make_pair(values, w);
  };

  Placement p;
  std::uint64_t seed = c.seed;
  std::pair<std::map<Edge, Rational>, StressAssignment> result;
  if (!placement_path.empty()) {
    p = placement_from_json(read_json(placement_path));
    p.require_complete(f.graph);
    result = run(p);
  } else {
    for (int attempt = 0;; ++attempt) {
      seed = c.seed + static_cast<std::uint64_t>(attempt);
      p = random_placement(f.graph, dim, seed);
      try {
        result = run(p);
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularDenominator || attempt == 9) throw;
      }
    }
  }
  const ResidualReport residual = verify_stress(f.graph, p, result.second);
  Json sink_json = Json::array();
  for (const auto& [e, value] : result.first) {
    sink_json.push_back(Json{{"e", Json::array({e.u, e.v})}, {"w", format_rational(value)}});
  }
  Json j{{"sink_values", sink_json}, {"w", to_json(result.second)}, {"residual", to_json(residual)}};
  if (placement_path.empty()) j["seed"] = seed;
  if (c.json) j["placement"] = placement_to_json(p);
  out << j.dump(2) << "\n";
  return residual.pass ? kExitRigid : kExitFailure;
}

int certificate_command(const std::string& path, const Common& c, std::ostream& out) {
  const GraphFile f = graph_from_json(read_json(path));
  const int dim = resolve_dim(c, f);
  if (tightness(f.graph, dim) != 0) {
    throw Error(ErrorKind::PreconditionViolated, "certificate needs a tight graph; run reduce first");
  }
  const auto gamma = certificate_from_kernel(f.graph, dim, c.seed);
  if (!c.json) {
    if (gamma) out << orientation_to_json(*gamma).dump(2) << "\n";
    else out << "none: the left kernel is zero\n";
    return gamma ? kExitFlexible : kExitRigid;
  }
  Json j{{"certificate", nullptr}};
  if (gamma) {
    const ValidityReport v = check_validity(*gamma, f.graph, dim);
    j["certificate"] = orientation_to_json(*gamma);
    j["valid"] = v.valid;
    BalanceOptions options;
    options.seed = c.seed;
    options.trials = c.trials;
    j["balance"] = to_json(is_balanced(*gamma, dim, options));
  }
  out << j.dump(2) << "\n";
  return gamma ? kExitFlexible : kExitRigid;
}

int reduce_command(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const GraphFile f = graph_from_json(read_json(path));
  const int dim = resolve_dim(c, f);
  try {
    const Graph reduced = reduce_surplus(f.graph, dim, c.seed, c.trials);
    out << graph_to_json(reduced, dim).dump(c.json ? 2 : -1) << "\n";
    return kExitRigid;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CannotReduce) throw;
    err << e.what() << "\n";
    return kExitFlexible;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic rigidity via source-stream-sink orientations"};
  app.require_subcommand(1);

  Common common;
  std::string graph_path, orientation_path, text_path = "-", mode = "kernel", placement_path, sinks;
  std::optional<std::uint64_t> budget;
  bool certified = false, verify = false;
  std::size_t max_terms = StraightenOptions{}.max_terms;

  auto* check = app.add_subcommand("check", "Decide generic rigidity");
  check->add_option("graph", graph_path, "Graph JSON file")->required();
  add_common(check, common);
  check->add_option("--mode", mode, "kernel or search")->check(CLI::IsMember({"kernel", "search"}));
  check->add_flag("--certified", certified, "Straighten certificates instead of random evaluation");
  check->add_option("--budget", budget, "Search limit on subsets and orientations");
  check->add_flag("--verify", verify, "Cross-check with the rank oracle");

  auto* oracle = app.add_subcommand("oracle", "Rigidity matrix rank at random placements");
  oracle->add_option("graph", graph_path, "Graph JSON file")->required();
  add_common(oracle, common);

  auto* straighten_cmd = app.add_subcommand("straighten", "Straighten a bracket polynomial");
  straighten_cmd->add_option("file", text_path, "Polynomial text file, - for stdin");
  straighten_cmd->add_option("--max-terms", max_terms, "Working-set cap");
  straighten_cmd->add_flag("--json", common.json, "JSON output");

  auto* balanced = app.add_subcommand("balanced", "Test whether an orientation is balanced");
  balanced->add_option("graph", graph_path, "Graph JSON file")->required();
  balanced->add_option("orientation", orientation_path, "Orientation JSON file")->required();
  add_common(balanced, common);
  balanced->add_flag("--certified", certified, "Straighten instead of random evaluation");

  auto* stress = app.add_subcommand("stress", "Synthesize a self-stress from an orientation");
  stress->add_option("graph", graph_path, "Graph JSON file")->required();
  stress->add_option("orientation", orientation_path, "Orientation JSON file")->required();
  add_common(stress, common);
  stress->add_option("--placement", placement_path, "Placement JSON file (default: random from --seed)");
  stress->add_option("--sinks", sinks, "Sink values, inline JSON array or file");

  auto* certificate = app.add_subcommand("certificate", "Build an orientation from the left kernel");
  certificate->add_option("graph", graph_path, "Graph JSON file")->required();
  add_common(certificate, common);

  auto* reduce = app.add_subcommand("reduce", "Delete surplus edges keeping the rank");
  reduce->add_option("graph", graph_path, "Graph JSON file")->required();
  add_common(reduce, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitRigid : kExitUsage;
  }

  try {
    if (check->parsed()) return check_command(graph_path, common, mode, certified, budget, verify, out);
    if (oracle->parsed()) return oracle_command(graph_path, common, out);
    if (straighten_cmd->parsed()) return straighten_command(text_path, max_terms, common.json, out);
    if (balanced->parsed()) return balanced_command(graph_path, orientation_path, common, certified, out, err);
    if (stress->parsed()) return stress_command(graph_path, orientation_path, common, placement_path, sinks, out);
    if (certificate->parsed()) return certificate_command(graph_path, common, out);
    if (reduce->parsed()) return reduce_command(graph_path, common, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace genrig
