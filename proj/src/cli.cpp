#include "capdisc/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>

#include "capdisc/covering.hpp"
#include "capdisc/discrepancy.hpp"
#include "capdisc/errors.hpp"
#include "capdisc/point_sets.hpp"
#include "capdisc/polar_analysis.hpp"
#include "capdisc/report.hpp"

namespace capdisc {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  std::string structure;
  int n = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct DirectedArgs {
  std::string points;
  double theta = 0.0;
  double phi = 0.0;
  bool json = false;
};

struct EngineArgs {
  int samples = 20;
  double r_min_factor = 0.5;
  int depth = 3;
  double tol = 1e-9;
  int threads = 1;
  std::string radius_rule = "window";
  std::string cover_cap_rule = "profile";
  bool timings = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--samples", samples, "Directions sampled per orbit for r_min")->check(CLI::PositiveNumber);
    cmd->add_option("--r-min-factor", r_min_factor, "r_min = factor * median sampled radius")
        ->check(CLI::Range(1e-12, 1.0));
    cmd->add_option("--depth", depth, "Cover Cap recursion depth")->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", tol, "Latitude search tolerance (radians)")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--radius-rule", radius_rule, "Sweep radius rule")->check(CLI::IsMember({"window", "profile"}));
    cmd->add_option("--cover-cap-rule", cover_cap_rule, "Cover Cap radius rule")
        ->check(CLI::IsMember({"window", "profile"}));
    cmd->add_flag("--timings", timings, "Include wall-clock timings in the report");
  }

  CoverParams params() const {
    CoverParams p;
    p.orbit_sample_count = samples;
    p.r_min_factor = r_min_factor;
    p.cover_cap_max_depth = depth;
    p.binary_search_tol = tol;
    p.threads = threads;
    p.radius_rule = *parse_radius_rule(radius_rule);
    p.cover_cap_radius_rule = *parse_radius_rule(cover_cap_rule);
    return p;
  }
};

struct CoverArgs {
  std::string points;
  double d = 0.0;
  Region region;
  std::string report;
  EngineArgs engine;
};

struct ConjectureArgs {
  int n_min = 0;
  int n_max = 0;
  std::string structure = "twisted";
  std::string summary;
  std::string report_dir;
  EngineArgs engine;
};

struct NaiveArgs {
  std::string points;
  std::size_t limit = 400;
  int threads = 1;
  bool json = false;
};

int exit_for(CoverStatus s) {
  switch (s) {
    case CoverStatus::covered: return kExitOk;
    case CoverStatus::counterexample: return kExitCounterexample;
    case CoverStatus::residual: return kExitResidual;
  }
  return kExitResidual;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const auto gen = parse_generator(a.structure);
  if (!gen || *gen == Generator::file) throw UsageError("unknown structure '" + a.structure + "'");
  std::optional<PointSet> ps;
  if (*gen == Generator::random) {
    if (a.n < 1) throw UsageError("--n must be >= 1 for random points");
    ps = generate_random_uniform(static_cast<std::size_t>(a.n), a.seed);
  } else {
    if (a.n < 2) throw UsageError("--n must be >= 2 for polar structures");
    ps = *gen == Generator::polar ? generate_polar(a.n) : generate_twisted_polar(a.n);
  }
  write_point_set(*ps, a.out);
  out << ps->size() << '\n';
  return kExitOk;
}

int cmd_directed(const DirectedArgs& a, std::ostream& out) {
  const auto ps = read_point_set(a.points);
  const auto v = polar_to_cartesian({a.theta, a.phi});
  const auto r = directed_discrepancy(project(ps, v));
  if (a.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << std::setprecision(17) << "value " << r.value << '\n'
        << "witness_height " << r.witness_height << '\n'
        << "witness_inclusive " << (r.witness_inclusive ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_cover(const CoverArgs& a, std::ostream& out) {
  const auto ps = read_point_set(a.points);
  CoverParams params = a.engine.params();
  params.d = a.d;
  params.region = a.region;
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto outcome = cover_region(ps, params);
  write_text_file(a.report, cover_report(ps.meta(), ps.size(), params, outcome, a.engine.timings).dump(2) + "\n");
  out << "status " << to_string(outcome.status) << '\n'
      << "n_DD " << outcome.counters.n_dd << '\n'
      << "n_CC " << outcome.counters.n_cc << '\n';
  if (outcome.counterexample) {
    const auto p = cartesian_to_polar(outcome.counterexample->direction);
    out << std::setprecision(17) << "counterexample theta " << p.theta << " phi " << p.phi << " value "
        << outcome.counterexample->value << '\n';
  }
  return exit_for(outcome.status);
}

int cmd_conjecture(const ConjectureArgs& a, std::ostream& out) {
  if (a.n_min < 2) throw UsageError("--n-min must be >= 2");
  if (a.n_min > a.n_max) throw UsageError("--n-min must not exceed --n-max");
  const auto gen = parse_generator(a.structure);
  if (!gen || (*gen != Generator::polar && *gen != Generator::twisted_polar))
    throw UsageError("--structure must be polar or twisted");
  ConjectureOptions options;
  options.structure = *gen;
  options.base = a.engine.params();
  try {
    options.base.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto rows = read_summary(a.summary);
  bool any_counterexample = false;
  bool all_covered = true;
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const auto result = conjecture_check(n, options);
    const auto& o = result.outcome;
    RunSummaryRow row{n,
                      result.t,
                      o.counters.n_dd,
                      o.counters.n_cc,
                      o.timings.phase1,
                      o.timings.cover_cap,
                      o.timings.total,
                      result.d,
                      o.status};
    upsert_summary_row(rows, row);
    write_summary(a.summary, rows);
    if (!a.report_dir.empty()) {
      std::filesystem::create_directories(a.report_dir);
      CoverParams params = options.base;
      params.d = result.d;
      params.region = result.region;
      PointSetMeta meta{*gen, n, std::nullopt};
      const auto path = std::filesystem::path(a.report_dir) / ("report_n" + std::to_string(n) + ".json");
      write_text_file(path, cover_report(meta, static_cast<std::size_t>(result.t), params, o, a.engine.timings).dump(2) + "\n");
    }
    out << "n " << n << " t " << result.t << " status " << to_string(o.status) << " n_DD " << o.counters.n_dd
        << " n_CC " << o.counters.n_cc << '\n';
    any_counterexample = any_counterexample || o.status == CoverStatus::counterexample;
    all_covered = all_covered && o.status == CoverStatus::covered;
  }
  if (all_covered) return kExitOk;
  return any_counterexample ? kExitCounterexample : kExitResidual;
}

int cmd_naive(const NaiveArgs& a, std::ostream& out) {
  const auto ps = read_point_set(a.points);
  NaiveOptions options;
  options.size_limit = a.limit;
  options.threads = a.threads;
  const auto r = naive_discrepancy(ps, options);
  if (a.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    const auto& ax = r.witness.axis;
    out << std::setprecision(17) << "value " << r.value << '\n'
        << "axis " << ax.x() << ' ' << ax.y() << ' ' << ax.z() << '\n'
        << "height " << r.witness.height << '\n'
        << "witness_inclusive " << (r.witness_inclusive ? "true" : "false") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified cap discrepancy bounds for point sets on the sphere", "capdisc"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a point set as CSV");
  generate->add_option("--structure", gen.structure, "polar, twisted or random")->required();
  generate->add_option("--n", gen.n, "Orbit parameter (polar) or point count (random)")->required();
  generate->add_option("--seed", gen.seed, "Seed for random points");
  generate->add_option("--out", gen.out, "Output CSV")->required();

  DirectedArgs dir;
  auto* directed = app.add_subcommand("directed", "Directed discrepancy at one direction");
  directed->add_option("--points", dir.points, "Point CSV")->required();
  directed->add_option("--theta", dir.theta, "Longitude (radians)")->required();
  directed->add_option("--phi", dir.phi, "Latitude (radians)")->required()->check(CLI::Range(-kHalfPi, kHalfPi));
  directed->add_flag("--json", dir.json, "Print JSON");

  CoverArgs cov;
  auto* cover = app.add_subcommand("cover", "Certify a bound on a region of directions");
  cover->add_option("--points", cov.points, "Point CSV")->required();
  cover->add_option("--d", cov.d, "Bound to certify")->required();
  cover->add_option("--phi-min", cov.region.phi_min, "Region latitude lower edge");
  cover->add_option("--phi-max", cov.region.phi_max, "Region latitude upper edge");
  cover->add_option("--theta-min", cov.region.theta_min, "Region longitude lower edge");
  cover->add_option("--theta-max", cov.region.theta_max, "Region longitude upper edge");
  cover->add_option("--report", cov.report, "Report JSON")->required();
  cov.engine.add_to(cover);

  ConjectureArgs conj;
  auto* conjecture = app.add_subcommand("conjecture", "Check the north pole is the worst direction for a range of n");
  conjecture->add_option("--n-min", conj.n_min)->required();
  conjecture->add_option("--n-max", conj.n_max)->required();
  conjecture->add_option("--structure", conj.structure, "polar or twisted");
  conjecture->add_option("--summary", conj.summary, "Summary CSV (rows replaced per n)")->required();
  conjecture->add_option("--report-dir", conj.report_dir, "Also write one report JSON per n here");
  conj.engine.add_to(conjecture);

  NaiveArgs nv;
  auto* naive = app.add_subcommand("naive", "Exact discrepancy by brute force (small sets)");
  naive->add_option("--points", nv.points, "Point CSV")->required();
  naive->add_option("--limit", nv.limit, "Largest accepted point count");
  naive->add_option("--threads", nv.threads, "Worker threads")->check(CLI::PositiveNumber);
  naive->add_flag("--json", nv.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "capdisc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*directed) return cmd_directed(dir, out);
    if (*cover) return cmd_cover(cov, out);
    if (*conjecture) return cmd_conjecture(conj, out);
    if (*naive) return cmd_naive(nv, out);
  } catch (const UsageError& e) {
    err << "capdisc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "capdisc: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    err << "capdisc: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace capdisc
