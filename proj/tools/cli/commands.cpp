#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "config.hpp"
#include "manifest.hpp"
#include "secretary/analysis.hpp"
#include "secretary/generators.hpp"
#include "secretary/hardness.hpp"
#include "secretary/instance_json.hpp"
#include "secretary/rng.hpp"
#include "secretary/simulate.hpp"
#include "svg.hpp"

namespace secretary::cli {

namespace fs = std::filesystem;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_dir = "out";
  std::string config;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
};

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Collects artifacts and writes the manifest once a command finishes.
class Run {
 public:
  Run(std::string command, const Globals& globals, int argc, const char* const* argv)
      : globals_(globals), start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.master_seed = globals.seed;
    manifest_.started_at = utc_timestamp(std::chrono::system_clock::now());
    for (int i = 1; i < argc; ++i) manifest_.arguments.emplace_back(argv[i]);
    fs::create_directories(dir());
  }

  fs::path dir() const { return fs::path(globals_.out_dir); }

  fs::path artifact(const std::string& name) {
    manifest_.artifacts.push_back(name);
    return dir() / name;
  }

  void set_config(Json config) { manifest_.config = std::move(config); }
  void set_seed(std::uint64_t seed) { manifest_.master_seed = seed; }

  void finish() {
    manifest_.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    write_manifest(manifest_, dir() / "manifest.json");
  }

 private:
  const Globals& globals_;
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

struct SweepFlags {
  std::vector<std::string> generators;
  std::vector<double> epsilons;
  std::vector<int> ks;
  int n = 0;
  int datasets = 0;
  int trials = 0;
  bool dry_run = false;
};

std::string series_label(const SweepRow& row) {
  return row.params.empty() ? row.algorithm : row.algorithm + " (" + row.params + ")";
}

void write_sweep_charts(const std::vector<SweepRow>& rows, const ExperimentConfig& config,
                        Run& run) {
  for (GeneratorKind g : config.generators) {
    for (int k : config.ks) {
      LineChart chart;
      chart.title = std::string(to_string(g)) + ", k=" + std::to_string(k);
      chart.x_label = "prediction error epsilon";
      chart.y_label = "mean competitive ratio";
      std::map<std::string, std::size_t> index;
      for (const auto& r : rows) {
        if (r.generator != g || r.k != k) continue;
        const std::string label = series_label(r);
        auto [it, inserted] = index.emplace(label, chart.series.size());
        if (inserted) chart.series.push_back({label, {}, {}});
        chart.series[it->second].x.push_back(r.epsilon);
        chart.series[it->second].y.push_back(r.mean_ratio);
      }
      if (chart.series.empty()) continue;
      const std::string name = "sweep_" + std::string(to_string(g)) + "_k" + std::to_string(k) + ".svg";
      write_text(run.artifact(name), render_svg(chart));
    }
  }
}

int cmd_sweep(const Globals& globals, const SweepFlags& flags, CLI::App& sub, int argc,
              const char* const* argv, std::ostream& out) {
  ExperimentConfig config = globals.config.empty() ? default_config() : load_config(globals.config);
  if (globals.seed_opt->count()) config.master_seed = globals.seed;
  if (globals.jobs_opt->count()) config.jobs = globals.jobs;
  if (sub.count("--generators")) {
    config.generators.clear();
    for (const auto& g : flags.generators) config.generators.push_back(parse_generator_kind(g));
  }
  if (sub.count("--epsilons")) config.epsilons = flags.epsilons;
  if (sub.count("--ks")) config.ks = flags.ks;
  if (sub.count("--n")) config.n = flags.n;
  if (sub.count("--datasets")) config.datasets = flags.datasets;
  if (sub.count("--trials")) config.trials = flags.trials;
  validate(config);

  const CellPlan plan = plan_cells(config);
  if (flags.dry_run) {
    for (const auto& c : plan.cells) {
      std::size_t algorithms = 0;
      for (const auto& a : config.algorithms) algorithms += a.supports_capacity(c.k);
      out << "cell generator=" << to_string(c.generator) << " k=" << c.k
          << " epsilon=" << compact(c.epsilon) << " algorithms=" << algorithms
          << " datasets=" << config.datasets << " trials=" << config.trials << '\n';
    }
    for (const auto& s : plan.skipped) {
      out << "skip generator=" << to_string(s.cell.generator) << " k=" << s.cell.k
          << " epsilon=" << compact(s.cell.epsilon) << " reason=" << s.reason << '\n';
    }
    out << "cells=" << plan.cells.size() << " skipped=" << plan.skipped.size() << '\n';
    return kOk;
  }

  Globals scoped = globals;
  Run run("sweep", scoped, argc, argv);
  run.set_seed(config.master_seed);
  run.set_config(config_to_json(config));
  const std::vector<SweepRow> rows = sweep(config);
  write_text(run.artifact("sweep.csv"), to_csv(rows));
  write_sweep_charts(rows, config, run);
  run.finish();
  out << "rows=" << rows.size() << " cells=" << plan.cells.size()
      << " skipped=" << plan.skipped.size() << " out=" << run.dir().string() << '\n';
  return kOk;
}

struct GenFlags {
  std::string generator = "uniform";
  int n = 100;
  int k = 1;
  double epsilon = 0.0;
  int datasets = 1;
};

int cmd_gen(const Globals& globals, const GenFlags& flags, int argc, const char* const* argv,
            std::ostream& out) {
  GeneratorSpec spec{parse_generator_kind(flags.generator), flags.n, flags.k, flags.epsilon, 0};
  validate(spec);
  if (flags.datasets < 1) throw std::invalid_argument("--datasets must be >= 1");
  Run run("gen", globals, argc, argv);
  Json cfg;
  cfg["generator"] = flags.generator;
  cfg["n"] = flags.n;
  cfg["k"] = flags.k;
  cfg["epsilon"] = flags.epsilon;
  cfg["datasets"] = flags.datasets;
  run.set_config(cfg);
  for (int d = 0; d < flags.datasets; ++d) {
    spec.seed = globals.seed + static_cast<std::uint64_t>(d);
    const Instance instance = generate(spec);
    const fs::path path = run.artifact(dataset_file_name(spec));
    write_instance(instance, path);
    out << path.string() << " epsilon_global=" << fixed(epsilon_global(instance)) << '\n';
  }
  run.finish();
  return kOk;
}

struct EstimateFlags {
  std::string algorithm;
  double tau = -1.0;
  double theta = 0.0;
  std::string rule = "global";
  bool theta_relative = false;
  std::int64_t trials = 10000;
  std::string instance;
  std::string generator = "uniform";
  int n = 100;
  int k = 1;
  double epsilon = 0.0;
};

int cmd_estimate(const Globals& globals, const EstimateFlags& flags, std::ostream& out) {
  AlgorithmSpec spec;
  spec.kind = parse_algorithm_kind(flags.algorithm);
  spec.tau = flags.tau >= 0.0 ? flags.tau
             : spec.kind == AlgorithmKind::kLearnedDynkin ? 0.313
                                                          : kInvE;
  spec.theta = flags.theta;
  spec.switch_rule = parse_error_rule(flags.rule);
  spec.theta_relative = flags.theta_relative;
  validate(spec);
  const Instance instance =
      flags.instance.empty()
          ? generate(GeneratorSpec{parse_generator_kind(flags.generator), flags.n, flags.k,
                                   flags.epsilon, globals.seed})
          : read_instance(flags.instance);
  if (!spec.supports_capacity(instance.capacity())) {
    throw std::invalid_argument(spec.name() + " does not support k=" +
                                std::to_string(instance.capacity()));
  }
  if (flags.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  const RatioEstimate est = estimate_ratio(instance, spec, flags.trials, globals.seed);
  out << "algorithm=" << spec.name() << " params=" << spec.params()
      << " n=" << instance.size() << " k=" << instance.capacity()
      << " epsilon_global=" << fixed(epsilon_global(instance))
      << " mean_ratio=" << fixed(est.mean, 8) << " std_error=" << fixed(est.std_error, 8)
      << " trials=" << est.trials << '\n';
  return kOk;
}

struct AnalyzeFlags {
  double theta_min = 0.5, theta_max = 0.8, tau_min = 0.2, tau_max = 0.45;
  double step = 0.001;
  int m_max = 50;
  double theta = 0.646;
  double tau = 0.313;
  int m = 1;
  std::vector<double> c_values;
  std::vector<double> lambda_values;
  double eps_step = 0.01;
};

int cmd_gridsearch(const Globals& globals, const AnalyzeFlags& f, int argc,
                   const char* const* argv, std::ostream& out) {
  if (!(f.step > 0.0)) throw std::invalid_argument("--step must be > 0");
  if (f.m_max < 1) throw std::invalid_argument("--m-max must be >= 1");
  Run run("analyze gridsearch", globals, argc, argv);
  Json cfg;
  cfg["theta_range"] = {f.theta_min, f.theta_max};
  cfg["tau_range"] = {f.tau_min, f.tau_max};
  cfg["step"] = f.step;
  cfg["m_max"] = f.m_max;
  run.set_config(cfg);
  const GridOptimum best =
      grid_search({f.theta_min, f.theta_max}, {f.tau_min, f.tau_max}, f.step, f.m_max);
  write_text(run.artifact("gridsearch.csv"),
             "theta,tau,bound\n" + fixed(best.theta) + "," + fixed(best.tau) + "," +
                 fixed(best.bound, 10) + "\n");

  LineChart chart;
  chart.title = "lower bound over theta at tau=" + fixed(best.tau, 3);
  chart.x_label = "theta";
  chart.y_label = "lower bound";
  chart.x_min = f.theta_min;
  chart.x_max = f.theta_max;
  chart.y_min = 0.0;
  chart.y_max = 0.25;
  Series series{"min over cases, m <= " + std::to_string(f.m_max), {}, {}};
  const double coarse = std::max(f.step, (f.theta_max - f.theta_min) / 100.0);
  for (double th : grid_points({f.theta_min, f.theta_max}, coarse)) {
    series.x.push_back(th);
    series.y.push_back(overall_lower_bound(th, best.tau, f.m_max));
  }
  chart.series.push_back(std::move(series));
  write_text(run.artifact("gridsearch.svg"), render_svg(chart));
  run.finish();
  out << "theta*=" << fixed(best.theta, 4) << " tau*=" << fixed(best.tau, 4)
      << " bound*=" << fixed(best.bound, 8) << '\n';
  return kOk;
}

int cmd_bounds(const Globals& globals, const AnalyzeFlags& f, bool m_range, int argc,
               const char* const* argv, std::ostream& out) {
  const int first = m_range ? 1 : f.m;
  const int last = m_range ? f.m_max : f.m;
  if (first < 1 || last < first) throw std::invalid_argument("m must be >= 1");
  Run run("analyze bounds", globals, argc, argv);
  Json cfg;
  cfg["theta"] = f.theta;
  cfg["tau"] = f.tau;
  cfg["m_first"] = first;
  cfg["m_last"] = last;
  run.set_config(cfg);
  std::string csv = "case,m,value\n";
  for (int m = first; m <= last; ++m) {
    for (CaseId id : kAllCases) {
      const double v = case_bound(id, {f.tau, f.theta, m});
      out << "case " << to_string(id) << " m=" << m << " " << fixed(v) << '\n';
      csv += std::string(to_string(id)) + "," + std::to_string(m) + "," + fixed(v, 10) + "\n";
    }
  }
  const double trust = trust_ratio(f.theta);
  const double overall = overall_lower_bound(f.theta, f.tau, last);
  out << "trust (1-theta)/(1+theta) " << fixed(trust) << '\n';
  out << "overall m_max=" << last << " " << fixed(overall) << '\n';
  csv += "trust,0," + fixed(trust, 10) + "\n";
  csv += "overall," + std::to_string(last) + "," + fixed(overall, 10) + "\n";
  write_text(run.artifact("bounds.csv"), csv);
  run.finish();
  return kOk;
}

int cmd_agkk(const Globals& globals, const AnalyzeFlags& f, int argc, const char* const* argv,
             std::ostream& out) {
  std::vector<double> cs = f.c_values;
  if (cs.empty()) cs = {1.0, 1.0 / (0.215 * std::numbers::e), 3.0};
  std::vector<double> lambdas = f.lambda_values;
  if (lambdas.empty()) lambdas = {0.0, 0.2, 0.4, 0.6};
  for (double c : cs) {
    if (!(c >= 1.0)) throw std::invalid_argument("--c values must be >= 1");
  }
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 1.0)) throw std::invalid_argument("--lambda values must lie in [0, 1]");
  }
  if (!(f.eps_step > 0.0)) throw std::invalid_argument("--eps-step must be > 0");
  const std::vector<double> eps = grid_points({0.0, 1.0}, f.eps_step);

  Run run("analyze agkk-curves", globals, argc, argv);
  Json cfg;
  cfg["c"] = cs;
  cfg["lambda"] = lambdas;
  cfg["eps_step"] = f.eps_step;
  run.set_config(cfg);

  const auto rows = comparison_curves(cs, lambdas, eps);
  std::string csv = "c,lambda,epsilon,agkk_ratio,learned_dynkin\n";
  for (const auto& r : rows) {
    csv += fixed(r.c) + "," + fixed(r.lambda) + "," + fixed(r.epsilon) + "," +
           fixed(r.agkk, 10) + "," + fixed(r.learned_dynkin, 10) + "\n";
  }
  write_text(run.artifact("agkk_curves.csv"), csv);

  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    LineChart chart;
    chart.title = "c=" + fixed(cs[ci], 3);
    chart.x_label = "prediction error epsilon";
    chart.y_label = "competitive ratio";
    for (double lambda : lambdas) {
      Series s{"AGKK lambda=" + compact(lambda), {}, {}};
      for (const auto& r : rows) {
        if (r.c == cs[ci] && r.lambda == lambda) {
          s.x.push_back(r.epsilon);
          s.y.push_back(r.agkk);
        }
      }
      chart.series.push_back(std::move(s));
    }
    Series ours{"learned Dynkin", {}, {}};
    for (double e : eps) {
      ours.x.push_back(e);
      ours.y.push_back(learned_dynkin_guarantee(e));
    }
    chart.series.push_back(std::move(ours));
    write_text(run.artifact("agkk_c" + std::to_string(ci + 1) + ".svg"), render_svg(chart));
    out << "c=" << fixed(cs[ci], 4) << " worst=" << fixed(1.0 / (cs[ci] * std::numbers::e))
        << " f(c)=" << fixed(agkk_f(cs[ci])) << '\n';
  }
  run.finish();
  out << "rows=" << rows.size() << '\n';
  return kOk;
}

struct LpFlags {
  int n = 2;
  std::string output;
  std::string solution;
};

void write_certificate(const Certificate& cert, std::ostream& out) {
  for (std::size_t i = 0; i < cert.subsets.size(); ++i) {
    out << "E=" << error_label(cert.subsets[i]) << " value=" << fixed(cert.values[i], 10) << '\n';
  }
  out << "min=" << fixed(cert.min_value, 10) << '\n';
}

int cmd_lp(const std::string& action, const Globals& globals, const LpFlags& f, int argc,
           const char* const* argv, std::ostream& out) {
  if (f.n < 2 || f.n > 7) throw std::invalid_argument("--n must satisfy 2 <= n <= 7");
  if ((action == "solve" || (action == "certify" && f.solution.empty())) &&
      f.n > kEmbeddedSolveMaxN) {
    throw BudgetExceeded("embedded solve is limited to n <= " +
                         std::to_string(kEmbeddedSolveMaxN) +
                         "; use lp export and pass an external solution to lp certify");
  }
  Run run("lp " + action, globals, argc, argv);
  Json cfg;
  cfg["n"] = f.n;
  run.set_config(cfg);
  const LPModel model = build_lp(f.n);

  if (action == "build") {
    std::size_t reach = 0, fix = 0, cover = 0;
    for (const auto& r : model.rows) {
      reach += r.kind == RowKind::kReach;
      fix += r.kind == RowKind::kFix;
      cover += r.kind == RowKind::kCover;
    }
    out << "n=" << f.n << " variables=" << model.variable_count() << " sequences="
        << model.sigma.size() << " reach_rows=" << reach << " fix_rows=" << fix
        << " cover_rows=" << cover << '\n';
  } else if (action == "export") {
    const fs::path path = f.output.empty() ? run.artifact("hardness_n" + std::to_string(f.n) + ".lp")
                                           : fs::path(f.output);
    export_lp(model, path);
    out << "wrote " << path.string() << " variables=" << model.variable_count()
        << " rows=" << model.rows.size() << '\n';
  } else if (action == "solve") {
    const LpSolution sol = solve_lp(model);
    if (sol.status != LpStatus::kOptimal) {
      throw std::runtime_error(std::string("LP solve ended with status ") +
                               std::string(to_string(sol.status)));
    }
    const fs::path path = run.artifact("solution_n" + std::to_string(f.n) + ".txt");
    write_text(path, write_solution(solution_values(model, sol)));
    out << "n=" << f.n << " z*=" << fixed(sol.z, 10) << " residual=" << compact(sol.max_residual)
        << " reduced_variables=" << sol.reduced_variables << " iterations=" << sol.iterations
        << '\n';
  } else {
    LpSolution sol = f.solution.empty() ? solve_lp(model)
                                        : import_solution(model, load_solution(f.solution));
    const Certificate cert = certify(policy_from_lp(model, sol.x));
    write_certificate(cert, out);
    out << "z*=" << fixed(sol.z, 10) << " gap=" << compact(std::abs(cert.min_value - sol.z))
        << " residual=" << compact(sol.max_residual) << '\n';
    std::string csv = "subset,value\n";
    for (std::size_t i = 0; i < cert.subsets.size(); ++i) {
      csv += error_label(cert.subsets[i]) + "," + fixed(cert.values[i], 12) + "\n";
    }
    write_text(run.artifact("certificate_n" + std::to_string(f.n) + ".csv"), csv);
  }
  run.finish();
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secretary problems with predictions: simulation, bounds and hardness LP"};
  app.name("secretary");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.seed_opt = app.add_option("--seed", g.seed, "Master seed");
  g.jobs_opt = app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out-dir", g.out_dir, "Directory for outputs")->capture_default_str();
  app.add_option("--config", g.config, "JSON config or run manifest");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate dataset instances as JSON");
  gen_cmd->add_option("--generator", gen.generator, "uniform | adversarial | almost-constant")
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--k", gen.k)->capture_default_str();
  gen_cmd->add_option("--epsilon", gen.epsilon)->capture_default_str();
  gen_cmd->add_option("--datasets", gen.datasets, "Number of instances (seeds seed..seed+d-1)")
      ->capture_default_str();

  SweepFlags sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the experiment grid and write CSV/SVG");
  sweep_cmd->add_option("--generators", sw.generators)->delimiter(',');
  sweep_cmd->add_option("--epsilons", sw.epsilons)->delimiter(',');
  sweep_cmd->add_option("--ks", sw.ks)->delimiter(',');
  sweep_cmd->add_option("--n", sw.n);
  sweep_cmd->add_option("--datasets", sw.datasets);
  sweep_cmd->add_option("--trials", sw.trials);
  sweep_cmd->add_flag("--dry-run", sw.dry_run, "Print the cell plan only");

  EstimateFlags est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate one algorithm's ratio on one instance");
  est_cmd->add_option("--algorithm", est.algorithm,
                      "dynkin | learned-dynkin | kleinberg | learned-kleinberg | top-k | "
                      "prophet-threshold")
      ->required();
  est_cmd->add_option("--tau", est.tau);
  est_cmd->add_option("--theta", est.theta);
  est_cmd->add_option("--switch-rule", est.rule)->capture_default_str();
  est_cmd->add_flag("--theta-relative", est.theta_relative);
  est_cmd->add_option("--trials", est.trials)->capture_default_str();
  est_cmd->add_option("--instance", est.instance, "Instance JSON; otherwise generated");
  est_cmd->add_option("--generator", est.generator)->capture_default_str();
  est_cmd->add_option("--n", est.n)->capture_default_str();
  est_cmd->add_option("--k", est.k)->capture_default_str();
  est_cmd->add_option("--epsilon", est.epsilon)->capture_default_str();

  AnalyzeFlags an;
  auto* analyze = app.add_subcommand("analyze", "Evaluate bound formulas");
  analyze->require_subcommand(1);
  auto* grid = analyze->add_subcommand("gridsearch", "Grid search over (theta, tau)");
  grid->add_option("--theta-min", an.theta_min)->capture_default_str();
  grid->add_option("--theta-max", an.theta_max)->capture_default_str();
  grid->add_option("--tau-min", an.tau_min)->capture_default_str();
  grid->add_option("--tau-max", an.tau_max)->capture_default_str();
  grid->add_option("--step", an.step)->capture_default_str();
  grid->add_option("--m-max", an.m_max)->capture_default_str();
  auto* bounds = analyze->add_subcommand("bounds", "Print the six case bounds");
  bounds->add_option("--theta", an.theta)->capture_default_str();
  bounds->add_option("--tau", an.tau)->capture_default_str();
  bounds->add_option("--m", an.m)->capture_default_str();
  bounds->add_option("--m-max", an.m_max, "Print m = 1..m-max instead of a single m");
  auto* agkk = analyze->add_subcommand("agkk-curves", "Ratio curves against prediction error");
  agkk->add_option("--c", an.c_values)->delimiter(',');
  agkk->add_option("--lambda", an.lambda_values)->delimiter(',');
  agkk->add_option("--eps-step", an.eps_step)->capture_default_str();

  auto* lp = app.add_subcommand("lp", "Hardness LP over partial permutations");
  lp->require_subcommand(1);
  LpFlags lpf;
  std::map<std::string, CLI::App*> lp_cmds;
  for (const char* name : {"build", "solve", "export", "certify"}) {
    auto* c = lp->add_subcommand(name);
    c->add_option("--n", lpf.n)->required();
    if (std::string(name) == "export") c->add_option("--output", lpf.output, "LP file path");
    if (std::string(name) == "certify") {
      c->add_option("--solution", lpf.solution, "Solution file of 'variable value' lines");
    }
    lp_cmds[name] = c;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen, argc, argv, out);
    if (*sweep_cmd) return cmd_sweep(g, sw, *sweep_cmd, argc, argv, out);
    if (*est_cmd) return cmd_estimate(g, est, out);
    if (*grid) return cmd_gridsearch(g, an, argc, argv, out);
    if (*bounds) return cmd_bounds(g, an, bounds->count("--m-max") > 0, argc, argv, out);
    if (*agkk) return cmd_agkk(g, an, argc, argv, out);
    for (const auto& [name, c] : lp_cmds) {
      if (*c) return cmd_lp(name, g, lpf, argc, argv, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace secretary::cli
