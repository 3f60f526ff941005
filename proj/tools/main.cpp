// nsclab: command-line laboratory for null space constants, spark, recovery
// staircases, and the verification suites.

#include "nsclab/derived.hpp"
#include "nsclab/matgen.hpp"
#include "nsclab/nsc.hpp"
#include "nsclab/recovery.hpp"
#include "nsclab/spark.hpp"
#include "nsclab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nsclab::Index;
using nsclab::Mat;
using nsclab::Vec;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
  std::string matrix_path;
  std::string gen_spec;
  std::uint64_t seed = 0;
  bool normalize = false;
  double rank_tol = 0.0;
  std::string out_path;
  std::string format = "jsonl";
  int jobs = 1;
  bool timings = false;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NSCLAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_matrix) {
  if (needs_matrix) {
    cmd->add_option("--matrix", opts.matrix_path, "matrix file (csv rows)");
    cmd->add_option("--gen", opts.gen_spec,
                    "generator DIST:MxN (gaussian or uniform)");
    cmd->add_flag("--normalize", opts.normalize,
                  "scale generated columns to unit l2 norm");
  }
  cmd->add_option("--seed", opts.seed, "random seed (default $NSCLAB_SEED or 0)");
  cmd->add_option("--rank-tol", opts.rank_tol, "rank tolerance (0 = default)");
  cmd->add_option("--out", opts.out_path, "output file (default stdout)");
  cmd->add_option("--format", opts.format, "csv|jsonl (default jsonl)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd->add_option("--jobs", opts.jobs, "parallelism degree (0 = all cores)");
  cmd->add_flag("--timings", opts.timings,
                "include wall-time fields in records (breaks byte-for-byte "
                "reproducibility)");
}

nsclab::GeneratorSpec parse_gen(const std::string& text, std::uint64_t seed,
                                bool normalize) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                  "--gen expects DIST:MxN, got '" + text + "'");
  const std::string dist = text.substr(0, colon);
  const std::string dims = text.substr(colon + 1);
  const auto x = dims.find('x');
  if (x == std::string::npos)
    nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                  "--gen expects DIST:MxN, got '" + text + "'");
  nsclab::GeneratorSpec spec;
  spec.dist = nsclab::parse_dist(dist);
  spec.rows = std::stol(dims.substr(0, x));
  spec.cols = std::stol(dims.substr(x + 1));
  spec.seed = seed;
  spec.normalize_columns = normalize;
  return spec;
}

nsclab::SensingMatrix load_matrix(const CommonOpts& opts) {
  const bool have_file = !opts.matrix_path.empty();
  const bool have_gen = !opts.gen_spec.empty();
  if (have_file == have_gen)
    nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                  "exactly one of --matrix and --gen is required");
  if (have_file) return nsclab::read_matrix(opts.matrix_path);
  return nsclab::gen_matrix(parse_gen(opts.gen_spec, opts.seed, opts.normalize));
}

std::vector<double> parse_p_grid(const std::string& text) {
  double lo = 0.0, hi = 1.0;
  int steps = 101;
  if (!text.empty()) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                    "--p-grid expects LO:HI:STEPS");
    lo = std::stod(text.substr(0, c1));
    hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    steps = std::stoi(text.substr(c2 + 1));
  }
  return nsclab::uniform_grid(lo, hi, steps);
}

class Emitter {
 public:
  explicit Emitter(const CommonOpts& opts) {
    if (!opts.out_path.empty()) {
      file_.open(opts.out_path);
      if (!file_)
        nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                      "cannot open --out file '" + opts.out_path + "'");
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }

  void line(const std::string& s) { (*out_) << s << "\n"; }
  void record(const json& j) { (*out_) << j.dump() << "\n"; }

 private:
  std::ostream* out_ = nullptr;
  std::ofstream file_;
};

json value_or_null(double v) {
  if (std::isinf(v)) return nullptr;
  return v;
}

json certificate_json(const nsclab::Certificate& cert) {
  json j;
  j["z"] = std::vector<double>(cert.z.data(), cert.z.data() + cert.z.size());
  j["support"] = cert.support.indices();
  j["theta"] = cert.theta_value;
  return j;
}

json base_record(const std::string& op, const nsclab::SensingMatrix& a,
                 const CommonOpts& opts) {
  json j;
  j["op"] = op;
  j["matrix_id"] = a.id();
  j["seed"] = opts.seed;
  return j;
}

void maybe_add_ms(json& j, const CommonOpts& opts, Clock::time_point t0) {
  if (opts.timings)
    j["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

int cmd_nsc(const CommonOpts& opts, double p, int k,
            const nsclab::EstimatorConfig& est_cfg, bool certificate) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::NscContext ctx(a, opts.rank_tol);
  const nsclab::NscEstimate est =
      nsclab::nsc_estimate(ctx, nsclab::NscQuery{p, k, est_cfg.zero_tol}, est_cfg);

  Emitter emit(opts);
  json j = base_record("nsc", a, opts);
  j["p"] = p;
  j["k"] = k;
  j["value"] = value_or_null(est.value);
  j["status"] = nsclab::to_string(est.status);
  j["method"] = est.method;
  if (certificate && est.certificate)
    j["certificate"] = certificate_json(*est.certificate);
  maybe_add_ms(j, opts, t0);
  emit.record(j);
  return 0;
}

int cmd_spark(const CommonOpts& opts, int max_cols) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::SparkResult spark = nsclab::compute_spark(a, opts.rank_tol, max_cols);

  Emitter emit(opts);
  json j = base_record("spark", a, opts);
  j["spark"] = spark.spark;
  j["L"] = spark.L;
  if (!spark.no_dependent_subset) {
    j["witness"] = spark.witness;
  } else {
    j["no_dependent_subset"] = true;
  }
  maybe_add_ms(j, opts, t0);
  emit.record(j);
  return 0;
}

int cmd_staircase(const CommonOpts& opts, const std::string& grid_text,
                  double margin, const nsclab::EstimatorConfig& est_cfg) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::NscContext ctx(a, opts.rank_tol);
  const auto grid = parse_p_grid(grid_text);
  const nsclab::StaircaseCurve curve =
      nsclab::staircase(ctx, grid, margin, est_cfg, opts.jobs);

  Emitter emit(opts);
  if (opts.format == "csv") {
    emit.line("p,k_star");
    for (size_t i = 0; i < curve.grid.size(); ++i)
      emit.line(std::to_string(curve.grid[i]) + "," +
                std::to_string(curve.values[i]));
    return 0;
  }
  for (size_t i = 0; i < curve.grid.size(); ++i) {
    json j = base_record("staircase", a, opts);
    j["p"] = curve.grid[i];
    j["value"] = curve.values[i];
    j["status"] = curve.all_exact ? "Exact" : "LowerBound";
    maybe_add_ms(j, opts, t0);
    emit.record(j);
  }
  for (const auto& jump : curve.jumps) {
    json j = base_record("staircase-jump", a, opts);
    j["p_lo"] = jump.p_lo;
    j["p_hi"] = jump.p_hi;
    j["from"] = jump.from;
    j["to"] = jump.to;
    emit.record(j);
  }
  return 0;
}

int cmd_pstar(const CommonOpts& opts, int k, double tol_p,
              const nsclab::EstimatorConfig& est_cfg) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::NscContext ctx(a, opts.rank_tol);
  const nsclab::ReconstructionExponent rec = nsclab::p_star(ctx, k, tol_p, est_cfg);

  if (rec.status_downgrade)
    std::cerr << "warning: some evaluations were lower bounds; the bracket "
                 "certifies p* <= "
              << rec.hi << " only\n";

  Emitter emit(opts);
  json j = base_record("pstar", a, opts);
  j["k"] = k;
  j["kind"] = nsclab::to_string(rec.kind);
  if (rec.kind == nsclab::PStarKind::Interior) {
    j["p_star"] = rec.p_star;
    j["lo"] = rec.lo;
    j["hi"] = rec.hi;
  }
  j["status_downgrade"] = rec.status_downgrade;
  maybe_add_ms(j, opts, t0);
  emit.record(j);
  return 0;
}

int cmd_curves(const CommonOpts& opts, const std::string& grid_text, int kmax,
               const nsclab::EstimatorConfig& est_cfg) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::NscContext ctx(a, opts.rank_tol);
  const auto grid = parse_p_grid(grid_text);

  if (kmax <= 0) kmax = std::max(1, ctx.spark().L);
  std::vector<int> ks;
  for (int k = 1; k <= kmax; ++k) ks.push_back(k);
  const nsclab::GammaTable table =
      nsclab::gamma_curves(ctx, grid, ks, est_cfg, opts.jobs);

  Emitter emit(opts);
  if (opts.format == "csv") {
    emit.line("p,k,gamma,status");
    for (size_t ki = 0; ki < table.ks.size(); ++ki) {
      for (size_t pi = 0; pi < table.ps.size(); ++pi) {
        const auto& cell = table.rows[ki][pi];
        const std::string gamma =
            std::isinf(cell.value) ? "inf" : std::to_string(cell.value);
        emit.line(std::to_string(table.ps[pi]) + "," +
                  std::to_string(table.ks[ki]) + "," + gamma + "," +
                  nsclab::to_string(cell.status));
      }
    }
    return 0;
  }
  for (size_t ki = 0; ki < table.ks.size(); ++ki) {
    for (size_t pi = 0; pi < table.ps.size(); ++pi) {
      const auto& cell = table.rows[ki][pi];
      json j = base_record("curves", a, opts);
      j["p"] = table.ps[pi];
      j["k"] = table.ks[ki];
      j["value"] = value_or_null(cell.value);
      j["status"] = nsclab::to_string(cell.status);
      maybe_add_ms(j, opts, t0);
      emit.record(j);
    }
  }
  return 0;
}

int cmd_recover(const CommonOpts& opts, int k, double p, int trials,
                double recover_tol) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  nsclab::ExperimentConfig config;
  config.recover_tol = recover_tol;
  const nsclab::ExperimentReport report =
      nsclab::recovery_experiment(a, k, p, trials, opts.seed, config);

  Emitter emit(opts);
  if (opts.format == "csv") {
    emit.line("trial,success,inf_error,objective,converged");
    for (size_t i = 0; i < report.outcomes.size(); ++i) {
      const auto& o = report.outcomes[i];
      emit.line(std::to_string(i) + "," + (o.success ? "1" : "0") + "," +
                std::to_string(o.inf_error) + "," + std::to_string(o.objective) +
                "," + (o.converged ? "1" : "0"));
    }
    return 0;
  }
  for (size_t i = 0; i < report.outcomes.size(); ++i) {
    const auto& o = report.outcomes[i];
    json j = base_record("recover", a, opts);
    j["p"] = p;
    j["k"] = k;
    j["trial"] = i;
    j["success"] = o.success;
    j["inf_error"] = o.inf_error;
    j["objective"] = o.objective;
    j["converged"] = o.converged;
    emit.record(j);
  }
  json summary = base_record("recover-summary", a, opts);
  summary["p"] = p;
  summary["k"] = k;
  summary["trials"] = report.trials;
  summary["successes"] = report.successes;
  summary["rate"] = report.rate;
  maybe_add_ms(summary, opts, t0);
  emit.record(summary);
  return 0;
}

int cmd_witness(const CommonOpts& opts, int k, double p,
                const nsclab::EstimatorConfig& est_cfg) {
  const auto t0 = Clock::now();
  const nsclab::SensingMatrix a = load_matrix(opts);
  const nsclab::NscContext ctx(a, opts.rank_tol);
  const nsclab::NscEstimate est =
      nsclab::nsc_estimate(ctx, nsclab::NscQuery{p, k, est_cfg.zero_tol}, est_cfg);
  if (!est.certificate)
    nsclab::raise(nsclab::ErrorCode::NotAWitness,
                  "no certificate available (status " +
                      std::string(nsclab::to_string(est.status)) + ")");
  const nsclab::WitnessResult wit = nsclab::failure_witness(a, *est.certificate, p);

  Emitter emit(opts);
  json j = base_record("witness", a, opts);
  j["p"] = p;
  j["k"] = k;
  j["theta"] = est.certificate->theta_value;
  j["x_star"] = std::vector<double>(wit.instance.x_true.data(),
                                    wit.instance.x_true.data() +
                                        wit.instance.x_true.size());
  j["x_alt"] =
      std::vector<double>(wit.x_alt.data(), wit.x_alt.data() + wit.x_alt.size());
  j["objective_star"] = wit.objective_star;
  j["objective_alt"] = wit.objective_alt;
  maybe_add_ms(j, opts, t0);
  emit.record(j);
  return 0;
}

int cmd_gen(const CommonOpts& opts, const std::string& path) {
  const nsclab::SensingMatrix a = load_matrix(opts);
  if (path.empty())
    nsclab::raise(nsclab::ErrorCode::InvalidArgument, "gen requires --out FILE");
  nsclab::write_matrix(a, path);
  json j;
  j["op"] = "gen";
  j["matrix_id"] = a.id();
  j["path"] = path;
  j["seed"] = opts.seed;
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, int trials,
               const std::string& config_path) {
  nsclab::SuiteConfig cfg;
  cfg.seed = opts.seed == 0 ? 1 : opts.seed;
  cfg.trials = trials;
  cfg.jobs = opts.jobs;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      nsclab::raise(nsclab::ErrorCode::InvalidArgument,
                    "cannot open --config file '" + config_path + "'");
    json j = json::parse(in);
    if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
  }

  const nsclab::VerificationReport report = nsclab::run_suite(suite, cfg);
  for (const auto& prop : report.properties) {
    std::cerr << (prop.pass ? "[pass] " : "[FAIL] ") << report.suite << ": "
              << prop.name << " (margin " << prop.margin << ")";
    if (!prop.detail.empty()) std::cerr << " -- " << prop.detail;
    std::cerr << "\n";
  }

  Emitter emit(opts);
  json j;
  j["op"] = "verify";
  j["suite"] = report.suite;
  j["trials"] = report.trials;
  j["pass"] = report.pass();
  json props = json::array();
  for (const auto& prop : report.properties) {
    props.push_back({{"name", prop.name},
                     {"pass", prop.pass},
                     {"margin", prop.margin},
                     {"detail", prop.detail}});
  }
  j["properties"] = props;
  j["statuses"] = {{"exact", report.exact_evals},
                   {"lower_bound", report.lower_bound_evals},
                   {"infinite", report.infinite_evals}};
  j["seed"] = cfg.seed;
  if (opts.timings) j["ms"] = report.wall_ms;
  emit.record(j);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"null space constant laboratory"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = default_seed();

  // Estimator knobs shared by the gamma-evaluating subcommands.
  nsclab::EstimatorConfig est_cfg;
  double p = 0.5;
  int k = 1;
  double margin = 1e-6;
  double tol_p = 1e-3;
  double recover_tol = 1e-5;
  int trials = 0;
  int max_cols = 24;
  int kmax = 0;
  bool with_certificate = true;
  std::string grid_text;
  std::string suite;
  std::string config_path;

  const auto add_estimator_flags = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", est_cfg.restarts, "multistart restarts");
    cmd->add_option("--grid-points", est_cfg.grid_points,
                    "angular grid density (nullity 2)");
    cmd->add_flag("--exhaustive", est_cfg.exhaustive_supports,
                  "exhaust all supports in the sampling estimator");
    cmd->add_flag("--force-general", est_cfg.force_general,
                  "skip exact routing (oracle cross-checks)");
    cmd->add_option("--zero-tol", est_cfg.zero_tol,
                    "relative nonzero threshold at p=0");
  };

  CLI::App* nsc = app.add_subcommand("nsc", "estimate gamma(l_p, A, k)");
  add_common(nsc, opts, true);
  add_estimator_flags(nsc);
  nsc->add_option("--p", p, "exponent in [0,1]")->required();
  nsc->add_option("--k", k, "sparsity level")->required();
  nsc->add_flag("!--no-certificate", with_certificate,
                "omit the certificate from the record");

  CLI::App* spark = app.add_subcommand("spark", "exact spark by enumeration");
  add_common(spark, opts, true);
  spark->add_option("--max-cols", max_cols, "enumeration size cap");

  CLI::App* stair = app.add_subcommand("staircase", "k_p* over a p grid");
  add_common(stair, opts, true);
  add_estimator_flags(stair);
  stair->add_option("--p-grid", grid_text, "LO:HI:STEPS (default 0:1:101)");
  stair->add_option("--margin", margin, "recoverability margin below 1");

  CLI::App* pstar = app.add_subcommand("pstar", "reconstruction exponent p_k*");
  add_common(pstar, opts, true);
  add_estimator_flags(pstar);
  pstar->add_option("--k", k, "sparsity level")->required();
  pstar->add_option("--tol", tol_p, "bisection bracket width");

  CLI::App* curves = app.add_subcommand("curves", "gamma over a (p, k) grid");
  add_common(curves, opts, true);
  add_estimator_flags(curves);
  curves->add_option("--p-grid", grid_text, "LO:HI:STEPS (default 0:1:101)");
  curves->add_option("--kmax", kmax, "largest k (default L)");

  CLI::App* recover = app.add_subcommand("recover", "planted recovery trials");
  add_common(recover, opts, true);
  recover->add_option("--k", k, "sparsity level")->required();
  recover->add_option("--p", p, "exponent in [0,1]")->required();
  recover->add_option("--trials", trials, "number of trials")->required();
  recover->add_option("--tol", recover_tol, "recovery tolerance (inf norm)");

  CLI::App* witness = app.add_subcommand(
      "witness", "failure witness from an nsc certificate with theta >= 1");
  add_common(witness, opts, true);
  add_estimator_flags(witness);
  witness->add_option("--p", p, "exponent in [0,1]")->required();
  witness->add_option("--k", k, "sparsity level")->required();

  CLI::App* gen = app.add_subcommand("gen", "write a generated matrix to a file");
  add_common(gen, opts, true);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, opts, false);
  verify->add_option("suite", suite, "thm1|thm2|thm3|counterexample|recovery|remark3")
      ->required();
  verify->add_option("--trials", trials, "override the pinned trial count");
  verify->add_option("--config", config_path, "JSON file with {trials, seed, jobs}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  est_cfg.seed = opts.seed;
  est_cfg.rank_tol = opts.rank_tol;

  try {
    if (nsc->parsed()) return cmd_nsc(opts, p, k, est_cfg, with_certificate);
    if (spark->parsed()) return cmd_spark(opts, max_cols);
    if (stair->parsed()) return cmd_staircase(opts, grid_text, margin, est_cfg);
    if (pstar->parsed()) return cmd_pstar(opts, k, tol_p, est_cfg);
    if (curves->parsed()) return cmd_curves(opts, grid_text, kmax, est_cfg);
    if (recover->parsed()) return cmd_recover(opts, k, p, trials, recover_tol);
    if (witness->parsed()) return cmd_witness(opts, k, p, est_cfg);
    if (gen->parsed()) return cmd_gen(opts, opts.out_path);
    if (verify->parsed()) return cmd_verify(opts, suite, trials, config_path);
  } catch (const nsclab::Error& e) {
    std::cerr << "error (" << nsclab::to_string(e.code()) << "): " << e.what()
              << "\n";
    switch (e.code()) {
      case nsclab::ErrorCode::InvalidArgument:
      case nsclab::ErrorCode::ParseError:
      case nsclab::ErrorCode::DimensionMismatch:
      case nsclab::ErrorCode::TooLarge:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
