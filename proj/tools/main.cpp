// bandsel: kernel trend estimation and bandwidth selection on an equispaced
// design, plus the seeded simulation study around it.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bandsel/arch.hpp"
#include "bandsel/asymptotics.hpp"
#include "bandsel/criteria.hpp"
#include "bandsel/io.hpp"
#include "bandsel/kernel.hpp"
#include "bandsel/montecarlo.hpp"
#include "bandsel/smoother.hpp"
#include "bandsel/trend.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace bandsel;

namespace {

std::string default_outdir() {
  const char* env = std::getenv("BANDSEL_OUTDIR");
  return (env != nullptr && *env != '\0') ? env : ".";
}

std::string alpha_tag(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

void ensure_parent_dir(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

struct GridOpts {
  std::string mode = "auto";  // auto: n-dependent range; wide: fixed [0.019, 1.30]
  double lo = 0.0, hi = 0.0;  // explicit range, overrides the preset
  std::size_t points = 200;
};

void add_grid_flags(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--grid", g.mode, "Grid preset: auto (range scales with n) or wide (fixed 0.019..1.30, clamped)")
      ->check(CLI::IsMember({"auto", "wide"}))
      ->capture_default_str();
  cmd->add_option("--grid-lo", g.lo, "Explicit grid lower endpoint (use with --grid-hi)");
  cmd->add_option("--grid-hi", g.hi, "Explicit grid upper endpoint (use with --grid-lo)");
  cmd->add_option("--grid-points", g.points, "Number of grid points")->capture_default_str();
}

json grid_json(const GridOpts& g) {
  return json{{"mode", g.mode}, {"lo", g.lo}, {"hi", g.hi}, {"points", g.points}};
}

BandwidthGrid resolve_grid(const GridOpts& g, std::size_t n, const KernelSpec& kernel,
                           const TrendSpec& trend, const WeightSpec& weight, double sigma2) {
  if (g.lo > 0.0 || g.hi > 0.0) {
    if (!(g.lo > 0.0 && g.hi > 0.0))
      throw std::invalid_argument("set both --grid-lo and --grid-hi or neither");
    return geometric_grid(g.lo, g.hi, g.points);
  }
  if (g.mode == "wide") return wide_grid(kernel, g.points);
  const KernelMoments moments = kernel_moments(kernel);
  const OptimalBandwidth opt = optimal_bandwidth(trend, weight, moments, sigma2, 0.0, n);
  return default_grid(n, opt.c, kernel, g.points);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- moments --

struct MomentsOpts {
  std::string kernel = "biweight";
  bool print_config = false;
};

int run_moments(const MomentsOpts& o) {
  if (o.print_config) {
    print_json({{"subcommand", "moments"}, {"kernel", o.kernel}});
    return 0;
  }
  const KernelSpec kernel = kernel_by_name(o.kernel);
  const KernelMoments m = kernel_moments(kernel);
  print_json({{"kernel", kernel.name},
              {"half_width", kernel.half_width},
              {"second_moment", m.second_moment},
              {"k_sq", m.k_sq},
              {"kg_sq", m.kg_sq},
              {"k_zero", m.k_zero}});
  return 0;
}

// ----------------------------------------------------------------- smooth --

struct SmoothOpts {
  std::string input;
  double h = 0.0;
  std::string kernel = "biweight";
  bool periodic = true;
  bool direct = false;
  std::string outdir = default_outdir();
  std::string output;
  bool print_config = false;
};

int run_smooth(const SmoothOpts& o) {
  const std::string output = o.output.empty() ? o.outdir + "/fit.csv" : o.output;
  if (o.print_config) {
    print_json({{"subcommand", "smooth"},
                {"input", o.input},
                {"h", o.h},
                {"kernel", o.kernel},
                {"periodic", o.periodic},
                {"direct", o.direct},
                {"outdir", o.outdir},
                {"output", output}});
    return 0;
  }
  const std::vector<double> y = read_value_column(o.input);
  const SmootherPlan plan = make_smoother_plan(y.size(), o.h, kernel_by_name(o.kernel), o.periodic);
  const std::vector<double> fit = o.direct ? smooth_direct(plan, y) : smooth(plan, y);
  ensure_parent_dir(output);
  write_indexed_csv(output, fit);
  print_json({{"n", y.size()},
              {"h", o.h},
              {"kernel", o.kernel},
              {"periodic", o.periodic},
              {"method", (o.direct || !o.periodic) ? "direct" : "fft"},
              {"output", output}});
  return 0;
}

// ----------------------------------------------------------------- select --

struct SelectOpts {
  std::string criterion = "cl";  // ase | mase | cl | cp | dn
  std::string input;             // y values (ase, cl, cp)
  std::string truth;             // true trend values (ase; defaults to --trend on the design)
  std::size_t n = 0;             // needed when no --input is given
  std::string kernel = "biweight";
  std::string trend = "benchmark";
  std::string weight = "uniform";
  double sigma = 0.32;
  bool periodic = true;
  GridOpts grid;
  std::string outdir = default_outdir();
  std::string output;
  bool print_config = false;
};

int run_select(const SelectOpts& o) {
  const std::string output = o.output.empty() ? o.outdir + "/curve.csv" : o.output;
  if (o.print_config) {
    print_json({{"subcommand", "select"},
                {"criterion", o.criterion},
                {"input", o.input},
                {"truth", o.truth},
                {"n", o.n},
                {"kernel", o.kernel},
                {"trend", o.trend},
                {"weight", o.weight},
                {"sigma", o.sigma},
                {"periodic", o.periodic},
                {"grid", grid_json(o.grid)},
                {"outdir", o.outdir},
                {"output", output}});
    return 0;
  }
  const bool needs_data = o.criterion == "ase" || o.criterion == "cl" || o.criterion == "cp";
  if (needs_data && o.input.empty())
    throw std::invalid_argument("select: criterion '" + o.criterion + "' needs --input");
  if (!(o.sigma > 0.0)) throw std::invalid_argument("select: sigma must be positive");

  std::vector<double> y;
  std::size_t n = o.n;
  if (!o.input.empty()) {
    y = read_value_column(o.input);
    if (n != 0 && n != y.size())
      throw std::invalid_argument("select: --n disagrees with the input length");
    n = y.size();
  }
  if (n == 0) throw std::invalid_argument("select: need --input or --n");

  const KernelSpec kernel = kernel_by_name(o.kernel);
  const TrendSpec trend = trend_by_name(o.trend);
  const WeightSpec weight = weight_by_name(o.weight);
  if (!o.periodic && weight.is_uniform)
    throw std::invalid_argument(
        "select: non-periodic smoothing needs a weight that vanishes at the boundary "
        "(use --weight bump)");
  const double sigma2 = o.sigma * o.sigma;
  const Design design = make_design(n);
  const std::vector<double> u = weight_values(weight, design);
  const KernelMoments moments = kernel_moments(kernel);
  const BandwidthGrid grid = resolve_grid(o.grid, n, kernel, trend, weight, sigma2);

  std::vector<double> truth;
  if (o.criterion == "ase") {
    truth = o.truth.empty() ? trend_values(trend, design) : read_value_column(o.truth);
    if (truth.size() != n) throw std::invalid_argument("select: truth length must match n");
  }

  CriterionCurve curve;
  curve.grid = grid;
  curve.criterion = o.criterion;
  if (o.criterion == "dn") {
    curve = asymptotic_mase_curve(trend, weight, moments, sigma2, 0.0, n, grid);
    curve.criterion = o.criterion;
  } else {
    curve.values.reserve(grid.values.size());
    for (double h : grid.values) {
      const SmootherPlan plan = make_smoother_plan(n, h, kernel, o.periodic);
      if (o.criterion == "ase") {
        curve.values.push_back(ase_from_fit(smooth(plan, y), truth, u));
      } else if (o.criterion == "mase") {
        curve.values.push_back(mase_exact(plan, trend, weight, sigma2));
      } else if (o.criterion == "cl") {
        curve.values.push_back(mallows_cl(y, plan, weight, sigma2));
      } else if (o.criterion == "cp") {
        curve.values.push_back(mallows_cp(y, plan, weight));
      } else {
        throw std::invalid_argument("select: unknown criterion " + o.criterion);
      }
    }
  }

  const SelectionResult best = select_minimum(curve);
  ensure_parent_dir(output);
  write_columns_csv(output, {"h", "value"}, {&grid.values, &curve.values});
  print_json({{"criterion", o.criterion},
              {"h_star", best.h},
              {"index", best.index},
              {"value", best.value},
              {"n", n},
              {"grid_clamped", grid.clamped},
              {"output", output}});
  return 0;
}

// ----------------------------------------------------------------- theory --

struct TheoryOpts {
  std::size_t n = 512;
  double alpha = 0.0;
  double sigma = 0.32;
  std::string kernel = "biweight";
  std::string trend = "benchmark";
  std::string weight = "uniform";
  bool print_config = false;
};

int run_theory(const TheoryOpts& o) {
  if (o.print_config) {
    print_json({{"subcommand", "theory"},
                {"n", o.n},
                {"alpha", o.alpha},
                {"sigma", o.sigma},
                {"kernel", o.kernel},
                {"trend", o.trend},
                {"weight", o.weight}});
    return 0;
  }
  if (!(o.alpha >= 0.0 && o.alpha < 1.0))
    throw std::invalid_argument("theory: alpha must lie in [0,1)");
  if (!(o.sigma > 0.0)) throw std::invalid_argument("theory: sigma must be positive");
  const KernelSpec kernel = kernel_by_name(o.kernel);
  const TrendSpec trend = trend_by_name(o.trend);
  const WeightSpec weight = weight_by_name(o.weight);
  const KernelMoments moments = kernel_moments(kernel);
  const double sigma2 = o.sigma * o.sigma;
  const AsymptoticInputs in = make_asymptotic_inputs(trend, weight, moments, sigma2, 0.0);
  // The noise enters the MDS-limit formulas only through sigma2, so alpha is
  // echoed for provenance, not used.
  print_json({{"n", o.n},
              {"alpha", o.alpha},
              {"sigma", o.sigma},
              {"kernel", kernel.name},
              {"trend", o.trend},
              {"weight", o.weight},
              {"a_const", in.a_const},
              {"b_const", in.b_const},
              {"c", in.c},
              {"h_star", in.c * std::pow(static_cast<double>(o.n), -0.2)},
              {"gap_variance", bandwidth_gap_variance(in)},
              {"gap_sd", bandwidth_gap_sd(in, o.n)},
              {"clt_variance", clt_variance(in)}});
  return 0;
}

// --------------------------------------------------------------- simulate --

struct SimulateOpts {
  std::size_t n = 512;
  double alpha = 0.01;
  double sigma = 0.32;
  std::uint64_t seed = 42;
  std::string outdir = default_outdir();
  std::string output;
  bool print_config = false;
};

int run_simulate(const SimulateOpts& o) {
  const std::string output = o.output.empty() ? o.outdir + "/noise.csv" : o.output;
  if (o.print_config) {
    print_json({{"subcommand", "simulate"},
                {"n", o.n},
                {"alpha", o.alpha},
                {"sigma", o.sigma},
                {"seed", o.seed},
                {"outdir", o.outdir},
                {"output", output}});
    return 0;
  }
  if (!(o.sigma > 0.0)) throw std::invalid_argument("simulate: sigma must be positive");
  const NoisePath path = simulate_arch(ArchParams{o.alpha, o.sigma * o.sigma}, o.n, o.seed);
  ensure_parent_dir(output);
  write_indexed_csv(output, path.values);
  long double mean = 0.0L;
  for (double v : path.values) mean += v;
  mean /= static_cast<long double>(o.n);
  long double var = 0.0L;
  for (double v : path.values) {
    const long double d = v - mean;
    var += d * d;
  }
  if (o.n > 1) var /= static_cast<long double>(o.n - 1);
  print_json({{"n", o.n},
              {"alpha", o.alpha},
              {"sigma", o.sigma},
              {"seed", o.seed},
              {"output", output},
              {"sample_mean", static_cast<double>(mean)},
              {"sample_variance", static_cast<double>(var)}});
  return 0;
}

// ------------------------------------------------------------------ study --

struct StudyOpts {
  StudyConfig cfg;
  GridOpts grid;
  bool direct = false;
  std::string outdir = default_outdir();
  bool print_config = false;
};

json study_config_json(const StudyOpts& o) {
  StudyConfig cfg = o.cfg;
  if (cfg.threads == 0) {
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  }
  return json{{"subcommand", "study"},
              {"n", cfg.n},
              {"alphas", cfg.alphas},
              {"sigma", cfg.sigma},
              {"replicates", cfg.replicates},
              {"seed", cfg.base_seed},
              {"kernel", cfg.kernel},
              {"trend", cfg.trend},
              {"weight", cfg.weight},
              {"periodic", cfg.periodic},
              {"use_fft", !o.direct},
              {"threads", cfg.threads},
              {"grid", grid_json(o.grid)},
              {"outdir", o.outdir}};
}

int run_study_cmd(const StudyOpts& o) {
  if (o.print_config) {
    print_json(study_config_json(o));
    return 0;
  }
  StudyConfig cfg = o.cfg;
  cfg.use_fft = !o.direct;
  cfg.grid_points = o.grid.points;
  if (o.grid.lo > 0.0 || o.grid.hi > 0.0) {
    if (!(o.grid.lo > 0.0 && o.grid.hi > 0.0))
      throw std::invalid_argument("set both --grid-lo and --grid-hi or neither");
    cfg.grid_lo = o.grid.lo;
    cfg.grid_hi = o.grid.hi;
  } else if (o.grid.mode == "wide") {
    cfg.wide_grid = true;
  }

  const StudySummary summary = run_study(cfg);
  fs::create_directories(o.outdir);

  json out;
  out["config"] = study_config_json(o);
  out["config"].erase("subcommand");
  // Execution details (where the files land, how many workers) do not change
  // the numbers, so summary.json omits them and stays byte-comparable.
  out["config"].erase("outdir");
  out["config"].erase("threads");
  out["grid"] = summary.grid.values;
  out["grid_clamped"] = summary.grid.clamped;
  out["has_theory"] = summary.has_theory;
  if (summary.has_theory) {
    out["h_star"] = summary.h_star;
    out["theory"] = {{"a_const", summary.inputs.a_const},
                     {"b_const", summary.inputs.b_const},
                     {"c", summary.inputs.c},
                     {"gap_variance", bandwidth_gap_variance(summary.inputs)},
                     {"gap_sd", bandwidth_gap_sd(summary.inputs, cfg.n)}};
  }
  out["per_alpha"] = json::array();

  for (const AlphaSummary& cell : summary.per_alpha) {
    const std::string tag = alpha_tag(cell.alpha);

    const std::string gaps_name = "gaps_" + tag + ".csv";
    const std::string emase_name = "emase_" + tag + ".csv";
    const std::string gaps_path = o.outdir + "/" + gaps_name;
    std::ofstream gaps(gaps_path);
    if (!gaps) throw std::runtime_error("cannot write " + gaps_path);
    gaps << "index,seed,h_ase,h_cl,gap\n";
    for (std::size_t i = 0; i < cell.records.size(); ++i) {
      const ReplicateRecord& rec = cell.records[i];
      gaps << i << ',' << rec.seed << ',' << format17(rec.h_ase) << ',' << format17(rec.h_cl)
           << ',' << format17(rec.gap) << '\n';
    }
    if (!gaps) throw std::runtime_error("short write to " + gaps_path);

    const std::string emase_path = o.outdir + "/" + emase_name;
    write_columns_csv(emase_path, {"h", "emase", "mase_exact", "asymptotic_mase"},
                      {&summary.grid.values, &cell.emase, &summary.mase_curve,
                       &summary.asymptotic_curve});

    out["per_alpha"].push_back({{"alpha", cell.alpha},
                                {"replicates", cell.records.size()},
                                {"mean_ratio", cell.mean_ratio},
                                {"median_ratio", cell.median_ratio},
                                {"mean_h_ase", cell.mean_h_ase},
                                {"mean_h_cl", cell.mean_h_cl},
                                {"mean_gap", cell.mean_gap},
                                {"sd_gap", cell.sd_gap},
                                {"gap_sd_theory", cell.gap_sd_theory},
                                {"ks_standardized_gaps", cell.ks_standardized_gaps},
                                {"gaps_csv", gaps_name},
                                {"emase_csv", emase_name}});

    std::printf("alpha=%s replicates=%zu mean_ratio=%.6g median_ratio=%.6g mean_gap=%.6g "
                "sd_gap=%.6g ks=%.6g\n",
                tag.c_str(), cell.records.size(), cell.mean_ratio, cell.median_ratio,
                cell.mean_gap, cell.sd_gap, cell.ks_standardized_gaps);
  }

  const std::string summary_path = o.outdir + "/summary.json";
  std::ofstream js(summary_path);
  if (!js) throw std::runtime_error("cannot write " + summary_path);
  js << out.dump(2) << "\n";
  if (!js) throw std::runtime_error("short write to " + summary_path);
  std::printf("wrote %s\n", summary_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel trend estimation and bandwidth selection on an equispaced design"};
  app.require_subcommand(1);
  // -h is not a help shortcut here: the smoother's bandwidth flag is --h.
  app.set_help_flag("--help", "Print help");

  MomentsOpts mo;
  CLI::App* moments = app.add_subcommand("moments", "Print kernel moments as JSON");
  moments->set_help_flag("--help", "Print help");
  moments->add_option("--kernel", mo.kernel, "Kernel name")->capture_default_str();
  moments->add_flag("--print-config", mo.print_config, "Echo the resolved configuration and exit");

  SmoothOpts so;
  CLI::App* smoothc = app.add_subcommand("smooth", "Smooth a CSV series at one bandwidth");
  smoothc->set_help_flag("--help", "Print help");
  smoothc->add_option("--input", so.input, "CSV with the series (plain or index,value)")
      ->required();
  smoothc->add_option("--h", so.h, "Bandwidth (fraction of the unit interval)")->required();
  smoothc->add_option("--kernel", so.kernel, "Kernel name")->capture_default_str();
  smoothc->add_flag("--periodic,!--no-periodic", so.periodic,
                    "Wrap the design circularly (default on)");
  smoothc->add_flag("--direct", so.direct, "Evaluate sums directly instead of the FFT path");
  smoothc->add_option("--outdir", so.outdir, "Output directory (default $BANDSEL_OUTDIR or .)");
  smoothc->add_option("--output", so.output, "Output CSV path (default <outdir>/fit.csv)");
  smoothc->add_flag("--print-config", so.print_config, "Echo the resolved configuration and exit");

  SelectOpts eo;
  CLI::App* selectc = app.add_subcommand("select", "Minimize a criterion over a bandwidth grid");
  selectc->set_help_flag("--help", "Print help");
  selectc->add_option("--criterion", eo.criterion, "ase, mase, cl, cp, or dn")
      ->check(CLI::IsMember({"ase", "mase", "cl", "cp", "dn"}))
      ->capture_default_str();
  selectc->add_option("--input", eo.input, "CSV with the observed series (ase, cl, cp)");
  selectc->add_option("--truth", eo.truth,
                      "CSV with the true trend values (ase; default: --trend on the design)");
  selectc->add_option("--n", eo.n, "Design size when no --input is given");
  selectc->add_option("--kernel", eo.kernel, "Kernel name")->capture_default_str();
  selectc->add_option("--trend", eo.trend, "Trend name (mase, dn, default ase truth)")
      ->capture_default_str();
  selectc->add_option("--weight", eo.weight, "Weight name (uniform or bump)")
      ->capture_default_str();
  selectc->add_option("--sigma", eo.sigma, "Noise standard deviation (cl, mase, dn)")
      ->capture_default_str();
  selectc->add_flag("--periodic,!--no-periodic", eo.periodic,
                    "Wrap the design circularly (default on)");
  add_grid_flags(selectc, eo.grid);
  selectc->add_option("--outdir", eo.outdir, "Output directory (default $BANDSEL_OUTDIR or .)");
  selectc->add_option("--output", eo.output, "Curve CSV path (default <outdir>/curve.csv)");
  selectc->add_flag("--print-config", eo.print_config, "Echo the resolved configuration and exit");

  TheoryOpts to;
  CLI::App* theoryc = app.add_subcommand("theory", "Print closed-form limit quantities as JSON");
  theoryc->set_help_flag("--help", "Print help");
  theoryc->add_option("--n", to.n, "Design size for h_star and gap_sd")->capture_default_str();
  theoryc->add_option("--alpha", to.alpha, "Volatility parameter (echoed; limits depend on sigma only)")
      ->capture_default_str();
  theoryc->add_option("--sigma", to.sigma, "Noise standard deviation")->capture_default_str();
  theoryc->add_option("--kernel", to.kernel, "Kernel name")->capture_default_str();
  theoryc->add_option("--trend", to.trend, "Trend name")->capture_default_str();
  theoryc->add_option("--weight", to.weight, "Weight name")->capture_default_str();
  theoryc->add_flag("--print-config", to.print_config, "Echo the resolved configuration and exit");

  SimulateOpts io;
  CLI::App* simulatec = app.add_subcommand("simulate", "Write one simulated noise path as CSV");
  simulatec->set_help_flag("--help", "Print help");
  simulatec->add_option("--n", io.n, "Path length")->capture_default_str();
  simulatec->add_option("--alpha", io.alpha, "Volatility parameter in [0,1)")
      ->capture_default_str();
  simulatec->add_option("--sigma", io.sigma, "Stationary standard deviation")
      ->capture_default_str();
  simulatec->add_option("--seed", io.seed, "RNG seed")->capture_default_str();
  simulatec->add_option("--outdir", io.outdir, "Output directory (default $BANDSEL_OUTDIR or .)");
  simulatec->add_option("--output", io.output, "Output CSV path (default <outdir>/noise.csv)");
  simulatec->add_flag("--print-config", io.print_config,
                      "Echo the resolved configuration and exit");

  StudyOpts yo;
  CLI::App* studyc = app.add_subcommand("study", "Run the seeded replication study");
  studyc->set_help_flag("--help", "Print help");
  studyc->add_option("--n", yo.cfg.n, "Design size")->capture_default_str();
  studyc->add_option("--alphas", yo.cfg.alphas, "Volatility parameters (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  studyc->add_option("--sigma", yo.cfg.sigma, "Stationary standard deviation")
      ->capture_default_str();
  studyc->add_option("--replicates", yo.cfg.replicates, "Replicates per alpha")
      ->capture_default_str();
  studyc->add_option("--seed", yo.cfg.base_seed, "Base seed")->capture_default_str();
  studyc->add_option("--kernel", yo.cfg.kernel, "Kernel name")->capture_default_str();
  studyc->add_option("--trend", yo.cfg.trend, "Trend name")->capture_default_str();
  studyc->add_option("--weight", yo.cfg.weight, "Weight name")->capture_default_str();
  studyc->add_flag("--periodic,!--no-periodic", yo.cfg.periodic,
                   "Wrap the design circularly (default on)");
  studyc->add_flag("--direct", yo.direct, "Evaluate sums directly instead of the FFT path");
  studyc->add_option("--threads", yo.cfg.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_grid_flags(studyc, yo.grid);
  studyc->add_option("--outdir", yo.outdir, "Output directory (default $BANDSEL_OUTDIR or .)");
  studyc->add_flag("--print-config", yo.print_config, "Echo the resolved configuration and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (moments->parsed()) return run_moments(mo);
    if (smoothc->parsed()) return run_smooth(so);
    if (selectc->parsed()) return run_select(eo);
    if (theoryc->parsed()) return run_theory(to);
    if (simulatec->parsed()) return run_simulate(io);
    if (studyc->parsed()) return run_study_cmd(yo);
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "validation"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
