#include "bandsel/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bandsel/arch.hpp"
#include "bandsel/rng.hpp"

namespace bandsel {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Everything shared by the replicates of one study; built once.
struct StudyContext {
  StudyConfig cfg;
  double sigma2 = 0.0;
  Design design;
  KernelSpec kernel;
  TrendSpec trend;
  WeightSpec weight;
  std::vector<double> r_true, u;
  BandwidthGrid grid;
  std::vector<SmootherPlan> plans;
  std::vector<double> cl_penalty;  // 2 sigma2 tr(UL)/n per plan
  bool fft_path = false;
  bool has_theory = false;
  AsymptoticInputs inputs{};
  double h_star = 0.0;
  std::vector<double> mase_curve, asymptotic_curve;
};

struct RepOut {
  std::uint64_t seed = 0;
  double h_ase = 0.0, h_cl = 0.0;
  std::vector<double> ase_curve, clc_curve;
};

struct Buffers {
  std::vector<double> y, fit;
  std::vector<std::complex<double>> yspec, scratch;
};

StudyContext build_context(const StudyConfig& raw) {
  validate(raw);
  StudyContext ctx;
  ctx.cfg = raw;
  if (ctx.cfg.threads == 0)
    ctx.cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  ctx.sigma2 = raw.sigma * raw.sigma;
  ctx.design = make_design(raw.n);
  ctx.kernel = kernel_by_name(raw.kernel);
  ctx.trend = trend_by_name(raw.trend);
  ctx.weight = weight_by_name(raw.weight);
  ctx.r_true = trend_values(ctx.trend, ctx.design);
  ctx.u = weight_values(ctx.weight, ctx.design);
  const KernelMoments moments = kernel_moments(ctx.kernel);

  try {
    ctx.inputs = make_asymptotic_inputs(ctx.trend, ctx.weight, moments, ctx.sigma2, 0.0);
    ctx.has_theory = true;
    ctx.h_star = ctx.inputs.c * std::pow(static_cast<double>(raw.n), -0.2);
  } catch (const std::invalid_argument&) {
    ctx.has_theory = false;  // flat or linear trend: no interior optimum
  }

  if (raw.grid_lo > 0.0 || raw.grid_hi > 0.0) {
    ctx.grid = geometric_grid(raw.grid_lo, raw.grid_hi, raw.grid_points);
  } else if (raw.wide_grid) {
    ctx.grid = wide_grid(ctx.kernel, raw.grid_points);
  } else {
    if (!ctx.has_theory)
      throw std::invalid_argument(
          "run_study: automatic grid needs a curved trend; set grid_lo/grid_hi explicitly");
    ctx.grid = default_grid(raw.n, ctx.inputs.c, ctx.kernel, raw.grid_points);
  }

  ctx.fft_path = raw.periodic && raw.use_fft;
  const std::size_t npts = ctx.grid.values.size();
  ctx.plans.reserve(npts);
  ctx.cl_penalty.resize(npts);
  ctx.mase_curve.resize(npts);
  for (std::size_t k = 0; k < npts; ++k) {
    ctx.plans.push_back(make_smoother_plan(raw.n, ctx.grid.values[k], ctx.kernel, raw.periodic));
    ctx.cl_penalty[k] =
        2.0 * ctx.sigma2 * trace_ul(ctx.plans[k], ctx.u) / static_cast<double>(raw.n);
  }

  // Exact MASE over the grid, reusing one forward transform of the trend.
  if (ctx.fft_path) {
    const auto rspec = ctx.plans.front().fft->forward(ctx.r_true);
    std::vector<std::complex<double>> scratch(ctx.plans.front().fft->spectrum_size());
    std::vector<double> fit(raw.n);
    for (std::size_t k = 0; k < npts; ++k) {
      smooth_from_spectrum(ctx.plans[k], rspec.data(), scratch.data(), fit.data());
      ctx.mase_curve[k] = mase_exact_from_fit(fit, ctx.r_true, ctx.u, ctx.plans[k], ctx.sigma2);
    }
  } else {
    for (std::size_t k = 0; k < npts; ++k) {
      const std::vector<double> fit = smooth_direct(ctx.plans[k], ctx.r_true);
      ctx.mase_curve[k] = mase_exact_from_fit(fit, ctx.r_true, ctx.u, ctx.plans[k], ctx.sigma2);
    }
  }

  if (ctx.has_theory) {
    ctx.asymptotic_curve =
        asymptotic_mase_curve(ctx.trend, ctx.weight, moments, ctx.sigma2, 0.0, raw.n, ctx.grid)
            .values;
  } else {
    ctx.asymptotic_curve.assign(npts, std::numeric_limits<double>::quiet_NaN());
  }
  return ctx;
}

RepOut replicate_core(const StudyContext& ctx, std::size_t alpha_idx, std::size_t rep_idx,
                      Buffers& buf) {
  const std::size_t n = ctx.cfg.n;
  const std::size_t npts = ctx.grid.values.size();
  RepOut out;
  out.seed = derive_seed(ctx.cfg.base_seed, alpha_idx, rep_idx);
  const NoisePath path =
      simulate_arch(ArchParams{ctx.cfg.alphas[alpha_idx], ctx.sigma2}, n, out.seed);

  buf.y.resize(n);
  buf.fit.resize(n);
  double noise_ms = 0.0;  // (1/n) sum u eps^2, the criterion-free part of CL
  for (std::size_t i = 0; i < n; ++i) {
    buf.y[i] = ctx.r_true[i] + path.values[i];
    noise_ms += ctx.u[i] * path.values[i] * path.values[i];
  }
  noise_ms /= static_cast<double>(n);

  if (ctx.fft_path) {
    const auto& engine = *ctx.plans.front().fft;
    buf.yspec.resize(engine.spectrum_size());
    buf.scratch.resize(engine.spectrum_size());
    engine.forward(buf.y.data(), buf.yspec.data());
  }

  out.ase_curve.resize(npts);
  out.clc_curve.resize(npts);
  std::size_t best_ase = 0, best_cl = 0;
  for (std::size_t k = 0; k < npts; ++k) {
    if (ctx.fft_path) {
      smooth_from_spectrum(ctx.plans[k], buf.yspec.data(), buf.scratch.data(), buf.fit.data());
    } else {
      buf.fit = smooth_direct(ctx.plans[k], buf.y);
    }
    double ase_acc = 0.0, rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double db = buf.fit[i] - ctx.r_true[i];
      const double de = buf.y[i] - buf.fit[i];
      ase_acc += ctx.u[i] * db * db;
      rss += ctx.u[i] * de * de;
    }
    out.ase_curve[k] = ase_acc / static_cast<double>(n);
    const double cl = rss / static_cast<double>(n) + ctx.cl_penalty[k];
    out.clc_curve[k] = cl - noise_ms;
    if (out.ase_curve[k] < out.ase_curve[best_ase]) best_ase = k;
    if (out.clc_curve[k] < out.clc_curve[best_cl]) best_cl = k;
  }
  out.h_ase = ctx.grid.values[best_ase];
  out.h_cl = ctx.grid.values[best_cl];
  return out;
}

}  // namespace

void validate(const StudyConfig& cfg) {
  if (cfg.n < 4) throw std::invalid_argument("study config: need n >= 4");
  if (cfg.replicates < 1) throw std::invalid_argument("study config: need replicates >= 1");
  if (!(cfg.sigma > 0.0)) throw std::invalid_argument("study config: sigma must be positive");
  if (cfg.alphas.empty()) throw std::invalid_argument("study config: alphas must be nonempty");
  for (double a : cfg.alphas)
    if (!(a >= 0.0 && a < 1.0))
      throw std::invalid_argument("study config: every alpha must lie in [0,1)");
  if (cfg.grid_points < 1) throw std::invalid_argument("study config: grid_points must be >= 1");
  if ((cfg.grid_lo > 0.0) != (cfg.grid_hi > 0.0))
    throw std::invalid_argument("study config: set both grid_lo and grid_hi or neither");
  kernel_by_name(cfg.kernel);
  trend_by_name(cfg.trend);
  const WeightSpec w = weight_by_name(cfg.weight);
  if (!cfg.periodic && w.is_uniform)
    throw std::invalid_argument(
        "study config: non-periodic smoothing needs a weight that vanishes at the boundary "
        "(use weight=bump)");
}

ReplicateRecord run_replicate(const StudyConfig& cfg, double alpha, std::size_t index) {
  const auto it = std::find(cfg.alphas.begin(), cfg.alphas.end(), alpha);
  if (it == cfg.alphas.end())
    throw std::invalid_argument("run_replicate: alpha must be one of cfg.alphas");
  const std::size_t alpha_idx = static_cast<std::size_t>(it - cfg.alphas.begin());
  const StudyContext ctx = build_context(cfg);
  Buffers buf;
  RepOut o = replicate_core(ctx, alpha_idx, index, buf);
  ReplicateRecord rec;
  rec.seed = o.seed;
  rec.h_ase = o.h_ase;
  rec.h_cl = o.h_cl;
  rec.gap = o.h_cl - o.h_ase;
  if (cfg.store_curves) {
    rec.ase_curve = std::move(o.ase_curve);
    rec.cl_centered_curve = std::move(o.clc_curve);
  }
  return rec;
}

StudySummary run_study(const StudyConfig& cfg) {
  const StudyContext ctx = build_context(cfg);
  const std::size_t npts = ctx.grid.values.size();
  const std::size_t reps = ctx.cfg.replicates;
  const std::size_t workers = std::min(ctx.cfg.threads, reps);

  StudySummary summary;
  summary.config = ctx.cfg;
  summary.grid = ctx.grid;
  summary.has_theory = ctx.has_theory;
  summary.inputs = ctx.inputs;
  summary.h_star = ctx.h_star;
  summary.mase_curve = ctx.mase_curve;
  summary.asymptotic_curve = ctx.asymptotic_curve;
  summary.per_alpha.reserve(ctx.cfg.alphas.size());

  for (std::size_t ai = 0; ai < ctx.cfg.alphas.size(); ++ai) {
    AlphaSummary alpha_summary;
    alpha_summary.alpha = ctx.cfg.alphas[ai];
    alpha_summary.records.reserve(reps);

    // Welford accumulators per grid point (long double: the fold is long and
    // the means feed 4-standard-error comparisons).
    std::vector<long double> ase_mean(npts, 0.0L), ase_m2(npts, 0.0L);
    std::vector<long double> clc_mean(npts, 0.0L), clc_m2(npts, 0.0L);
    std::vector<double> gaps, ratios;
    gaps.reserve(reps);
    ratios.reserve(reps);
    long double sum_h_ase = 0.0L, sum_h_cl = 0.0L;
    std::size_t count = 0;

    auto fold = [&](RepOut&& o) {
      ++count;
      for (std::size_t k = 0; k < npts; ++k) {
        const long double d1 = o.ase_curve[k] - ase_mean[k];
        ase_mean[k] += d1 / static_cast<long double>(count);
        ase_m2[k] += d1 * (o.ase_curve[k] - ase_mean[k]);
        const long double d2 = o.clc_curve[k] - clc_mean[k];
        clc_mean[k] += d2 / static_cast<long double>(count);
        clc_m2[k] += d2 * (o.clc_curve[k] - clc_mean[k]);
      }
      gaps.push_back(o.h_cl - o.h_ase);
      ratios.push_back(o.h_cl / o.h_ase);
      sum_h_ase += o.h_ase;
      sum_h_cl += o.h_cl;
      ReplicateRecord rec;
      rec.seed = o.seed;
      rec.h_ase = o.h_ase;
      rec.h_cl = o.h_cl;
      rec.gap = o.h_cl - o.h_ase;
      if (ctx.cfg.store_curves) {
        rec.ase_curve = std::move(o.ase_curve);
        rec.cl_centered_curve = std::move(o.clc_curve);
      }
      alpha_summary.records.push_back(std::move(rec));
    };

    // Failures must identify the cell: report (alpha, index) with the cause.
    auto run_one = [&](std::size_t r, Buffers& buf) {
      try {
        return replicate_core(ctx, ai, r, buf);
      } catch (const std::exception& e) {
        throw std::runtime_error("replicate failed (alpha=" +
                                 std::to_string(ctx.cfg.alphas[ai]) +
                                 ", index=" + std::to_string(r) + "): " + e.what());
      }
    };

    if (workers <= 1) {
      Buffers buf;
      for (std::size_t r = 0; r < reps; ++r) fold(run_one(r, buf));
    } else {
      // Replicates run in index blocks; each block is computed in parallel
      // and folded sequentially, so results do not depend on thread count.
      const std::size_t block = workers * 8;
      std::vector<RepOut> slots;
      for (std::size_t start = 0; start < reps; start += block) {
        const std::size_t stop = std::min(reps, start + block);
        slots.assign(stop - start, RepOut{});
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (std::size_t t = 0; t < workers; ++t) {
          pool.emplace_back([&, t]() {
            try {
              Buffers buf;
              for (std::size_t r = start + t; r < stop; r += workers)
                slots[r - start] = run_one(r, buf);
            } catch (...) {
              errors[t] = std::current_exception();
            }
          });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
          if (err) std::rethrow_exception(err);
        for (auto& slot : slots) fold(std::move(slot));
      }
    }

    const double reps_d = static_cast<double>(reps);
    alpha_summary.emase.resize(npts);
    alpha_summary.emase_se.resize(npts);
    alpha_summary.cl_centered_mean.resize(npts);
    alpha_summary.cl_centered_se.resize(npts);
    for (std::size_t k = 0; k < npts; ++k) {
      alpha_summary.emase[k] = static_cast<double>(ase_mean[k]);
      alpha_summary.cl_centered_mean[k] = static_cast<double>(clc_mean[k]);
      if (reps > 1) {
        alpha_summary.emase_se[k] =
            std::sqrt(static_cast<double>(ase_m2[k]) / (reps_d - 1.0) / reps_d);
        alpha_summary.cl_centered_se[k] =
            std::sqrt(static_cast<double>(clc_m2[k]) / (reps_d - 1.0) / reps_d);
      }
    }

    alpha_summary.mean_h_ase = static_cast<double>(sum_h_ase) / reps_d;
    alpha_summary.mean_h_cl = static_cast<double>(sum_h_cl) / reps_d;
    long double gsum = 0.0L, rsum = 0.0L;
    for (double g : gaps) gsum += g;
    for (double r : ratios) rsum += r;
    alpha_summary.mean_gap = static_cast<double>(gsum) / reps_d;
    alpha_summary.mean_ratio = static_cast<double>(rsum) / reps_d;
    long double gvar = 0.0L;
    for (double g : gaps) {
      const long double d = g - alpha_summary.mean_gap;
      gvar += d * d;
    }
    alpha_summary.sd_gap =
        reps > 1 ? std::sqrt(static_cast<double>(gvar) / (reps_d - 1.0)) : 0.0;

    std::vector<double> sorted_ratios = ratios;
    std::sort(sorted_ratios.begin(), sorted_ratios.end());
    alpha_summary.median_ratio =
        reps % 2 == 1 ? sorted_ratios[reps / 2]
                      : 0.5 * (sorted_ratios[reps / 2 - 1] + sorted_ratios[reps / 2]);

    if (ctx.has_theory) {
      alpha_summary.gap_sd_theory = bandwidth_gap_sd(ctx.inputs, ctx.cfg.n);
      // Standardized as (h_ase - h_cl)/sd, i.e. minus the stored gap.
      std::vector<double> standardized(gaps);
      for (double& g : standardized) g = -g / alpha_summary.gap_sd_theory;
      alpha_summary.ks_standardized_gaps = ks_statistic(std::move(standardized), normal_cdf);
    } else {
      alpha_summary.gap_sd_theory = std::numeric_limits<double>::quiet_NaN();
      alpha_summary.ks_standardized_gaps = std::numeric_limits<double>::quiet_NaN();
    }

    summary.per_alpha.push_back(std::move(alpha_summary));
  }
  return summary;
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  if (!cdf) throw std::invalid_argument("ks_statistic: missing cdf");
  std::sort(sample.begin(), sample.end());
  const double m = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / m - f);
    d = std::max(d, f - static_cast<double>(i) / m);
  }
  return d;
}

std::vector<double> empirical_mase(const std::vector<ReplicateRecord>& records) {
  if (records.empty()) throw std::invalid_argument("empirical_mase: no records");
  const std::size_t npts = records.front().ase_curve.size();
  if (npts == 0) throw std::invalid_argument("empirical_mase: records carry no curves");
  std::vector<long double> acc(npts, 0.0L);
  for (const auto& rec : records) {
    if (rec.ase_curve.size() != npts)
      throw std::invalid_argument("empirical_mase: records carry no curves");
    for (std::size_t k = 0; k < npts; ++k) acc[k] += rec.ase_curve[k];
  }
  std::vector<double> out(npts);
  for (std::size_t k = 0; k < npts; ++k)
    out[k] = static_cast<double>(acc[k] / static_cast<long double>(records.size()));
  return out;
}

}  // namespace bandsel
