#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bandsel/montecarlo.hpp"
#include "bandsel/rng.hpp"

using namespace bandsel;

namespace {

double phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

StudyConfig small_config() {
  StudyConfig cfg;
  cfg.n = 128;
  cfg.alphas = {0.01, 0.577};
  cfg.replicates = 10;
  cfg.grid_points = 8;
  cfg.store_curves = true;
  return cfg;
}

bool same_vector(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool same_summary(const StudySummary& a, const StudySummary& b) {
  if (!same_vector(a.grid.values, b.grid.values)) return false;
  if (!same_vector(a.mase_curve, b.mase_curve)) return false;
  if (!same_vector(a.asymptotic_curve, b.asymptotic_curve)) return false;
  if (a.has_theory != b.has_theory || a.h_star != b.h_star) return false;
  if (a.per_alpha.size() != b.per_alpha.size()) return false;
  for (std::size_t i = 0; i < a.per_alpha.size(); ++i) {
    const AlphaSummary& x = a.per_alpha[i];
    const AlphaSummary& y = b.per_alpha[i];
    if (x.alpha != y.alpha || x.records.size() != y.records.size()) return false;
    for (std::size_t r = 0; r < x.records.size(); ++r) {
      if (x.records[r].seed != y.records[r].seed) return false;
      if (x.records[r].h_ase != y.records[r].h_ase) return false;
      if (x.records[r].h_cl != y.records[r].h_cl) return false;
      if (x.records[r].gap != y.records[r].gap) return false;
      if (!same_vector(x.records[r].ase_curve, y.records[r].ase_curve)) return false;
      if (!same_vector(x.records[r].cl_centered_curve, y.records[r].cl_centered_curve))
        return false;
    }
    if (!same_vector(x.emase, y.emase) || !same_vector(x.emase_se, y.emase_se)) return false;
    if (!same_vector(x.cl_centered_mean, y.cl_centered_mean)) return false;
    if (!same_vector(x.cl_centered_se, y.cl_centered_se)) return false;
    if (x.mean_ratio != y.mean_ratio || x.median_ratio != y.median_ratio) return false;
    if (x.mean_h_ase != y.mean_h_ase || x.mean_h_cl != y.mean_h_cl) return false;
    if (x.mean_gap != y.mean_gap || x.sd_gap != y.sd_gap) return false;
    if (x.gap_sd_theory != y.gap_sd_theory) return false;
    if (x.ks_standardized_gaps != y.ks_standardized_gaps) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ks_statistic on hand-checkable samples") {
  const auto uniform_cdf = [](double x) { return std::min(std::max(x, 0.0), 1.0); };

  CHECK(ks_statistic({0.5}, uniform_cdf) == doctest::Approx(0.5).epsilon(1e-15));

  std::vector<double> quantiles(100);
  for (std::size_t i = 0; i < 100; ++i)
    quantiles[i] = (static_cast<double>(i) + 0.5) / 100.0;
  CHECK(ks_statistic(quantiles, uniform_cdf) == doctest::Approx(0.005).epsilon(1e-12));

  // A genuine normal sample should sit below the 5% critical value
  // 1.3581 / sqrt(m) = 0.0429 at m = 1000; we allow a little slack.
  NormalStream g(991);
  std::vector<double> sample(1000);
  for (auto& v : sample) v = g.next();
  CHECK(ks_statistic(sample, phi) < 0.0617);

  CHECK_THROWS_AS(ks_statistic({}, uniform_cdf), std::invalid_argument);
  CHECK_THROWS_AS(ks_statistic({0.1}, std::function<double(double)>{}), std::invalid_argument);
}

TEST_CASE("config validation") {
  StudyConfig cfg;
  CHECK_NOTHROW(validate(cfg));

  StudyConfig bad = cfg;
  bad.n = 3;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.replicates = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.sigma = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.alphas.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.alphas = {1.0};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.alphas = {-0.1};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.grid_points = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.grid_lo = 0.05;  // hi left unset
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.kernel = "box";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.trend = "mystery";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.weight = "spike";
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = cfg;
  bad.periodic = false;  // uniform weight at the boundary
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.weight = "bump";
  CHECK_NOTHROW(validate(bad));
}

TEST_CASE("run_replicate is deterministic and keeps the seed contract") {
  StudyConfig cfg;
  cfg.n = 256;
  cfg.alphas = {0.0, 0.3};
  cfg.grid_points = 12;
  cfg.store_curves = true;

  const ReplicateRecord a = run_replicate(cfg, 0.3, 5);
  const ReplicateRecord b = run_replicate(cfg, 0.3, 5);
  CHECK(a.seed == b.seed);
  CHECK(a.seed == derive_seed(cfg.base_seed, 1, 5));
  CHECK(a.h_ase == b.h_ase);
  CHECK(a.h_cl == b.h_cl);
  CHECK(a.gap == b.gap);
  CHECK(a.gap == a.h_cl - a.h_ase);
  CHECK(same_vector(a.ase_curve, b.ase_curve));
  CHECK(same_vector(a.cl_centered_curve, b.cl_centered_curve));
  REQUIRE(a.ase_curve.size() == 12);

  // Different cells get different seeds and (generically) different answers.
  const ReplicateRecord c = run_replicate(cfg, 0.3, 6);
  CHECK(c.seed != a.seed);
  CHECK(!same_vector(a.ase_curve, c.ase_curve));

  cfg.store_curves = false;
  const ReplicateRecord d = run_replicate(cfg, 0.3, 5);
  CHECK(d.ase_curve.empty());
  CHECK(d.cl_centered_curve.empty());
  CHECK(d.h_ase == a.h_ase);

  CHECK_THROWS_AS(run_replicate(cfg, 0.31, 0), std::invalid_argument);
}

TEST_CASE("FFT and direct smoothing give the same study answers") {
  StudyConfig fft;
  fft.n = 256;
  fft.alphas = {0.162};
  fft.grid_points = 10;
  fft.store_curves = true;
  StudyConfig direct = fft;
  direct.use_fft = false;

  const ReplicateRecord a = run_replicate(fft, 0.162, 3);
  const ReplicateRecord b = run_replicate(direct, 0.162, 3);
  CHECK(a.h_ase == b.h_ase);
  CHECK(a.h_cl == b.h_cl);
  REQUIRE(a.ase_curve.size() == b.ase_curve.size());
  for (std::size_t k = 0; k < a.ase_curve.size(); ++k) {
    CHECK(std::abs(a.ase_curve[k] - b.ase_curve[k]) < 1e-10);
    CHECK(std::abs(a.cl_centered_curve[k] - b.cl_centered_curve[k]) < 1e-10);
  }
}

TEST_CASE("run_study is bitwise deterministic and thread-count invariant") {
  StudyConfig cfg = small_config();
  const StudySummary s1 = run_study(cfg);
  const StudySummary s2 = run_study(cfg);
  CHECK(same_summary(s1, s2));

  StudyConfig threaded = cfg;
  threaded.threads = 3;
  const StudySummary s3 = run_study(threaded);
  CHECK(same_summary(s1, s3));
  CHECK(s3.config.threads == 3);

  REQUIRE(s1.per_alpha.size() == 2);
  for (const AlphaSummary& a : s1.per_alpha) {
    CHECK(a.records.size() == cfg.replicates);
    // Every replicate's gap honors the sign convention.
    for (const ReplicateRecord& rec : a.records) CHECK(rec.gap == rec.h_cl - rec.h_ase);
  }
  CHECK(s1.has_theory);
  CHECK(s1.h_star > 0.0);
  REQUIRE(s1.mase_curve.size() == cfg.grid_points);
  REQUIRE(s1.asymptotic_curve.size() == cfg.grid_points);
}

TEST_CASE("a single replicate degenerates cleanly") {
  StudyConfig cfg;
  cfg.n = 128;
  cfg.alphas = {0.2};
  cfg.replicates = 1;
  cfg.grid_points = 6;
  cfg.store_curves = true;

  const StudySummary s = run_study(cfg);
  REQUIRE(s.per_alpha.size() == 1);
  const AlphaSummary& a = s.per_alpha[0];
  REQUIRE(a.records.size() == 1);
  CHECK(a.sd_gap == 0.0);
  CHECK(same_vector(a.emase, a.records[0].ase_curve));
  CHECK(same_vector(a.cl_centered_mean, a.records[0].cl_centered_curve));
  for (double se : a.emase_se) CHECK(se == 0.0);
  CHECK(a.mean_gap == a.records[0].gap);
  CHECK(a.mean_ratio == a.records[0].h_cl / a.records[0].h_ase);
  CHECK(a.median_ratio == a.mean_ratio);
  CHECK(std::isfinite(a.ks_standardized_gaps));
  CHECK(a.ks_standardized_gaps <= 1.0);
}

TEST_CASE("grid configuration paths") {
  StudyConfig cfg = small_config();
  cfg.replicates = 2;

  cfg.grid_lo = 0.07;
  cfg.grid_hi = 0.28;
  StudySummary s = run_study(cfg);
  CHECK(s.grid.values.front() == 0.07);
  CHECK(s.grid.values.back() == 0.28);

  cfg.grid_lo = 0.0;
  cfg.grid_hi = 0.0;
  cfg.wide_grid = true;
  s = run_study(cfg);
  CHECK(s.grid.values.front() == doctest::Approx(0.019).epsilon(1e-12));
  CHECK(s.grid.clamped);

  cfg.wide_grid = false;
  s = run_study(cfg);  // automatic grid around c n^{-1/5}
  CHECK(s.grid.values.front() ==
        doctest::Approx(0.25 * s.inputs.c * std::pow(128.0, -0.2)).epsilon(1e-9));
  CHECK(s.grid.values.back() == doctest::Approx(0.45).epsilon(1e-9));
}

TEST_CASE("degenerate trends run with an explicit grid and report no theory") {
  StudyConfig cfg;
  cfg.n = 64;
  cfg.trend = "zero";
  cfg.alphas = {0.0};
  cfg.replicates = 3;
  cfg.grid_points = 5;
  cfg.grid_lo = 0.05;
  cfg.grid_hi = 0.3;
  cfg.store_curves = true;

  const StudySummary s = run_study(cfg);
  CHECK(!s.has_theory);
  CHECK(std::isnan(s.per_alpha[0].gap_sd_theory));
  CHECK(std::isnan(s.per_alpha[0].ks_standardized_gaps));
  for (double v : s.asymptotic_curve) CHECK(std::isnan(v));
  for (double v : s.mase_curve) CHECK(v > 0.0);  // pure variance term

  // Without an explicit grid there is no way to center the automatic one.
  StudyConfig autogrid = cfg;
  autogrid.grid_lo = 0.0;
  autogrid.grid_hi = 0.0;
  CHECK_THROWS_AS(run_study(autogrid), std::invalid_argument);
}

TEST_CASE("empirical_mase matches the study fold") {
  StudyConfig cfg = small_config();
  const StudySummary s = run_study(cfg);
  const std::vector<double> manual = empirical_mase(s.per_alpha[0].records);
  REQUIRE(manual.size() == s.per_alpha[0].emase.size());
  for (std::size_t k = 0; k < manual.size(); ++k)
    CHECK(manual[k] == doctest::Approx(s.per_alpha[0].emase[k]).epsilon(1e-12));

  StudyConfig bare = cfg;
  bare.store_curves = false;
  bare.replicates = 2;
  const StudySummary t = run_study(bare);
  CHECK_THROWS_AS(empirical_mase(t.per_alpha[0].records), std::invalid_argument);
  CHECK_THROWS_AS(empirical_mase({}), std::invalid_argument);
}

TEST_CASE("the mean ASE curve tracks the exact MASE curve") {
  StudyConfig cfg;
  cfg.n = 512;
  cfg.alphas = {0.01, 0.162};
  cfg.replicates = 400;
  cfg.grid_points = 25;

  const StudySummary s = run_study(cfg);
  REQUIRE(s.per_alpha.size() == 2);

  // E[ASE] equals the exact MASE at every bandwidth, so the Monte Carlo mean
  // should sit within a few standard errors of it across the whole grid.
  const AlphaSummary& independent = s.per_alpha[0];
  for (std::size_t k = 0; k < cfg.grid_points; ++k) {
    CHECK(std::abs(independent.emase[k] - s.mase_curve[k]) < 4.5 * independent.emase_se[k]);
  }

  // The same centering holds for CL minus the pure-noise term, including
  // under dependent (ARCH) noise, because the errors stay martingale
  // differences.
  const AlphaSummary& arch = s.per_alpha[1];
  for (std::size_t k = 0; k < cfg.grid_points; ++k) {
    CHECK(std::abs(arch.cl_centered_mean[k] - s.mase_curve[k]) < 4.5 * arch.cl_centered_se[k]);
  }

  // Selected bandwidths land near the MASE minimizer on average.
  std::size_t best = 0;
  for (std::size_t k = 1; k < cfg.grid_points; ++k)
    if (s.mase_curve[k] < s.mase_curve[best]) best = k;
  const double h_mase = s.grid.values[best];
  for (const AlphaSummary& a : s.per_alpha) {
    CHECK(a.mean_h_ase / h_mase > 0.75);
    CHECK(a.mean_h_ase / h_mase < 1.25);
    CHECK(a.mean_ratio > 0.75);
    CHECK(a.mean_ratio < 1.35);
  }
}
