#include "bandsel/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bandsel {

namespace {

struct MasePieces {
  double a_part = 0.0;  // (int u r''^2)(int t^2 K)^2
  double b_part = 0.0;  // (int u)(int K^2)
};

MasePieces mase_pieces(const TrendSpec& trend, const WeightSpec& weight,
                       const KernelMoments& moments) {
  MasePieces p;
  const double curv = curvature_integral(trend, weight, false);
  p.a_part = curv * moments.second_moment * moments.second_moment;
  p.b_part = weight_integral(weight, 1) * moments.k_sq;
  return p;
}

}  // namespace

BandwidthGrid geometric_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw std::invalid_argument("geometric_grid: count must be positive");
  if (!(lo > 0.0)) throw std::invalid_argument("geometric_grid: lo must be positive");
  if (count == 1) {
    if (lo != hi) throw std::invalid_argument("geometric_grid: count 1 needs lo == hi");
    return BandwidthGrid{{lo}, false};
  }
  if (!(hi > lo)) throw std::invalid_argument("geometric_grid: need hi > lo");
  BandwidthGrid g;
  g.values.resize(count);
  const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    g.values[i] = lo * std::exp(ratio * static_cast<double>(i));
  g.values.front() = lo;
  g.values.back() = hi;
  return g;
}

double admissible_max_h(const KernelSpec& kernel) {
  return std::min(0.5, 0.5 / kernel.half_width);
}

BandwidthGrid default_grid(std::size_t n, double c, const KernelSpec& kernel, std::size_t count) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw std::invalid_argument("default_grid: need a positive bandwidth constant");
  const double rate = c * std::pow(static_cast<double>(n), -0.2);
  double lo = std::max(0.019, 0.25 * rate);
  double hi = std::min(0.45, 4.0 * rate);
  bool clamped = false;
  const double cap = admissible_max_h(kernel) * (1.0 - 1e-9);
  if (hi > cap) {
    hi = cap;
    clamped = true;
  }
  if (!(lo < hi)) throw std::invalid_argument("default_grid: empty bandwidth range");
  BandwidthGrid g = geometric_grid(lo, hi, count);
  g.clamped = clamped;
  return g;
}

BandwidthGrid wide_grid(const KernelSpec& kernel, std::size_t count) {
  double hi = 1.30;
  bool clamped = false;
  const double cap = admissible_max_h(kernel) * (1.0 - 1e-9);
  if (hi > cap) {
    hi = cap;
    clamped = true;
  }
  BandwidthGrid g = geometric_grid(0.019, hi, count);
  g.clamped = clamped;
  return g;
}

SelectionResult select_minimum(const CriterionCurve& curve) {
  if (curve.values.empty() || curve.values.size() != curve.grid.values.size())
    throw std::invalid_argument("select_minimum: malformed curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.values.size(); ++i)
    if (curve.values[i] < curve.values[best]) best = i;
  SelectionResult res;
  res.index = best;
  res.h = curve.grid.values[best];
  res.value = curve.values[best];
  res.criterion = curve.criterion;
  return res;
}

double ase_from_fit(const std::vector<double>& fit, const std::vector<double>& r_true,
                    const std::vector<double>& u) {
  const std::size_t n = fit.size();
  if (r_true.size() != n || u.size() != n) throw std::invalid_argument("ase: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = fit[i] - r_true[i];
    acc += u[i] * d * d;
  }
  return acc / static_cast<double>(n);
}

double ase(const std::vector<double>& y, const SmootherPlan& plan, const TrendSpec& trend,
           const WeightSpec& weight) {
  const Design d = make_design(plan.n);
  return ase_from_fit(smooth(plan, y), trend_values(trend, d), weight_values(weight, d));
}

double mase_exact_from_fit(const std::vector<double>& trend_fit, const std::vector<double>& r_true,
                           const std::vector<double>& u, const SmootherPlan& plan, double sigma2) {
  if (!(sigma2 >= 0.0)) throw std::invalid_argument("mase_exact: sigma2 must be >= 0");
  const double bias2 = ase_from_fit(trend_fit, r_true, u);
  return bias2 + sigma2 * trace_ullt(plan, u) / static_cast<double>(plan.n);
}

double mase_exact(const SmootherPlan& plan, const TrendSpec& trend, const WeightSpec& weight,
                  double sigma2) {
  const Design d = make_design(plan.n);
  const std::vector<double> r_true = trend_values(trend, d);
  return mase_exact_from_fit(smooth(plan, r_true), r_true, weight_values(weight, d), plan, sigma2);
}

double mallows_cl_from_fit(const std::vector<double>& y, const std::vector<double>& fit,
                           const std::vector<double>& u, const SmootherPlan& plan, double sigma2) {
  const std::size_t n = y.size();
  if (fit.size() != n || u.size() != n) throw std::invalid_argument("mallows_cl: length mismatch");
  if (!(sigma2 >= 0.0)) throw std::invalid_argument("mallows_cl: sigma2 must be >= 0");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = y[i] - fit[i];
    acc += u[i] * d * d;
  }
  return (acc + 2.0 * sigma2 * trace_ul(plan, u)) / static_cast<double>(n);
}

double mallows_cl(const std::vector<double>& y, const SmootherPlan& plan,
                  const WeightSpec& weight, double sigma2) {
  const Design d = make_design(plan.n);
  return mallows_cl_from_fit(y, smooth(plan, y), weight_values(weight, d), plan, sigma2);
}

double mallows_cp(const std::vector<double>& y, const SmootherPlan& plan,
                  const WeightSpec& weight) {
  const Design d = make_design(plan.n);
  const std::vector<double> u = weight_values(weight, d);
  const std::vector<double> fit = smooth(plan, y);
  double sum_u = 0.0, rss = 0.0;
  for (std::size_t i = 0; i < plan.n; ++i) {
    sum_u += u[i];
    const double e = y[i] - fit[i];
    rss += u[i] * e * e;
  }
  if (!(sum_u > 0.0)) throw std::invalid_argument("mallows_cp: weights sum to zero");
  const double sigma_hat2 = rss / sum_u;
  const double nu = static_cast<double>(plan.n) * trace_ul(plan, u) / sum_u;
  return sigma_hat2 * (1.0 + 2.0 * nu / static_cast<double>(plan.n));
}

CriterionCurve asymptotic_mase_curve(const TrendSpec& trend, const WeightSpec& weight,
                                     const KernelMoments& moments, double sigma2, double cov_sum,
                                     std::size_t n, const BandwidthGrid& grid) {
  const MasePieces p = mase_pieces(trend, weight, moments);
  const double noise = sigma2 + 2.0 * cov_sum;
  CriterionCurve curve;
  curve.grid = grid;
  curve.criterion = "asymptotic_mase";
  curve.values.resize(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const double h = grid.values[i];
    curve.values[i] = h * h * h * h / 4.0 * p.a_part + p.b_part * noise / (static_cast<double>(n) * h);
  }
  return curve;
}

OptimalBandwidth optimal_bandwidth(const TrendSpec& trend, const WeightSpec& weight,
                                   const KernelMoments& moments, double sigma2, double cov_sum,
                                   std::size_t n) {
  const MasePieces p = mase_pieces(trend, weight, moments);
  const double noise = sigma2 + 2.0 * cov_sum;
  if (!(p.a_part > 0.0))
    throw std::invalid_argument("optimal_bandwidth: weighted curvature vanishes");
  if (!(noise > 0.0)) throw std::invalid_argument("optimal_bandwidth: noise level must be positive");
  OptimalBandwidth out;
  out.c = std::pow(p.b_part * noise / p.a_part, 0.2);
  out.h = out.c * std::pow(static_cast<double>(n), -0.2);
  return out;
}

double asymptotic_mase_second_derivative(const TrendSpec& trend, const WeightSpec& weight,
                                         const KernelMoments& moments, double sigma2,
                                         std::size_t n, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("asymptotic_mase_second_derivative: h must be positive");
  const MasePieces p = mase_pieces(trend, weight, moments);
  return 3.0 * h * h * p.a_part + 2.0 * sigma2 * p.b_part / (static_cast<double>(n) * h * h * h);
}

}  // namespace bandsel
