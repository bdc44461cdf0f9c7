#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bandsel/kernel.hpp"
#include "bandsel/smoother.hpp"
#include "bandsel/trend.hpp"

namespace bandsel {

struct BandwidthGrid {
  std::vector<double> values;  // strictly increasing, admissible bandwidths
  bool clamped = false;        // true if a requested endpoint had to be reduced
};

// count >= 2 with lo < hi, or count == 1 with lo == hi.
BandwidthGrid geometric_grid(double lo, double hi, std::size_t count);

// n-dependent neighborhood of the optimal rate: geometric grid on
// [max(0.019, 0.25 c n^{-1/5}), min(0.45, 4 c n^{-1/5})].
BandwidthGrid default_grid(std::size_t n, double c, const KernelSpec& kernel,
                           std::size_t count = 200);

// Fixed wide range [0.019, 1.30], clamped to admissible bandwidths.
BandwidthGrid wide_grid(const KernelSpec& kernel, std::size_t count = 200);

// Largest h a plan accepts for this kernel (exclusive bound).
double admissible_max_h(const KernelSpec& kernel);

struct CriterionCurve {
  BandwidthGrid grid;
  std::vector<double> values;
  std::string criterion;
};

struct SelectionResult {
  double h = 0.0;
  std::size_t index = 0;
  double value = 0.0;
  std::string criterion;
};

// Smallest h attaining the minimum (ties resolved toward small h).
SelectionResult select_minimum(const CriterionCurve& curve);

// Average squared error of the fit against the true trend, weighted by u:
// (1/n) sum_i u(x_i) (rhat_i - r(x_i))^2.
double ase(const std::vector<double>& y, const SmootherPlan& plan, const TrendSpec& trend,
           const WeightSpec& weight);
double ase_from_fit(const std::vector<double>& fit, const std::vector<double>& r_true,
                    const std::vector<double>& u);

// Exact finite-n mean of the ASE under uncorrelated noise with variance
// sigma2: squared-bias term plus (sigma2/n) tr(U L L^T).
double mase_exact(const SmootherPlan& plan, const TrendSpec& trend, const WeightSpec& weight,
                  double sigma2);
double mase_exact_from_fit(const std::vector<double>& trend_fit, const std::vector<double>& r_true,
                           const std::vector<double>& u, const SmootherPlan& plan, double sigma2);

// Mallows-type criterion with known sigma2:
// (1/n) sum_i u(x_i)(y_i - rhat_i)^2 + 2 sigma2 tr(U L)/n.
double mallows_cl(const std::vector<double>& y, const SmootherPlan& plan,
                  const WeightSpec& weight, double sigma2);
double mallows_cl_from_fit(const std::vector<double>& y, const std::vector<double>& fit,
                           const std::vector<double>& u, const SmootherPlan& plan, double sigma2);

// Plug-in variant sigma_hat2 * (1 + 2 nu / n) with nu = n tr(UL)/tr(U) and
// sigma_hat2 the u-weighted residual mean square.
double mallows_cp(const std::vector<double>& y, const SmootherPlan& plan,
                  const WeightSpec& weight);

// Leading-order MASE approximation
//   (h^4/4) (int u r''^2) (int t^2 K)^2 + (int u)(int K^2)(sigma2 + 2 cov_sum)/(n h);
// cov_sum is the summed autocovariance of the noise (0 for martingale
// differences).
CriterionCurve asymptotic_mase_curve(const TrendSpec& trend, const WeightSpec& weight,
                                     const KernelMoments& moments, double sigma2, double cov_sum,
                                     std::size_t n, const BandwidthGrid& grid);

struct OptimalBandwidth {
  double c = 0.0;  // h = c n^{-1/5}
  double h = 0.0;
};

// Minimizer of the asymptotic MASE; throws if the weighted curvature
// integral vanishes (flat/linear trends have no interior optimum).
OptimalBandwidth optimal_bandwidth(const TrendSpec& trend, const WeightSpec& weight,
                                   const KernelMoments& moments, double sigma2, double cov_sum,
                                   std::size_t n);

// d^2/dh^2 of the asymptotic MASE: 3 h^2 A + 2 sigma2 B / (n h^3), with
// A = (int u r''^2)(int t^2 K)^2 and B = (int u)(int K^2).
double asymptotic_mase_second_derivative(const TrendSpec& trend, const WeightSpec& weight,
                                         const KernelMoments& moments, double sigma2,
                                         std::size_t n, double h);

}  // namespace bandsel
