#pragma once

#include <cstddef>

#include "bandsel/kernel.hpp"
#include "bandsel/trend.hpp"

namespace bandsel {

// Everything the closed-form limit theory needs, bundled so the formulas have
// a single source of truth for the integrals.
struct AsymptoticInputs {
  double sigma2 = 0.0;         // noise variance
  double a_const = 0.0;        // A = (int u r''^2)(int t^2 K)^2
  double b_const = 0.0;        // B = (int u)(int K^2)
  double second_moment = 0.0;  // int t^2 K
  double kg_sq = 0.0;          // int (K-G)^2, two-sided
  double u_sq_int = 0.0;       // int u^2
  double u_sq_curv = 0.0;      // int u^2 r''^2
  double c = 0.0;              // optimal-bandwidth constant (B sigma2 / A)^{1/5}
};

// cov_sum: summed autocovariance of the noise (0 under martingale
// differences). Throws if the weighted curvature vanishes.
AsymptoticInputs make_asymptotic_inputs(const TrendSpec& trend, const WeightSpec& weight,
                                        const KernelMoments& moments, double sigma2,
                                        double cov_sum = 0.0);

// Asymptotic variance of n^{3/10} (h_ase - h_cl), both minimizers taken over
// the shrinking neighborhood of c n^{-1/5}:
//   4 s/(25 A^{8/5} B^{2/5}) (int t^2 K)^2 int u^2 r''^2
// + 8 s/(25 A^{3/5} B^{7/5}) int u^2 int (K-G)^2,  s = sigma2^{3/5}.
double bandwidth_gap_variance(const AsymptoticInputs& in);

// Standard deviation of the gap at sample size n: sqrt(gap variance) * n^{-3/10}.
double bandwidth_gap_sd(const AsymptoticInputs& in, std::size_t n);

// Variance in the CLT for the normalized criterion-derivative sum:
//   V = c^2 (int t^2 K)^2 sigma2 int u^2 r''^2
//     + (4/c^3) sigma2^2 int u^2 * HALF int (K-G)^2.
// The one-sided integral appears because the underlying quadratic form sums
// over ordered pairs j < i. bandwidth_gap_variance == 4 V / W^2 with
// W = 5 c^2 A the limiting criterion curvature.
double clt_variance(const AsymptoticInputs& in);

// Finite-n variance of that same centered quadratic-form sum at bandwidth h:
//   (h^2 sigma2 / n)(int t^2 K)^2 int u^2 r''^2
// + (4 sigma2^2 / (n^2 h^3)) int u^2 * HALF int (K-G)^2.
double quadform_variance(const AsymptoticInputs& in, std::size_t n, double h);

}  // namespace bandsel
