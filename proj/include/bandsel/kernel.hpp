#pragma once

#include <functional>
#include <string>

namespace bandsel {

// Symmetric density used as a smoothing kernel. eval and deriv return 0
// outside [-half_width, half_width].
struct KernelSpec {
  std::string name;
  double half_width = 0.5;
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
};

// Kernel functionals entering the bandwidth formulas.
struct KernelMoments {
  double second_moment = 0.0;  // int t^2 K(t) dt
  double k_sq = 0.0;           // int K(t)^2 dt
  double kg_sq = 0.0;          // int (K(t) - G(t))^2 dt, two-sided
  double k_zero = 0.0;         // K(0)
};

// (15/8)(1 - 4x^2)^2 on [-1/2, 1/2].
KernelSpec biweight_kernel();
KernelSpec kernel_by_name(const std::string& name);

double eval_kernel(const KernelSpec& k, double x);

// G(x) = -x K'(x); shows up when differentiating the smoother in h.
double eval_g(const KernelSpec& k, double x);

// Composite-Simpson moments over the declared support. Throws if K does not
// integrate to 1 (tolerance 1e-6) or an integral is non-finite.
KernelMoments kernel_moments(const KernelSpec& k);

}  // namespace bandsel
