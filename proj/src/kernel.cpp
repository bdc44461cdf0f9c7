#include "bandsel/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "bandsel/quadrature.hpp"

namespace bandsel {

KernelSpec biweight_kernel() {
  KernelSpec k;
  k.name = "biweight";
  k.half_width = 0.5;
  k.eval = [](double x) {
    if (std::abs(x) > 0.5) return 0.0;
    const double t = 1.0 - 4.0 * x * x;
    return 15.0 / 8.0 * t * t;
  };
  k.deriv = [](double x) {
    if (std::abs(x) > 0.5) return 0.0;
    return -30.0 * x * (1.0 - 4.0 * x * x);
  };
  return k;
}

KernelSpec kernel_by_name(const std::string& name) {
  if (name == "biweight") return biweight_kernel();
  throw std::invalid_argument("unknown kernel: " + name);
}

double eval_kernel(const KernelSpec& k, double x) {
  if (std::abs(x) > k.half_width) return 0.0;
  return k.eval(x);
}

double eval_g(const KernelSpec& k, double x) {
  if (std::abs(x) > k.half_width) return 0.0;
  return -x * k.deriv(x);
}

KernelMoments kernel_moments(const KernelSpec& k) {
  if (!(k.half_width > 0)) throw std::invalid_argument("kernel_moments: half_width must be positive");
  const double a = -k.half_width, b = k.half_width;
  const double mass = integrate([&](double t) { return eval_kernel(k, t); }, a, b);
  if (std::abs(mass - 1.0) > 1e-6)
    throw std::invalid_argument("kernel_moments: kernel does not integrate to 1");
  KernelMoments m;
  m.second_moment = integrate([&](double t) { return t * t * eval_kernel(k, t); }, a, b);
  m.k_sq = integrate([&](double t) { const double v = eval_kernel(k, t); return v * v; }, a, b);
  m.kg_sq = integrate(
      [&](double t) {
        const double v = eval_kernel(k, t) - eval_g(k, t);
        return v * v;
      },
      a, b);
  m.k_zero = eval_kernel(k, 0.0);
  return m;
}

}  // namespace bandsel
