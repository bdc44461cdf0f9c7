#include "bandsel/smoother.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bandsel {

namespace {

void check_sizes(const SmootherPlan& plan, const std::vector<double>& y) {
  if (y.size() != plan.n) throw std::invalid_argument("smoother: y length does not match plan");
}

void check_weight_len(const SmootherPlan& plan, const std::vector<double>& u) {
  if (u.size() != plan.n) throw std::invalid_argument("smoother: weight length does not match plan");
}

}  // namespace

SmootherPlan make_smoother_plan(std::size_t n, double h, const KernelSpec& kernel, bool periodic) {
  if (n < 4) throw std::invalid_argument("make_smoother_plan: need n >= 4");
  if (!(h > 0.0 && h < 0.5)) throw std::invalid_argument("make_smoother_plan: need 0 < h < 1/2");
  if (!(kernel.half_width > 0.0) || !kernel.eval)
    throw std::invalid_argument("make_smoother_plan: malformed kernel");
  if (periodic && !(h * kernel.half_width < 0.5))
    throw std::invalid_argument(
        "make_smoother_plan: periodic window would wrap (need h * half_width < 1/2)");

  SmootherPlan plan;
  plan.n = n;
  plan.h = h;
  plan.kernel = kernel;
  plan.periodic = periodic;

  const double nd = static_cast<double>(n);
  const double scale = 1.0 / (nd * h);
  std::size_t m = static_cast<std::size_t>(std::floor(nd * h * kernel.half_width));
  m = std::min(m, n - 1);
  plan.stencil = m;

  if (periodic) {
    plan.weights.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double dist = static_cast<double>(std::min(k, n - k)) / nd;
      plan.weights[k] = scale * eval_kernel(kernel, dist / h);
    }
    plan.fft = fft_for_length(n);
    plan.weight_spectrum = plan.fft->forward(plan.weights);
  } else {
    plan.weights.assign(m + 1, 0.0);
    for (std::size_t d = 0; d <= m; ++d) {
      const double dist = static_cast<double>(d) / nd;
      plan.weights[d] = scale * eval_kernel(kernel, dist / h);
    }
  }
  return plan;
}

std::vector<double> smooth_direct(const SmootherPlan& plan, const std::vector<double>& y) {
  check_sizes(plan, y);
  const std::size_t n = plan.n;
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(plan.stencil);
  std::vector<double> out(n, 0.0);
  if (plan.periodic) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = plan.weights[0] * y[i];
      for (std::ptrdiff_t d = 1; d <= m; ++d) {
        const std::size_t off = static_cast<std::size_t>(d);
        const std::size_t left = (i + n - off) % n;
        const std::size_t right = (i + off) % n;
        acc += plan.weights[off] * (y[left] + y[right]);
      }
      out[i] = acc;
    }
  } else {
    const std::ptrdiff_t nn = static_cast<std::ptrdiff_t>(n);
    for (std::ptrdiff_t i = 0; i < nn; ++i) {
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - m);
      const std::ptrdiff_t hi = std::min(nn - 1, i + m);
      double acc = 0.0;
      for (std::ptrdiff_t j = lo; j <= hi; ++j)
        acc += plan.weights[static_cast<std::size_t>(std::abs(i - j))] * y[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = acc;
    }
  }
  return out;
}

std::vector<double> smooth_fft(const SmootherPlan& plan, const std::vector<double>& y) {
  if (!plan.periodic) throw std::invalid_argument("smooth_fft: plan must be periodic");
  check_sizes(plan, y);
  std::vector<std::complex<double>> spectrum = plan.fft->forward(y);
  std::vector<std::complex<double>> scratch(plan.fft->spectrum_size());
  std::vector<double> out(plan.n);
  smooth_from_spectrum(plan, spectrum.data(), scratch.data(), out.data());
  return out;
}

std::vector<double> smooth(const SmootherPlan& plan, const std::vector<double>& y) {
  return plan.periodic ? smooth_fft(plan, y) : smooth_direct(plan, y);
}

void smooth_from_spectrum(const SmootherPlan& plan, const std::complex<double>* y_spectrum,
                          std::complex<double>* scratch, double* out) {
  if (!plan.periodic) throw std::invalid_argument("smooth_from_spectrum: plan must be periodic");
  const std::size_t ns = plan.fft->spectrum_size();
  const double inv_n = 1.0 / static_cast<double>(plan.n);
  for (std::size_t k = 0; k < ns; ++k) scratch[k] = y_spectrum[k] * plan.weight_spectrum[k];
  plan.fft->inverse_destructive(scratch, out);
  for (std::size_t i = 0; i < plan.n; ++i) out[i] *= inv_n;
}

double trace_ul(const SmootherPlan& plan, const std::vector<double>& u) {
  check_weight_len(plan, u);
  double sum_u = 0.0;
  for (double v : u) sum_u += v;
  return plan.weights[0] * sum_u;  // diagonal entry of L is K(0)/(nh) everywhere
}

double trace_ullt(const SmootherPlan& plan, const std::vector<double>& u) {
  check_weight_len(plan, u);
  const std::size_t n = plan.n;
  const std::size_t m = plan.stencil;
  if (plan.periodic) {
    double row = 0.0;
    for (std::size_t k = 0; k < n; ++k) row += plan.weights[k] * plan.weights[k];
    double sum_u = 0.0;
    for (double v : u) sum_u += v;
    return row * sum_u;
  }
  // Row i of L L^T has sum w0^2 + 2 sum_d w_d^2 minus the offsets cut off by
  // the boundary; tail(t) = sum_{d >= t} w_d^2 makes each row O(1).
  std::vector<double> tail(m + 2, 0.0);
  for (std::size_t d = m + 1; d-- > 1;)
    tail[d] = tail[d + 1] + plan.weights[d] * plan.weights[d];
  double full = plan.weights[0] * plan.weights[0] + 2.0 * tail[1];
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = full;
    if (i + 1 <= m) row -= tail[i + 1];            // missing left offsets
    if (n - i <= m) row -= tail[n - i];            // missing right offsets
    total += u[i] * row;
  }
  return total;
}

}  // namespace bandsel
