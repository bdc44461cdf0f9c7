#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "bandsel/fft.hpp"
#include "bandsel/kernel.hpp"

namespace bandsel {

// Precomputed kernel weights for smoothing n equispaced observations at
// bandwidth h: fitted value i is sum_j (1/(nh)) K((x_i - x_j)/h) y_j, with
// circular distance when periodic. No edge renormalization.
struct SmootherPlan {
  std::size_t n = 0;
  double h = 0.0;
  KernelSpec kernel;
  bool periodic = true;
  std::size_t stencil = 0;        // largest offset with nonzero weight
  std::vector<double> weights;    // periodic: circular, length n; else offsets 0..stencil
  std::shared_ptr<const RealFft> fft;               // periodic only
  std::vector<std::complex<double>> weight_spectrum;  // periodic only
};

// Requires n >= 4 and 0 < h < 1/2; periodic plans additionally require
// h * half_width < 1/2 so the window never wraps onto itself.
SmootherPlan make_smoother_plan(std::size_t n, double h, const KernelSpec& kernel, bool periodic);

std::vector<double> smooth_direct(const SmootherPlan& plan, const std::vector<double>& y);
std::vector<double> smooth_fft(const SmootherPlan& plan, const std::vector<double>& y);  // periodic only
// FFT path when available, direct otherwise.
std::vector<double> smooth(const SmootherPlan& plan, const std::vector<double>& y);

// Hot path for sweeping many bandwidths over one series: forward-transform y
// once, then call this per plan. scratch must hold spectrum_size() entries;
// out must hold n. Output is identical to smooth_fft.
void smooth_from_spectrum(const SmootherPlan& plan, const std::complex<double>* y_spectrum,
                          std::complex<double>* scratch, double* out);

// tr(U L) and tr(U L L^T) for U = diag(u at the design points).
double trace_ul(const SmootherPlan& plan, const std::vector<double>& u);
double trace_ullt(const SmootherPlan& plan, const std::vector<double>& u);

}  // namespace bandsel
