#include "bandsel/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace bandsel {

namespace {
// FFTW planning and plan destruction are not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("RealFft: n must be >= 2");
  std::vector<double> real(n);
  std::vector<std::complex<double>> cplx(n / 2 + 1);
  auto* cp = reinterpret_cast<fftw_complex*>(cplx.data());
  std::lock_guard<std::mutex> lock(plan_mutex());
  // FFTW_UNALIGNED lets the new-array execute functions accept any buffers.
  fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real.data(), cp,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), cp, real.data(),
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (fwd_ == nullptr || inv_ == nullptr) throw std::runtime_error("RealFft: planning failed");
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  if (fwd_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (inv_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void RealFft::forward(const double* in, std::complex<double>* out) const {
  // r2c does not modify its input.
  fftw_execute_dft_r2c(static_cast<fftw_plan>(fwd_), const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

std::vector<std::complex<double>> RealFft::forward(const std::vector<double>& in) const {
  if (in.size() != n_) throw std::invalid_argument("RealFft::forward: length mismatch");
  std::vector<std::complex<double>> out(spectrum_size());
  forward(in.data(), out.data());
  return out;
}

void RealFft::inverse_destructive(std::complex<double>* spectrum, double* out) const {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(inv_),
                       reinterpret_cast<fftw_complex*>(spectrum), out);
}

std::shared_ptr<const RealFft> fft_for_length(std::size_t n) {
  static std::mutex cache_mutex;
  static std::map<std::size_t, std::weak_ptr<const RealFft>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find(n); it != cache.end()) {
    if (auto live = it->second.lock()) return live;
  }
  auto fresh = std::make_shared<const RealFft>(n);
  cache[n] = fresh;
  return fresh;
}

}  // namespace bandsel
