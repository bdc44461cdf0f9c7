#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace bandsel {

// Thin wrapper around FFTW's real 1-d transforms. Plan creation/destruction
// is serialized internally (FFTW planning is not thread-safe); execution uses
// the new-array interface and may run concurrently. Plans are created with
// FFTW_ESTIMATE so results are reproducible run to run.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return n_; }
  std::size_t spectrum_size() const { return n_ / 2 + 1; }

  // out must hold spectrum_size() entries.
  void forward(const double* in, std::complex<double>* out) const;
  std::vector<std::complex<double>> forward(const std::vector<double>& in) const;

  // Unnormalized inverse; clobbers the spectrum buffer (FFTW c2r semantics).
  void inverse_destructive(std::complex<double>* spectrum, double* out) const;

 private:
  std::size_t n_;
  void* fwd_ = nullptr;
  void* inv_ = nullptr;
};

// Process-wide cache so plans for the same length are built once and shared.
std::shared_ptr<const RealFft> fft_for_length(std::size_t n);

}  // namespace bandsel
