#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bandsel {

// eps_t = eta_t * sqrt(sigma2*(1-alpha) + alpha*eps_{t-1}^2), eta iid N(0,1).
// Stationary marginal variance is sigma2 for any alpha in [0,1); conditional
// variance varies, so the noise is a martingale difference sequence but not
// independent.
struct ArchParams {
  double alpha = 0.0;   // in [0,1)
  double sigma2 = 1.0;  // > 0
};

struct NoisePath {
  std::vector<double> values;
  ArchParams params;
  std::uint64_t seed = 0;
};

// Largest alpha with a finite moment of order 2r: alpha^r * 1*3*...*(2r-1) < 1.
// r must lie in [1, 32].
double moment_threshold(int r);

// E eps^4 = 3 sigma2^2 (1 - alpha^2) / (1 - 3 alpha^2); requires 3 alpha^2 < 1.
double arch_fourth_moment(const ArchParams& p);

// Starts from eps_0 = sigma*eta_0 and discards a fixed burn-in, so the
// returned slice is stationary to machine accuracy (second moments are exact
// for any burn-in because the recursion preserves variance sigma2).
NoisePath simulate_arch(const ArchParams& p, std::size_t n, std::uint64_t seed);

// Shared interface so iid Gaussian and ARCH(1) noise plug into the same
// simulation harness.
class MdsNoiseSource {
 public:
  virtual ~MdsNoiseSource() = default;
  virtual NoisePath sample(std::size_t n, std::uint64_t seed) const = 0;
  virtual double marginal_variance() const = 0;
};

class ArchNoiseSource final : public MdsNoiseSource {
 public:
  explicit ArchNoiseSource(ArchParams p);
  NoisePath sample(std::size_t n, std::uint64_t seed) const override;
  double marginal_variance() const override { return params_.sigma2; }

 private:
  ArchParams params_;
};

// Same law as ArchNoiseSource with alpha = 0 but skips the burn-in, so it
// consumes fewer draws from the stream.
class GaussianNoiseSource final : public MdsNoiseSource {
 public:
  explicit GaussianNoiseSource(double sigma2);
  NoisePath sample(std::size_t n, std::uint64_t seed) const override;
  double marginal_variance() const override { return sigma2_; }

 private:
  double sigma2_;
};

}  // namespace bandsel
