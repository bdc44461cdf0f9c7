#include "bandsel/arch.hpp"

#include <cmath>
#include <stdexcept>

#include "bandsel/rng.hpp"

namespace bandsel {

namespace {

constexpr std::size_t kBurnIn = 1024;

void check_params(const ArchParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha < 1.0))
    throw std::invalid_argument("arch: alpha must lie in [0,1)");
  if (!(p.sigma2 > 0.0)) throw std::invalid_argument("arch: sigma2 must be positive");
}

}  // namespace

double moment_threshold(int r) {
  if (r < 1 || r > 32) throw std::invalid_argument("moment_threshold: r must lie in [1,32]");
  // alpha^r * prod(2i-1) < 1  <=>  alpha < exp(-sum log(2i-1) / r)
  double log_prod = 0.0;
  for (int i = 1; i <= r; ++i) log_prod += std::log(2.0 * i - 1.0);
  return std::exp(-log_prod / r);
}

double arch_fourth_moment(const ArchParams& p) {
  check_params(p);
  if (!(3.0 * p.alpha * p.alpha < 1.0))
    throw std::invalid_argument("arch_fourth_moment: needs 3*alpha^2 < 1");
  return 3.0 * p.sigma2 * p.sigma2 * (1.0 - p.alpha * p.alpha) / (1.0 - 3.0 * p.alpha * p.alpha);
}

NoisePath simulate_arch(const ArchParams& p, std::size_t n, std::uint64_t seed) {
  check_params(p);
  if (n == 0) throw std::invalid_argument("simulate_arch: n must be positive");
  NoisePath path;
  path.params = p;
  path.seed = seed;
  path.values.resize(n);
  NormalStream g(seed);
  const double sigma = std::sqrt(p.sigma2);
  const double base = p.sigma2 * (1.0 - p.alpha);
  double eps = sigma * g.next();
  for (std::size_t t = 0; t < kBurnIn; ++t)
    eps = g.next() * std::sqrt(base + p.alpha * eps * eps);
  for (std::size_t i = 0; i < n; ++i) {
    eps = g.next() * std::sqrt(base + p.alpha * eps * eps);
    path.values[i] = eps;
  }
  return path;
}

ArchNoiseSource::ArchNoiseSource(ArchParams p) : params_(p) { check_params(p); }

NoisePath ArchNoiseSource::sample(std::size_t n, std::uint64_t seed) const {
  return simulate_arch(params_, n, seed);
}

GaussianNoiseSource::GaussianNoiseSource(double sigma2) : sigma2_(sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("gaussian noise: sigma2 must be positive");
}

NoisePath GaussianNoiseSource::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw std::invalid_argument("gaussian noise: n must be positive");
  NoisePath path;
  path.params = ArchParams{0.0, sigma2_};
  path.seed = seed;
  path.values.resize(n);
  NormalStream g(seed);
  const double sigma = std::sqrt(sigma2_);
  for (std::size_t i = 0; i < n; ++i) path.values[i] = sigma * g.next();
  return path;
}

}  // namespace bandsel
