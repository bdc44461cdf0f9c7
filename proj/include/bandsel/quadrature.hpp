#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace bandsel {

// Composite Simpson rule with a fixed, even panel count. Deterministic by
// construction (no adaptivity); throws if the result is not finite.
template <class F>
double integrate(F&& f, double a, double b, std::size_t panels = std::size_t{1} << 17) {
  if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
  if (panels < 2 || panels % 2 != 0)
    throw std::invalid_argument("integrate: panel count must be even and >= 2");
  const double step = (b - a) / static_cast<double>(panels);
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < panels; i += 2) odd += f(a + step * static_cast<double>(i));
  for (std::size_t i = 2; i < panels; i += 2) even += f(a + step * static_cast<double>(i));
  const double s = (f(a) + f(b) + 4.0 * odd + 2.0 * even) * step / 3.0;
  if (!std::isfinite(s)) throw std::runtime_error("integrate: non-finite integrand");
  return s;
}

}  // namespace bandsel
