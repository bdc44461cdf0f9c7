#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bandsel/kernel.hpp"
#include "bandsel/quadrature.hpp"
#include "bandsel/rng.hpp"

using namespace bandsel;

namespace {

// Midpoint rule: deliberately a different scheme from the library's Simpson
// integrator, so moment checks have an independent oracle.
template <class F>
double midpoint(F&& f, double a, double b, std::size_t m) {
  const double w = (b - a) / static_cast<double>(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += f(a + (static_cast<double>(i) + 0.5) * w);
  return acc * w;
}

}  // namespace

TEST_CASE("quadrature basics") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, 3.141592653589793) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, -1.0, 1.0), std::runtime_error);
}

TEST_CASE("biweight pointwise values") {
  const KernelSpec k = biweight_kernel();
  CHECK(k.half_width == 0.5);
  CHECK(eval_kernel(k, 0.0) == 1.875);
  CHECK(eval_kernel(k, 0.25) == 1.0546875);
  CHECK(eval_kernel(k, 0.5) == 0.0);
  CHECK(eval_kernel(k, 0.5 + 1e-9) == 0.0);
  CHECK(eval_kernel(k, -3.0) == 0.0);
  CHECK(eval_g(k, 0.25) == doctest::Approx(1.40625).epsilon(1e-15));
  CHECK(eval_g(k, 0.0) == 0.0);
}

TEST_CASE("biweight is even at random points") {
  const KernelSpec k = biweight_kernel();
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const double x = uniform01(counter_value(7, i)) - 0.5;  // in (-0.5, 0.5)
    CHECK(eval_kernel(k, x) == eval_kernel(k, -x));
  }
}

TEST_CASE("derivative matches finite differences away from the edges") {
  const KernelSpec k = biweight_kernel();
  const double step = 1e-6;
  for (double x : {0.1, 0.2, 0.3, 0.4, -0.15, -0.35, 0.45}) {
    const double fd = (eval_kernel(k, x + step) - eval_kernel(k, x - step)) / (2.0 * step);
    CHECK(std::abs(fd - k.deriv(x)) / std::abs(k.deriv(x)) < 1e-6);
  }
}

TEST_CASE("G is minus x K'") {
  const KernelSpec k = biweight_kernel();
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double x = uniform01(counter_value(11, i)) - 0.5;
    CHECK(eval_g(k, x) == doctest::Approx(-x * k.deriv(x)).epsilon(1e-14));
  }
}

TEST_CASE("biweight moments: exact fractions and an independent oracle") {
  const KernelSpec k = biweight_kernel();
  const KernelMoments m = kernel_moments(k);

  // Polynomial integration gives the exact values.
  CHECK(m.second_moment == doctest::Approx(1.0 / 28.0).epsilon(1e-9));
  CHECK(m.k_sq == doctest::Approx(10.0 / 7.0).epsilon(1e-9));
  CHECK(m.kg_sq == doctest::Approx(10.0 / 7.0).epsilon(1e-9));
  CHECK(m.k_zero == 1.875);

  // Midpoint-rule oracle, 1e5 panels: error well under 1e-8.
  const double t2k = midpoint([&](double t) { return t * t * eval_kernel(k, t); }, -0.5, 0.5, 100000);
  const double ksq = midpoint([&](double t) { const double v = eval_kernel(k, t); return v * v; },
                              -0.5, 0.5, 100000);
  const double kgsq = midpoint(
      [&](double t) {
        const double v = eval_kernel(k, t) - eval_g(k, t);
        return v * v;
      },
      -0.5, 0.5, 100000);
  CHECK(m.second_moment == doctest::Approx(t2k).epsilon(1e-8));
  CHECK(m.k_sq == doctest::Approx(ksq).epsilon(1e-8));
  CHECK(m.kg_sq == doctest::Approx(kgsq).epsilon(1e-8));

  // The kernel integrates to one (validated inside kernel_moments as well).
  CHECK(midpoint([&](double t) { return eval_kernel(k, t); }, -0.5, 0.5, 100000) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("kernel lookup by name") {
  CHECK(kernel_by_name("biweight").name == "biweight");
  CHECK_THROWS_AS(kernel_by_name("triangular"), std::invalid_argument);
  CHECK_THROWS_AS(kernel_by_name(""), std::invalid_argument);
}

TEST_CASE("kernel_moments rejects a kernel that does not integrate to one") {
  KernelSpec bad = biweight_kernel();
  bad.name = "halved";
  auto base = bad.eval;
  bad.eval = [base](double x) { return 0.5 * base(x); };
  CHECK_THROWS_AS(kernel_moments(bad), std::invalid_argument);
}
