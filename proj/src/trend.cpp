#include "bandsel/trend.hpp"

#include <cmath>
#include <stdexcept>

#include "bandsel/quadrature.hpp"

namespace bandsel {

Design make_design(std::size_t n) {
  if (n < 4) throw std::invalid_argument("make_design: need n >= 4");
  Design d;
  d.n = n;
  d.points.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    d.points[i] = static_cast<double>(i + 1) / static_cast<double>(n);
  return d;
}

TrendSpec benchmark_trend() {
  TrendSpec t;
  t.name = "benchmark";
  t.r = [](double x) {
    const double v = 4.0 * x * (1.0 - x);
    return v * v * v;
  };
  // r(x) = 64 x^3 (1-x)^3  =>  r''(x) = 384 (x - 6x^2 + 10x^3 - 5x^4)
  t.r2 = [](double x) { return 384.0 * (x - 6.0 * x * x + 10.0 * x * x * x - 5.0 * x * x * x * x); };
  return t;
}

TrendSpec zero_trend() {
  TrendSpec t;
  t.name = "zero";
  t.r = [](double) { return 0.0; };
  t.r2 = [](double) { return 0.0; };
  return t;
}

TrendSpec linear_trend(double intercept, double slope) {
  TrendSpec t;
  t.name = "linear";
  t.r = [intercept, slope](double x) { return intercept + slope * x; };
  t.r2 = [](double) { return 0.0; };
  return t;
}

TrendSpec trend_by_name(const std::string& name) {
  if (name == "benchmark") return benchmark_trend();
  if (name == "zero") return zero_trend();
  if (name == "linear") return linear_trend();
  throw std::invalid_argument("unknown trend: " + name);
}

WeightSpec uniform_weight() {
  WeightSpec w;
  w.name = "uniform";
  w.lo = 0.0;
  w.hi = 1.0;
  w.is_uniform = true;
  w.u = [](double) { return 1.0; };
  return w;
}

WeightSpec bump_weight() {
  WeightSpec w;
  w.name = "bump";
  w.lo = 0.1;
  w.hi = 0.9;
  w.is_uniform = false;
  // ((x-0.1)(0.9-x))^2 integrates to 0.8^5/30 over [0.1, 0.9].
  const double norm = std::pow(0.8, 5) / 30.0;
  w.u = [norm](double x) {
    if (x < 0.1 || x > 0.9) return 0.0;
    const double q = (x - 0.1) * (0.9 - x);
    return q * q / norm;
  };
  return w;
}

WeightSpec weight_by_name(const std::string& name) {
  if (name == "uniform") return uniform_weight();
  if (name == "bump") return bump_weight();
  throw std::invalid_argument("unknown weight: " + name);
}

std::vector<double> trend_values(const TrendSpec& t, const Design& d) {
  std::vector<double> out(d.n);
  for (std::size_t i = 0; i < d.n; ++i) out[i] = t.r(d.points[i]);
  return out;
}

std::vector<double> weight_values(const WeightSpec& w, const Design& d) {
  std::vector<double> out(d.n);
  for (std::size_t i = 0; i < d.n; ++i) out[i] = w.u(d.points[i]);
  return out;
}

double curvature_integral(const TrendSpec& t, const WeightSpec& w, bool squared_weight) {
  return integrate(
      [&](double x) {
        const double r2 = t.r2(x);
        const double uw = w.u(x);
        return (squared_weight ? uw * uw : uw) * r2 * r2;
      },
      w.lo, w.hi);
}

double weight_integral(const WeightSpec& w, int power) {
  if (power < 1) throw std::invalid_argument("weight_integral: power must be >= 1");
  return integrate([&](double x) { return std::pow(w.u(x), power); }, w.lo, w.hi);
}

}  // namespace bandsel
