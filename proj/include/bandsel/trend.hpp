#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bandsel {

// Equispaced design x_i = i/n, i = 1..n.
struct Design {
  std::size_t n = 0;
  std::vector<double> points;
};

Design make_design(std::size_t n);  // requires n >= 4

// Trend function on [0,1] together with its second derivative (the second
// derivative drives every asymptotic bias formula).
struct TrendSpec {
  std::string name;
  std::function<double(double)> r;
  std::function<double(double)> r2;
};

TrendSpec benchmark_trend();  // r(x) = (4x(1-x))^3
TrendSpec zero_trend();
TrendSpec linear_trend(double intercept = 0.0, double slope = 1.0);
TrendSpec trend_by_name(const std::string& name);

// Non-negative weight on [0,1] with support [lo, hi].
struct WeightSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  bool is_uniform = false;
  std::function<double(double)> u;
};

WeightSpec uniform_weight();
// C^1 bump ((x-0.1)(0.9-x))^2 on [0.1, 0.9], normalized to integrate to 1.
WeightSpec bump_weight();
WeightSpec weight_by_name(const std::string& name);

std::vector<double> trend_values(const TrendSpec& t, const Design& d);
std::vector<double> weight_values(const WeightSpec& w, const Design& d);

// int u(x)^p r''(x)^2 dx over the weight's support (p = 1, or 2 when
// squared_weight is set).
double curvature_integral(const TrendSpec& t, const WeightSpec& w, bool squared_weight = false);

// int u(x)^power dx
double weight_integral(const WeightSpec& w, int power = 1);

}  // namespace bandsel
