#include "bandsel/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "bandsel/criteria.hpp"

namespace bandsel {

AsymptoticInputs make_asymptotic_inputs(const TrendSpec& trend, const WeightSpec& weight,
                                        const KernelMoments& moments, double sigma2,
                                        double cov_sum) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("make_asymptotic_inputs: sigma2 must be positive");
  AsymptoticInputs in;
  in.sigma2 = sigma2;
  in.second_moment = moments.second_moment;
  in.kg_sq = moments.kg_sq;
  in.a_const = curvature_integral(trend, weight, false) * moments.second_moment * moments.second_moment;
  in.b_const = weight_integral(weight, 1) * moments.k_sq;
  in.u_sq_int = weight_integral(weight, 2);
  in.u_sq_curv = curvature_integral(trend, weight, true);
  if (!(in.a_const > 0.0))
    throw std::invalid_argument("make_asymptotic_inputs: weighted curvature vanishes");
  in.c = std::pow(in.b_const * (sigma2 + 2.0 * cov_sum) / in.a_const, 0.2);
  return in;
}

double bandwidth_gap_variance(const AsymptoticInputs& in) {
  const double s = std::pow(in.sigma2, 0.6);  // sigma^{6/5}
  const double t1 = 4.0 * s / (25.0 * std::pow(in.a_const, 1.6) * std::pow(in.b_const, 0.4)) *
                    in.second_moment * in.second_moment * in.u_sq_curv;
  const double t2 = 8.0 * s / (25.0 * std::pow(in.a_const, 0.6) * std::pow(in.b_const, 1.4)) *
                    in.u_sq_int * in.kg_sq;
  return t1 + t2;
}

double bandwidth_gap_sd(const AsymptoticInputs& in, std::size_t n) {
  if (n == 0) throw std::invalid_argument("bandwidth_gap_sd: n must be positive");
  return std::sqrt(bandwidth_gap_variance(in)) * std::pow(static_cast<double>(n), -0.3);
}

double clt_variance(const AsymptoticInputs& in) {
  if (!(in.c > 0.0)) throw std::invalid_argument("clt_variance: need a positive bandwidth constant");
  const double c2 = in.c * in.c;
  const double c3 = c2 * in.c;
  const double kg_one_sided = in.kg_sq / 2.0;
  return c2 * in.second_moment * in.second_moment * in.sigma2 * in.u_sq_curv +
         4.0 / c3 * in.sigma2 * in.sigma2 * in.u_sq_int * kg_one_sided;
}

double quadform_variance(const AsymptoticInputs& in, std::size_t n, double h) {
  if (n == 0) throw std::invalid_argument("quadform_variance: n must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("quadform_variance: h must be positive");
  const double nd = static_cast<double>(n);
  const double kg_one_sided = in.kg_sq / 2.0;
  return h * h * in.sigma2 / nd * in.second_moment * in.second_moment * in.u_sq_curv +
         4.0 * in.sigma2 * in.sigma2 / (nd * nd * h * h * h) * in.u_sq_int * kg_one_sided;
}

}  // namespace bandsel
