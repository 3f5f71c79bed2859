#include "agpm/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace agpm {

double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

// Acklam's rational approximation, then Newton polish through the erfc-based
// CDF to push the residual to machine precision.
double inv_norm_cdf_approx(double q) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double q_low = 0.02425;
  if (q < q_low) {
    double r = std::sqrt(-2.0 * std::log(q));
    return (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
           ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }
  if (q > 1.0 - q_low) {
    double r = std::sqrt(-2.0 * std::log(1.0 - q));
    return -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
           ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }
  double r = q - 0.5;
  double t = r * r;
  return (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * r /
         (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
}

}  // namespace

double inv_norm_cdf(double q) {
  if (!(q > 0.0) || !(q < 1.0)) throw std::invalid_argument("quantile must be inside (0,1)");
  double z = inv_norm_cdf_approx(q);
  for (int i = 0; i < 2; ++i) {
    double err = norm_cdf(z) - q;
    double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
    if (pdf <= 0.0) break;
    z -= err / pdf;
  }
  return z;
}

ConvergenceReport predicted_error(const SampleAccumulator& acc, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) throw std::invalid_argument("delta must be inside (0,1)");
  ConvergenceReport rep;
  rep.n = acc.n;
  if (acc.n == 0) return rep;
  rep.hit_rate = static_cast<double>(acc.hits) / static_cast<double>(acc.n);
  rep.mu = acc.sum / static_cast<double>(acc.n);
  if (!(acc.sum > 0.0) || acc.n < 2) return rep;  // epsilon_hat stays +inf
  double var = acc.squared_sum / static_cast<double>(acc.n) - rep.mu * rep.mu;
  if (var < 0.0) var = 0.0;  // streaming round-off
  rep.sigma = std::sqrt(var / static_cast<double>(acc.n));
  rep.epsilon_hat = inv_norm_cdf(1.0 - delta / 2.0) * rep.sigma / rep.mu;
  return rep;
}

}  // namespace agpm
