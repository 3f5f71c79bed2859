#pragma once

#include <cstdint>
#include <limits>

namespace agpm {

/// Standard normal CDF (erfc-based, accurate to a few ulp).
double norm_cdf(double z);

/// Inverse standard normal CDF for q in (0,1); |Phi(result) - q| <= 1e-10.
double inv_norm_cdf(double q);

/// Streaming sum / squared-sum statistics of sampled counts. Field-wise sums
/// merge accumulators, so per-worker partials combine in any order.
struct SampleAccumulator {
  uint64_t n = 0;
  uint64_t hits = 0;
  double sum = 0.0;
  double squared_sum = 0.0;

  void add(double value, bool hit) {
    ++n;
    if (hit) ++hits;
    sum += value;
    squared_sum += value * value;
  }
  void merge(const SampleAccumulator& other) {
    n += other.n;
    hits += other.hits;
    sum += other.sum;
    squared_sum += other.squared_sum;
  }
};

struct ConvergenceReport {
  double mu = 0.0;
  double sigma = 0.0;
  double epsilon_hat = std::numeric_limits<double>::infinity();
  uint64_t n = 0;
  bool converged = false;
  double hit_rate = 0.0;
};

/// Predicted relative error: epsilon_hat = Phi^-1(1 - delta/2) * sigma / mu
/// with sigma = sqrt((squared_sum/n - mu^2)/n). No hits yet means
/// epsilon_hat = +inf rather than a division error.
ConvergenceReport predicted_error(const SampleAccumulator& acc, double delta);

}  // namespace agpm
