#include "riffle/stats.hpp"

#include <numbers>

#include "riffle/core.hpp"

namespace riffle {

std::string RunningMoments::fingerprint() const {
  return "n=" + std::to_string(count_) + ",mean=" + exact(mean_) + ",m2=" + exact(m2_);
}

double log_normal_density(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * variance) + d * d / variance);
}

double normal_cdf(double x, double mean, double stddev) {
  if (stddev <= 0.0) return x < mean ? 0.0 : 1.0;
  return 0.5 * std::erfc(-(x - mean) / (stddev * std::numbers::sqrt2));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace riffle
