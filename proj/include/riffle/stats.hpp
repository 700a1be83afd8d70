#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace riffle {

/// Single-pass count/mean/M2 accumulator (Welford). Variance is the
/// population variance m2 / count.
class RunningMoments {
 public:
  void update(double v) noexcept {
    ++count_;
    const double delta = v - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (v - mean_);
    if (m2_ < 0.0) m2_ = 0.0;
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double m2() const noexcept { return m2_; }
  double variance() const noexcept { return count_ == 0 ? 0.0 : m2_ / static_cast<double>(count_); }
  double stddev() const noexcept { return std::sqrt(variance()); }

  std::string fingerprint() const;

  friend bool operator==(const RunningMoments&, const RunningMoments&) = default;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// log N(x; mean, variance). `variance` must be positive.
double log_normal_density(double x, double mean, double variance);

/// P(X <= x) for X ~ N(mean, stddev^2); a step at the mean when stddev is 0.
double normal_cdf(double x, double mean, double stddev);

/// 1 / (1 + e^-z) without overflow for large |z|.
double sigmoid(double z);

}  // namespace riffle
