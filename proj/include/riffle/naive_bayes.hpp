#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "riffle/core.hpp"
#include "riffle/stats.hpp"

namespace riffle {

using MomentsByFeature = std::unordered_map<std::string, RunningMoments, NameHash, std::equal_to<>>;

/// 1e-9 times the largest variance in `global`, or 1e-9 when no feature
/// has a positive variance yet.
double variance_floor(const MomentsByFeature& global);

/// Gaussian naive Bayes posterior.
///
/// Each class with a positive count scores log(count / total) plus, for
/// every numeric feature of x, log N(x_f; mean, variance + floor). A
/// (class, feature) pair without moments scores N(x_f; 0, floor).
/// `moments_of(label, feature)` returns the moments or nullptr. Categorical
/// features are skipped. Returns the softmax of the scores.
template <class MomentsLookup>
ClassDistribution gaussian_posterior(const std::map<Label, std::uint64_t>& class_counts,
                                     const FeatureVector& x, double floor,
                                     MomentsLookup&& moments_of) {
  std::map<Label, double> scores;
  std::uint64_t total = 0;
  for (const auto& [label, n] : class_counts) total += n;
  if (total == 0) return {};

  double best = -INFINITY;
  for (const auto& [label, n] : class_counts) {
    if (n == 0) continue;
    double score = std::log(static_cast<double>(n) / static_cast<double>(total));
    for (const auto& [feature, value] : x) {
      if (!value.is_numeric()) continue;
      const RunningMoments* m = moments_of(label, feature);
      score += m != nullptr ? log_normal_density(value.number(), m->mean(), m->variance() + floor)
                            : log_normal_density(value.number(), 0.0, floor);
    }
    scores.emplace(label, score);
    best = std::max(best, score);
  }
  for (auto& [label, score] : scores) score = std::exp(score - best);
  return normalize(scores);
}

class GaussianNB final : public Classifier {
 public:
  std::string name() const override { return "GaussianNB"; }
  std::unique_ptr<Estimator> clone() const override { return std::make_unique<GaussianNB>(*this); }
  std::string fingerprint() const override;

  /// TypeError on categorical values; nothing is updated in that case.
  void learn_one(const FeatureVector& x, const Label& y) override;
  ClassDistribution predict_proba_one(const FeatureVector& x) const override;

  const std::map<Label, std::uint64_t>& class_counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }
  double prior(const Label& y) const;
  /// Moments for (y, feature), or nullptr if that pair was never observed.
  const RunningMoments* moments(const Label& y, std::string_view feature) const;
  double variance_floor() const { return riffle::variance_floor(global_); }

 private:
  std::map<Label, std::uint64_t> counts_;
  std::map<Label, MomentsByFeature> per_class_;
  MomentsByFeature global_;
  std::uint64_t total_ = 0;
};

}  // namespace riffle
