#pragma once

#include <string>
#include <unordered_map>

#include "riffle/core.hpp"
#include "riffle/stats.hpp"

namespace riffle {

/// Incremental z-scoring with per-feature running moments.
///
/// transform_one maps each numeric feature to (v - mean) / std using the
/// population standard deviation. Features never learned, or with zero
/// spread so far, map to 0. Categorical values pass through untouched.
class StandardScaler final : public Transformer {
 public:
  std::string name() const override { return "StandardScaler"; }
  std::unique_ptr<Estimator> clone() const override { return std::make_unique<StandardScaler>(*this); }
  std::string fingerprint() const override;

  /// TypeError on categorical values; nothing is updated in that case.
  void learn_one(const FeatureVector& x) override;
  FeatureVector transform_one(const FeatureVector& x) const override;

  /// Moments of `feature`, or nullptr if it was never seen.
  const RunningMoments* moments(const std::string& feature) const;
  std::size_t n_features() const noexcept { return moments_.size(); }

 private:
  std::unordered_map<std::string, RunningMoments, NameHash, std::equal_to<>> moments_;
};

}  // namespace riffle
