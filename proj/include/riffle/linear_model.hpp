#pragma once

#include <optional>
#include <string>

#include "riffle/core.hpp"

namespace riffle {

/// Binary logistic regression trained by plain SGD on the log-loss.
///
/// The label universe is discovered from the stream: the first two distinct
/// labels define it and the larger of the two (in Label order) is the
/// positive class. While only one label has been seen it is provisionally
/// positive; when a smaller second label shows up nothing changes, when a
/// larger one shows up the weights and bias are negated, which turns
/// p(first) into 1 - p(first) exactly. A third label is a ContractError.
class LogisticRegression final : public Classifier {
 public:
  struct Params {
    double learning_rate = 0.01;
    double l2 = 0.0;
  };

  LogisticRegression() : LogisticRegression(Params{}) {}
  explicit LogisticRegression(Params params);

  std::string name() const override { return "LogisticRegression"; }
  std::unique_ptr<Estimator> clone() const override { return std::make_unique<LogisticRegression>(*this); }
  std::string fingerprint() const override;

  void learn_one(const FeatureVector& x, const Label& y) override;
  ClassDistribution predict_proba_one(const FeatureVector& x) const override;

  /// p(positive | x); requires a numeric x.
  double positive_probability(const FeatureVector& x) const;

  const FeatureVector& weights() const noexcept { return weights_; }
  double bias() const noexcept { return bias_; }
  const Params& params() const noexcept { return params_; }
  const std::optional<Label>& negative_label() const noexcept { return negative_; }
  const std::optional<Label>& positive_label() const noexcept { return positive_; }

  /// Mean log-loss of (x, y) at the current state, y = 1 for the positive
  /// class. Used for gradient checks.
  double log_loss(const FeatureVector& x, bool positive) const;

  /// Overwrites the state. Meant for tests and warm starts.
  void set_state(FeatureVector weights, double bias);

 private:
  void register_label(const Label& y);

  Params params_;
  FeatureVector weights_;
  double bias_ = 0.0;
  std::optional<Label> negative_;
  std::optional<Label> positive_;
};

}  // namespace riffle
