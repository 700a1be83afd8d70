#include "riffle/linear_model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "riffle/errors.hpp"
#include "riffle/stats.hpp"

namespace riffle {

LogisticRegression::LogisticRegression(Params params) : params_(params) {
  if (!(params_.learning_rate > 0.0) || !std::isfinite(params_.learning_rate)) {
    throw ValueError("learning rate must be positive");
  }
  if (!(params_.l2 >= 0.0) || !std::isfinite(params_.l2)) throw ValueError("l2 must be nonnegative");
}

std::string LogisticRegression::fingerprint() const {
  std::vector<std::string> lines;
  for (const auto& [name, w] : weights_) lines.push_back(name + "=" + exact(w.number()));
  std::sort(lines.begin(), lines.end());
  std::string out = "neg=" + (negative_ ? negative_->to_string() : "-") +
                    ",pos=" + (positive_ ? positive_->to_string() : "-") + ",bias=" + exact(bias_) + ";";
  for (const auto& line : lines) out += line + ";";
  return out;
}

void LogisticRegression::register_label(const Label& y) {
  if (!positive_) {
    positive_ = y;
    return;
  }
  if (y == *positive_ || (negative_ && y == *negative_)) return;
  if (negative_) {
    throw ContractError("LogisticRegression is binary; got a third label '" + y.to_string() + "'");
  }
  if (y < *positive_) {
    negative_ = y;
    return;
  }
  // The provisional positive label turns out to be the negative one:
  // sigma(-z) = 1 - sigma(z), so negating the parameters keeps p(first).
  negative_ = positive_;
  positive_ = y;
  FeatureVector flipped;
  flipped.reserve(weights_.size());
  for (const auto& [name, w] : weights_) flipped.set(name, -w.number());
  weights_ = std::move(flipped);
  bias_ = -bias_;
}

double LogisticRegression::positive_probability(const FeatureVector& x) const {
  return sigmoid(dot(weights_, x) + bias_);
}

ClassDistribution LogisticRegression::predict_proba_one(const FeatureVector& x) const {
  if (!positive_) return {};
  if (!negative_) return normalize({{*positive_, 1.0}});
  const double p = positive_probability(x);
  return normalize({{*negative_, 1.0 - p}, {*positive_, p}});
}

void LogisticRegression::learn_one(const FeatureVector& x, const Label& y) {
  x.require_numeric();
  register_label(y);
  const double target = y == *positive_ ? 1.0 : 0.0;
  const double g = positive_probability(x) - target;
  const double lr = params_.learning_rate;
  for (const auto& [name, value] : x) {
    const double w = weights_.number(name);
    weights_.set(name, w - lr * (g * value.number() + params_.l2 * w));
  }
  bias_ -= lr * g;
}

double LogisticRegression::log_loss(const FeatureVector& x, bool positive) const {
  const double z = dot(weights_, x) + bias_;
  // -log sigma(z) = log(1 + e^-z), evaluated without overflow.
  const double m = positive ? -z : z;
  return m > 0.0 ? m + std::log1p(std::exp(-m)) : std::log1p(std::exp(m));
}

void LogisticRegression::set_state(FeatureVector weights, double bias) {
  weights.require_numeric();
  weights_ = std::move(weights);
  bias_ = bias;
}

}  // namespace riffle
