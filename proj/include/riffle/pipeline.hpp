#pragma once

#include <concepts>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "riffle/core.hpp"

namespace riffle {

/// Transformers applied in order, followed by a final estimator.
///
/// A pipeline is a transformer when its last step is one and a classifier
/// when its last step is one. Steps are updated only in learn_one; the
/// predict and transform paths read them.
class Pipeline final : public Transformer, public Classifier {
 public:
  /// Nested pipelines are spliced in place, so composition is associative.
  /// Throws ValueError for no steps and ContractError when a step other
  /// than the last is not a transformer.
  explicit Pipeline(std::vector<std::unique_ptr<Estimator>> steps);

  Pipeline(const Pipeline& other);
  Pipeline& operator=(const Pipeline& other);
  Pipeline(Pipeline&&) noexcept = default;
  Pipeline& operator=(Pipeline&&) noexcept = default;

  std::string name() const override;
  std::unique_ptr<Estimator> clone() const override;
  bool is_transformer() const override { return steps_.back()->is_transformer(); }
  bool is_classifier() const override { return steps_.back()->is_classifier(); }
  std::string fingerprint() const override;

  void learn_one(const FeatureVector& x, const Label& y) override;
  void learn_one(const FeatureVector& x) override;
  ClassDistribution predict_proba_one(const FeatureVector& x) const override;
  FeatureVector transform_one(const FeatureVector& x) const override;

  using Classifier::learn_many;
  using Classifier::predict_one;

  std::size_t size() const noexcept { return steps_.size(); }
  const Estimator& step(std::size_t i) const { return *steps_.at(i); }

 private:
  FeatureVector transform_prefix(const FeatureVector& x) const;
  FeatureVector learn_prefix(const FeatureVector& x);
  Classifier& terminal_classifier() const;
  Transformer& transformer_at(std::size_t i) const;

  std::vector<std::unique_ptr<Estimator>> steps_;
};

Pipeline compose(std::vector<std::unique_ptr<Estimator>> steps);

template <class E>
concept EstimatorValue = std::derived_from<std::remove_cvref_t<E>, Estimator>;

template <EstimatorValue E>
std::unique_ptr<Estimator> boxed(E&& e) {
  return std::make_unique<std::remove_cvref_t<E>>(std::forward<E>(e));
}

/// `StandardScaler{} | LogisticRegression{}`
template <EstimatorValue A, EstimatorValue B>
Pipeline operator|(A&& a, B&& b) {
  std::vector<std::unique_ptr<Estimator>> steps;
  steps.push_back(boxed(std::forward<A>(a)));
  steps.push_back(boxed(std::forward<B>(b)));
  return compose(std::move(steps));
}

}  // namespace riffle
