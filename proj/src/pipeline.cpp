#include "riffle/pipeline.hpp"

#include "riffle/errors.hpp"

namespace riffle {

namespace {

std::vector<std::unique_ptr<Estimator>> flatten(std::vector<std::unique_ptr<Estimator>> steps) {
  std::vector<std::unique_ptr<Estimator>> flat;
  for (auto& step : steps) {
    if (step == nullptr) throw ValueError("pipeline step is null");
    if (auto* nested = dynamic_cast<Pipeline*>(step.get())) {
      for (std::size_t i = 0; i < nested->size(); ++i) flat.push_back(nested->step(i).clone());
    } else {
      flat.push_back(std::move(step));
    }
  }
  return flat;
}

}  // namespace

Pipeline::Pipeline(std::vector<std::unique_ptr<Estimator>> steps) : steps_(flatten(std::move(steps))) {
  if (steps_.empty()) throw ValueError("a pipeline needs at least one step");
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    if (!steps_[i]->is_transformer() || dynamic_cast<Transformer*>(steps_[i].get()) == nullptr) {
      throw ContractError("pipeline step " + std::to_string(i) + " (" + steps_[i]->name() +
                          ") is not a transformer; only the last step may be");
    }
  }
}

Pipeline::Pipeline(const Pipeline& other) : Estimator(other), Transformer(other), Classifier(other) {
  steps_.reserve(other.steps_.size());
  for (const auto& step : other.steps_) steps_.push_back(step->clone());
}

Pipeline& Pipeline::operator=(const Pipeline& other) {
  if (this != &other) {
    Pipeline copy(other);
    steps_ = std::move(copy.steps_);
  }
  return *this;
}

std::string Pipeline::name() const {
  std::string out;
  for (const auto& step : steps_) {
    if (!out.empty()) out += " | ";
    out += step->name();
  }
  return out;
}

std::unique_ptr<Estimator> Pipeline::clone() const { return std::make_unique<Pipeline>(*this); }

std::string Pipeline::fingerprint() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    out += "[" + std::to_string(i) + ":" + steps_[i]->name() + "]" + steps_[i]->fingerprint() + "\n";
  }
  return out;
}

Transformer& Pipeline::transformer_at(std::size_t i) const {
  auto* t = dynamic_cast<Transformer*>(steps_[i].get());
  if (t == nullptr || !steps_[i]->is_transformer()) {
    throw ContractError("pipeline step " + std::to_string(i) + " (" + steps_[i]->name() + ") is not a transformer");
  }
  return *t;
}

Classifier& Pipeline::terminal_classifier() const {
  auto* c = dynamic_cast<Classifier*>(steps_.back().get());
  if (c == nullptr || !steps_.back()->is_classifier()) {
    throw ContractError("last pipeline step (" + steps_.back()->name() + ") is not a classifier");
  }
  return *c;
}

FeatureVector Pipeline::transform_prefix(const FeatureVector& x) const {
  FeatureVector current = x;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) current = transformer_at(i).transform_one(current);
  return current;
}

FeatureVector Pipeline::learn_prefix(const FeatureVector& x) {
  FeatureVector current = x;
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    Transformer& t = transformer_at(i);
    t.learn_one(current);
    current = t.transform_one(current);
  }
  return current;
}

void Pipeline::learn_one(const FeatureVector& x, const Label& y) {
  if (steps_.back()->is_classifier()) {
    Classifier& last = terminal_classifier();
    last.learn_one(learn_prefix(x), y);
  } else {
    transformer_at(steps_.size() - 1).learn_one(learn_prefix(x));
  }
}

void Pipeline::learn_one(const FeatureVector& x) {
  Transformer& last = transformer_at(steps_.size() - 1);
  last.learn_one(learn_prefix(x));
}

ClassDistribution Pipeline::predict_proba_one(const FeatureVector& x) const {
  const Classifier& last = terminal_classifier();
  return last.predict_proba_one(transform_prefix(x));
}

FeatureVector Pipeline::transform_one(const FeatureVector& x) const {
  const Transformer& last = transformer_at(steps_.size() - 1);
  return last.transform_one(transform_prefix(x));
}

Pipeline compose(std::vector<std::unique_ptr<Estimator>> steps) { return Pipeline(std::move(steps)); }

}  // namespace riffle
