#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riffle/featmap.hpp"

namespace riffle {

/// Class label: an integer id or a text token. Integer ids order before
/// tokens; within a kind the natural order applies.
class Label {
 public:
  Label() : value_(std::int64_t{0}) {}
  Label(std::int64_t id) : value_(id) {}  // NOLINT
  Label(int id) : value_(std::int64_t{id}) {}  // NOLINT
  Label(std::string token) : value_(std::move(token)) {}  // NOLINT
  Label(const char* token) : value_(std::string(token)) {}  // NOLINT

  bool is_id() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t id() const { return std::get<std::int64_t>(value_); }
  const std::string& token() const { return std::get<std::string>(value_); }

  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    if (a.is_id()) return a.id() <=> b.id();
    return a.token().compare(b.token()) <=> 0;
  }

  std::size_t hash() const noexcept { return std::hash<std::variant<std::int64_t, std::string>>{}(value_); }

 private:
  std::variant<std::int64_t, std::string> value_;
};

/// Probabilities over labels. Empty (nothing learned yet) or summing to 1.
class ClassDistribution {
 public:
  using Map = std::map<Label, double>;

  ClassDistribution() = default;

  bool empty() const noexcept { return probs_.empty(); }
  std::size_t size() const noexcept { return probs_.size(); }
  /// 0 for labels not in the support.
  double operator[](const Label& label) const;
  const Map& probabilities() const noexcept { return probs_; }
  Map::const_iterator begin() const noexcept { return probs_.begin(); }
  Map::const_iterator end() const noexcept { return probs_.end(); }

  friend bool operator==(const ClassDistribution&, const ClassDistribution&) = default;
  friend ClassDistribution normalize(const std::map<Label, double>& raw);

 private:
  Map probs_;
};

/// Scales nonnegative weights to sum to one; an all-zero input yields the
/// uniform distribution over its labels. ValueError on empty, negative or
/// non-finite input.
ClassDistribution normalize(const std::map<Label, double>& raw);

/// Most probable label, ties to the smallest label. nullopt when empty.
std::optional<Label> argmax_label(const ClassDistribution& dist);

struct Row {
  FeatureVector x;
  std::optional<Label> y;
};

/// Ordered mini-batch; row order is significant.
using SampleBatch = std::vector<Row>;

class Estimator {
 public:
  virtual ~Estimator() = default;

  virtual std::string name() const = 0;
  virtual std::unique_ptr<Estimator> clone() const = 0;
  virtual bool is_transformer() const { return false; }
  virtual bool is_classifier() const { return false; }

  /// Exact textual dump of the learned state. Two estimators with equal
  /// fingerprints behave identically.
  virtual std::string fingerprint() const = 0;

 protected:
  Estimator() = default;
  Estimator(const Estimator&) = default;
  Estimator& operator=(const Estimator&) = default;
};

/// Unsupervised, stateful feature mapping.
class Transformer : public virtual Estimator {
 public:
  bool is_transformer() const override { return true; }

  virtual void learn_one(const FeatureVector& x) = 0;
  virtual FeatureVector transform_one(const FeatureVector& x) const = 0;

  /// Ordered fold of learn_one; labels are ignored.
  void learn_many(const SampleBatch& batch);
};

class Classifier : public virtual Estimator {
 public:
  bool is_classifier() const override { return true; }

  virtual void learn_one(const FeatureVector& x, const Label& y) = 0;
  /// Never mutates state. Empty before anything was learned.
  virtual ClassDistribution predict_proba_one(const FeatureVector& x) const = 0;

  std::optional<Label> predict_one(const FeatureVector& x) const {
    return argmax_label(predict_proba_one(x));
  }

  /// Ordered fold of learn_one. Every row must carry a label; the batch is
  /// validated before any row is learned.
  void learn_many(const SampleBatch& batch);
};

/// Hex-float rendering used by fingerprints.
std::string exact(double v);

}  // namespace riffle

template <>
struct std::hash<riffle::Label> {
  std::size_t operator()(const riffle::Label& l) const noexcept { return l.hash(); }
};
