#pragma once

// Name-keyed sparse vectors. Absent names read as numeric zero.
//
// Addition and subtraction run over the union of names, multiplication,
// division and the dot product over the intersection. Any algebraic
// operation that meets a categorical value throws TypeError naming it.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>

namespace riffle {

/// Either a finite real or a categorical token.
class FeatureValue {
 public:
  FeatureValue() : value_(0.0) {}
  FeatureValue(double v);  // NOLINT: implicit on purpose, throws on NaN/inf
  FeatureValue(int v) : FeatureValue(static_cast<double>(v)) {}  // NOLINT
  FeatureValue(std::string token) : value_(std::move(token)) {}  // NOLINT
  FeatureValue(const char* token) : value_(std::string(token)) {}  // NOLINT

  bool is_numeric() const noexcept { return std::holds_alternative<double>(value_); }
  bool is_categorical() const noexcept { return !is_numeric(); }

  /// Numeric payload; throws TypeError for categorical values.
  double number() const;
  /// Categorical payload; throws TypeError for numeric values.
  const std::string& token() const;

  std::string to_string() const;

  friend bool operator==(const FeatureValue&, const FeatureValue&) = default;

 private:
  std::variant<double, std::string> value_;
};

struct NameHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

class FeatureVector {
 public:
  using Map = std::unordered_map<std::string, FeatureValue, NameHash, std::equal_to<>>;
  using const_iterator = Map::const_iterator;

  FeatureVector() = default;
  FeatureVector(std::initializer_list<std::pair<std::string, FeatureValue>> entries);

  /// Inserts or replaces. Empty names are rejected with ValueError.
  void set(std::string name, FeatureValue value);
  bool erase(std::string_view name);

  bool contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }
  const FeatureValue* find(std::string_view name) const;

  /// Numeric value of `name`, 0 when absent. TypeError when categorical.
  double number(std::string_view name) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  void reserve(std::size_t n) { entries_.reserve(n); }

  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }

  /// Throws TypeError naming the first categorical entry, if any.
  void require_numeric() const;

  friend bool operator==(const FeatureVector& a, const FeatureVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

FeatureVector operator+(const FeatureVector& a, const FeatureVector& b);
FeatureVector operator-(const FeatureVector& a, const FeatureVector& b);
FeatureVector operator*(const FeatureVector& a, const FeatureVector& b);
/// Elementwise quotient over shared names. ArithmeticError on a zero divisor.
FeatureVector operator/(const FeatureVector& a, const FeatureVector& b);

/// Elementwise power. ArithmeticError for a negative base with a
/// non-integral exponent; ValueError for a non-finite exponent.
FeatureVector pow(const FeatureVector& a, double exponent);

double dot(const FeatureVector& a, const FeatureVector& b);

}  // namespace riffle
