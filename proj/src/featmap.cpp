#include "riffle/featmap.hpp"

#include <cmath>
#include <sstream>

#include "riffle/errors.hpp"

namespace riffle {

FeatureValue::FeatureValue(double v) : value_(v) {
  if (!std::isfinite(v)) throw ValueError("feature values must be finite");
}

double FeatureValue::number() const {
  if (const double* v = std::get_if<double>(&value_)) return *v;
  throw TypeError("categorical value '" + std::get<std::string>(value_) + "' used as a number");
}

const std::string& FeatureValue::token() const {
  if (const std::string* s = std::get_if<std::string>(&value_)) return *s;
  throw TypeError("numeric value used as a category");
}

std::string FeatureValue::to_string() const {
  if (is_categorical()) return std::get<std::string>(value_);
  std::ostringstream out;
  out.precision(17);
  out << std::get<double>(value_);
  return out.str();
}

FeatureVector::FeatureVector(std::initializer_list<std::pair<std::string, FeatureValue>> entries) {
  entries_.reserve(entries.size());
  for (const auto& [name, value] : entries) set(name, value);
}

void FeatureVector::set(std::string name, FeatureValue value) {
  if (name.empty()) throw ValueError("feature names must be non-empty");
  entries_.insert_or_assign(std::move(name), std::move(value));
}

bool FeatureVector::erase(std::string_view name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) return false;
  entries_.erase(it);
  return true;
}

const FeatureValue* FeatureVector::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

double FeatureVector::number(std::string_view name) const {
  const FeatureValue* v = find(name);
  if (v == nullptr) return 0.0;
  if (!v->is_numeric()) throw TypeError("feature '" + std::string(name) + "' is categorical");
  return v->number();
}

void FeatureVector::require_numeric() const {
  for (const auto& [name, value] : entries_) {
    if (!value.is_numeric()) {
      throw TypeError("feature '" + name + "' is categorical ('" + value.token() + "')");
    }
  }
}

namespace {

template <class Op>
FeatureVector union_op(const FeatureVector& a, const FeatureVector& b, Op op) {
  a.require_numeric();
  b.require_numeric();
  FeatureVector out;
  out.reserve(a.size() + b.size());
  for (const auto& [name, value] : a) out.set(name, op(value.number(), b.number(name)));
  for (const auto& [name, value] : b) {
    if (!a.contains(name)) out.set(name, op(0.0, value.number()));
  }
  return out;
}

template <class Op>
FeatureVector intersection_op(const FeatureVector& a, const FeatureVector& b, Op op) {
  a.require_numeric();
  b.require_numeric();
  FeatureVector out;
  for (const auto& [name, value] : a) {
    if (const FeatureValue* other = b.find(name)) out.set(name, op(name, value.number(), other->number()));
  }
  return out;
}

}  // namespace

FeatureVector operator+(const FeatureVector& a, const FeatureVector& b) {
  return union_op(a, b, [](double l, double r) { return l + r; });
}

FeatureVector operator-(const FeatureVector& a, const FeatureVector& b) {
  return union_op(a, b, [](double l, double r) { return l - r; });
}

FeatureVector operator*(const FeatureVector& a, const FeatureVector& b) {
  return intersection_op(a, b, [](const std::string&, double l, double r) { return l * r; });
}

FeatureVector operator/(const FeatureVector& a, const FeatureVector& b) {
  return intersection_op(a, b, [](const std::string& name, double l, double r) {
    if (r == 0.0) throw ArithmeticError("division by zero at feature '" + name + "'");
    return l / r;
  });
}

FeatureVector pow(const FeatureVector& a, double exponent) {
  if (!std::isfinite(exponent)) throw ValueError("exponent must be finite");
  a.require_numeric();
  const bool integral = std::trunc(exponent) == exponent;
  FeatureVector out;
  out.reserve(a.size());
  for (const auto& [name, value] : a) {
    const double base = value.number();
    if (base < 0.0 && !integral) {
      throw ArithmeticError("negative base at feature '" + name + "' with fractional exponent");
    }
    const double result = std::pow(base, exponent);
    if (!std::isfinite(result)) throw ArithmeticError("power overflows at feature '" + name + "'");
    out.set(name, result);
  }
  return out;
}

double dot(const FeatureVector& a, const FeatureVector& b) {
  a.require_numeric();
  b.require_numeric();
  const FeatureVector& small = a.size() <= b.size() ? a : b;
  const FeatureVector& large = a.size() <= b.size() ? b : a;
  double sum = 0.0;
  for (const auto& [name, value] : small) {
    if (const FeatureValue* other = large.find(name)) sum += value.number() * other->number();
  }
  return sum;
}

}  // namespace riffle
