#include "riffle/core.hpp"

#include <cmath>
#include <cstdio>

#include "riffle/errors.hpp"

namespace riffle {

std::string Label::to_string() const {
  return is_id() ? std::to_string(id()) : token();
}

double ClassDistribution::operator[](const Label& label) const {
  auto it = probs_.find(label);
  return it == probs_.end() ? 0.0 : it->second;
}

ClassDistribution normalize(const std::map<Label, double>& raw) {
  if (raw.empty()) throw ValueError("cannot normalize an empty distribution");
  double total = 0.0;
  for (const auto& [label, w] : raw) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ValueError("weight for label '" + label.to_string() + "' must be finite and nonnegative");
    }
    total += w;
  }
  ClassDistribution out;
  const double uniform = 1.0 / static_cast<double>(raw.size());
  for (const auto& [label, w] : raw) out.probs_.emplace(label, total > 0.0 ? w / total : uniform);
  return out;
}

std::optional<Label> argmax_label(const ClassDistribution& dist) {
  std::optional<Label> best;
  double best_p = -1.0;
  // Ascending label order, strict comparison: ties keep the smaller label.
  for (const auto& [label, p] : dist) {
    if (p > best_p) {
      best = label;
      best_p = p;
    }
  }
  return best;
}

void Transformer::learn_many(const SampleBatch& batch) {
  for (const Row& row : batch) learn_one(row.x);
}

void Classifier::learn_many(const SampleBatch& batch) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (!batch[i].y) throw ValueError("row " + std::to_string(i) + " has no label");
  }
  for (const Row& row : batch) learn_one(row.x, *row.y);
}

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

}  // namespace riffle
