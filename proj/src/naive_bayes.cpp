#include "riffle/naive_bayes.hpp"

#include <vector>

#include "riffle/errors.hpp"

namespace riffle {

double variance_floor(const MomentsByFeature& global) {
  double largest = 0.0;
  for (const auto& [name, m] : global) largest = std::max(largest, m.variance());
  return 1e-9 * (largest > 0.0 ? largest : 1.0);
}

std::string GaussianNB::fingerprint() const {
  std::string out;
  for (const auto& [label, n] : counts_) {
    out += label.to_string() + ":" + std::to_string(n) + "{";
    std::vector<std::string> lines;
    for (const auto& [name, m] : per_class_.at(label)) lines.push_back(name + ":" + m.fingerprint());
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) out += line + ";";
    out += "}";
  }
  return out;
}

void GaussianNB::learn_one(const FeatureVector& x, const Label& y) {
  x.require_numeric();
  ++counts_[y];
  ++total_;
  MomentsByFeature& moments = per_class_[y];
  for (const auto& [name, value] : x) {
    const double v = value.number();
    auto it = moments.find(name);
    if (it == moments.end()) it = moments.emplace(name, RunningMoments{}).first;
    it->second.update(v);
    auto git = global_.find(name);
    if (git == global_.end()) git = global_.emplace(name, RunningMoments{}).first;
    git->second.update(v);
  }
}

ClassDistribution GaussianNB::predict_proba_one(const FeatureVector& x) const {
  if (total_ == 0) return {};
  return gaussian_posterior(counts_, x, riffle::variance_floor(global_),
                            [this](const Label& y, const std::string& f) { return moments(y, f); });
}

double GaussianNB::prior(const Label& y) const {
  auto it = counts_.find(y);
  if (it == counts_.end() || total_ == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total_);
}

const RunningMoments* GaussianNB::moments(const Label& y, std::string_view feature) const {
  auto cit = per_class_.find(y);
  if (cit == per_class_.end()) return nullptr;
  auto it = cit->second.find(feature);
  return it == cit->second.end() ? nullptr : &it->second;
}

}  // namespace riffle
