#include "riffle/preprocessing.hpp"

#include <algorithm>
#include <vector>

namespace riffle {

std::string StandardScaler::fingerprint() const {
  std::vector<std::string> lines;
  lines.reserve(moments_.size());
  for (const auto& [name, m] : moments_) lines.push_back(name + ":" + m.fingerprint());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + ";";
  return out;
}

void StandardScaler::learn_one(const FeatureVector& x) {
  x.require_numeric();
  for (const auto& [name, value] : x) {
    auto it = moments_.find(name);
    if (it == moments_.end()) it = moments_.emplace(name, RunningMoments{}).first;
    it->second.update(value.number());
  }
}

FeatureVector StandardScaler::transform_one(const FeatureVector& x) const {
  FeatureVector out;
  out.reserve(x.size());
  for (const auto& [name, value] : x) {
    if (!value.is_numeric()) {
      out.set(name, value);
      continue;
    }
    auto it = moments_.find(name);
    const double std = it == moments_.end() ? 0.0 : it->second.stddev();
    out.set(name, std > 0.0 ? (value.number() - it->second.mean()) / std : 0.0);
  }
  return out;
}

const RunningMoments* StandardScaler::moments(const std::string& feature) const {
  auto it = moments_.find(feature);
  return it == moments_.end() ? nullptr : &it->second;
}

}  // namespace riffle
