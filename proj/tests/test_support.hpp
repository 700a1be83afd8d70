#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>

#include "riffle/featmap.hpp"

namespace riffle::testing {

/// Random numeric vector over names "f0".."f{universe-1}", each name kept
/// with probability 1/2. Values uniform in [lo, hi], or integers when
/// `integral` is set.
inline FeatureVector random_vector(std::mt19937_64& rng, int universe, double lo, double hi, bool integral = false) {
  std::uniform_real_distribution<double> value(lo, hi);
  std::bernoulli_distribution keep(0.5);
  FeatureVector v;
  for (int i = 0; i < universe; ++i) {
    if (!keep(rng)) continue;
    const double x = value(rng);
    v.set("f" + std::to_string(i), integral ? std::round(x) : x);
  }
  return v;
}

/// Dense view over a fixed name universe; absent names are 0.
inline std::map<std::string, double> densify(const FeatureVector& v, int universe) {
  std::map<std::string, double> out;
  for (int i = 0; i < universe; ++i) out["f" + std::to_string(i)] = v.number("f" + std::to_string(i));
  return out;
}

}  // namespace riffle::testing
