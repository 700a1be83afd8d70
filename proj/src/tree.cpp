#include "riffle/tree.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "riffle/errors.hpp"
#include "riffle/naive_bayes.hpp"

namespace riffle {

double entropy(const ClassMass& counts) {
  double total = 0.0;
  for (const auto& [label, c] : counts) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ValueError("class counts must be finite and nonnegative");
    total += c;
  }
  if (total <= 0.0) throw ValueError("entropy needs at least one positive count");
  double h = 0.0;
  for (const auto& [label, c] : counts) {
    if (c > 0.0) {
      const double p = c / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

double hoeffding_bound(double range, double delta, double n) {
  return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * n));
}

// GaussianObserver

void GaussianObserver::update(double value, const Label& y) {
  auto [it, inserted] = per_class_.try_emplace(y);
  ClassSummary& s = it->second;
  if (inserted) {
    s.min = value;
    s.max = value;
  } else {
    s.min = std::min(s.min, value);
    s.max = std::max(s.max, value);
  }
  s.moments.update(value);
  if (pooled_.count() == 0) {
    min_ = value;
    max_ = value;
  } else {
    min_ = std::min(min_, value);
    max_ = std::max(max_, value);
  }
  pooled_.update(value);
}

const RunningMoments* GaussianObserver::moments(const Label& y) const {
  auto it = per_class_.find(y);
  return it == per_class_.end() ? nullptr : &it->second.moments;
}

std::pair<ClassMass, ClassMass> GaussianObserver::split_masses(double threshold) const {
  ClassMass left;
  ClassMass right;
  for (const auto& [label, s] : per_class_) {
    const double n = static_cast<double>(s.moments.count());
    if (threshold < s.min) {
      right[label] += n;
    } else if (threshold >= s.max) {
      left[label] += n;
    } else {
      const double below = normal_cdf(threshold, s.moments.mean(), s.moments.stddev()) * n;
      left[label] += below;
      right[label] += n - below;
    }
  }
  return {std::move(left), std::move(right)};
}

namespace {

double mass(const ClassMass& m) {
  double total = 0.0;
  for (const auto& [label, c] : m) total += c;
  return total;
}

}  // namespace

std::optional<SplitSuggestion> GaussianObserver::best_split(const std::string& feature, const ClassMass& pre_split,
                                                            std::size_t n_points) const {
  const auto n_classes = std::count_if(pre_split.begin(), pre_split.end(), [](const auto& kv) { return kv.second > 0.0; });
  if (n_classes < 2 || !(max_ > min_) || n_points == 0) return std::nullopt;

  const double h_pre = entropy(pre_split);
  std::optional<SplitSuggestion> best;
  for (std::size_t i = 1; i <= n_points; ++i) {
    const double threshold = min_ + (max_ - min_) * static_cast<double>(i) / static_cast<double>(n_points + 1);
    const auto [left, right] = split_masses(threshold);
    const double w_left = mass(left);
    const double w_right = mass(right);
    const double w_total = w_left + w_right;
    if (w_total <= 0.0) continue;
    double h_post = 0.0;
    if (w_left > 0.0) h_post += w_left / w_total * entropy(left);
    if (w_right > 0.0) h_post += w_right / w_total * entropy(right);
    const double merit = std::max(0.0, h_pre - h_post);
    if (!best || merit > best->merit) best = SplitSuggestion{feature, threshold, merit};
  }
  return best;
}

// Trace records

std::string to_json_line(const SplitAttempt& a) {
  nlohmann::json j;
  j["leaf"] = a.leaf_id;
  j["n"] = a.n;
  j["classes"] = a.n_classes;
  if (a.best) {
    j["feature"] = a.best->feature;
    j["threshold"] = a.best->threshold;
    j["best_merit"] = a.best->merit;
  } else {
    j["feature"] = nullptr;
    j["threshold"] = nullptr;
    j["best_merit"] = nullptr;
  }
  j["second_merit"] = a.second_merit;
  j["epsilon"] = a.epsilon;
  j["split"] = a.split;
  return j.dump();
}

SplitAttempt split_attempt_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  SplitAttempt a;
  a.leaf_id = j.at("leaf").get<std::uint64_t>();
  a.n = j.at("n").get<std::uint64_t>();
  a.n_classes = j.at("classes").get<std::size_t>();
  if (!j.at("feature").is_null()) {
    a.best = SplitSuggestion{j.at("feature").get<std::string>(), j.at("threshold").get<double>(),
                             j.at("best_merit").get<double>()};
  }
  a.second_merit = j.at("second_merit").get<double>();
  a.epsilon = j.at("epsilon").get<double>();
  a.split = j.at("split").get<bool>();
  return a;
}

// HoeffdingTreeClassifier

HoeffdingTreeClassifier::HoeffdingTreeClassifier(HoeffdingTreeParams params) : params_(params) {
  if (!(params_.delta > 0.0 && params_.delta < 1.0)) throw ValueError("delta must lie in (0, 1)");
  if (!(params_.tau >= 0.0)) throw ValueError("tau must be nonnegative");
  if (params_.grace_period == 0) throw ValueError("grace period must be positive");
}

std::unique_ptr<Estimator> HoeffdingTreeClassifier::clone() const {
  auto copy = std::make_unique<HoeffdingTreeClassifier>(*this);
  copy->trace_ = nullptr;
  return copy;
}

std::string HoeffdingTreeClassifier::fingerprint() const {
  std::string out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out += std::to_string(i) + ":";
    if (const auto* split = std::get_if<SplitNode>(&nodes_[i])) {
      out += "split " + split->feature + "<=" + exact(split->threshold) + " -> " + std::to_string(split->left) +
             "," + std::to_string(split->right) + "\n";
      continue;
    }
    const auto& leaf = std::get<LeafNode>(nodes_[i]);
    out += "leaf#" + std::to_string(leaf.id) + " n=" + std::to_string(leaf.total) +
           " last=" + std::to_string(leaf.last_split_attempt_total) + " mc=" + std::to_string(leaf.majority_correct) +
           " nb=" + std::to_string(leaf.naive_bayes_correct) + " {";
    for (const auto& [label, n] : leaf.class_counts) out += label.to_string() + ":" + std::to_string(n) + ",";
    out += "}";
    std::vector<std::string> names;
    for (const auto& [name, obs] : leaf.observers) names.push_back(name);
    std::sort(names.begin(), names.end());
    for (const auto& name : names) {
      const auto& obs = leaf.observers.at(name);
      out += " " + name + "[";
      for (const auto& [label, s] : obs.per_class()) {
        out += label.to_string() + ":" + s.moments.fingerprint() + "," + exact(s.min) + "," + exact(s.max) + ";";
      }
      out += "]";
    }
    out += "\n";
  }
  return out;
}

std::size_t HoeffdingTreeClassifier::route(const FeatureVector& x) const {
  std::size_t index = 0;
  while (const auto* split = std::get_if<SplitNode>(&nodes_[index])) {
    const FeatureValue* v = x.find(split->feature);
    const bool right = v != nullptr && v->is_numeric() && v->number() > split->threshold;
    index = right ? split->right : split->left;
  }
  return index;
}

const LeafNode& HoeffdingTreeClassifier::leaf_for(const FeatureVector& x) const {
  return std::get<LeafNode>(nodes_[route(x)]);
}

ClassDistribution HoeffdingTreeClassifier::leaf_naive_bayes(const LeafNode& leaf, const FeatureVector& x) const {
  if (leaf.total == 0) return {};
  double largest = 0.0;
  for (const auto& [name, obs] : leaf.observers) largest = std::max(largest, obs.pooled().variance());
  const double floor = 1e-9 * (largest > 0.0 ? largest : 1.0);
  return gaussian_posterior(leaf.class_counts, x, floor, [&leaf](const Label& y, const std::string& feature) {
    auto it = leaf.observers.find(feature);
    return it == leaf.observers.end() ? nullptr : it->second.moments(y);
  });
}

namespace {

ClassDistribution majority(const LeafNode& leaf) {
  if (leaf.total == 0) return {};
  std::map<Label, double> raw;
  for (const auto& [label, n] : leaf.class_counts) raw.emplace(label, static_cast<double>(n));
  return normalize(raw);
}

}  // namespace

ClassDistribution HoeffdingTreeClassifier::leaf_prediction(const LeafNode& leaf, const FeatureVector& x) const {
  switch (params_.leaf_prediction) {
    case LeafPrediction::majority:
      return majority(leaf);
    case LeafPrediction::naive_bayes:
      return leaf_naive_bayes(leaf, x);
    case LeafPrediction::naive_bayes_adaptive:
      return leaf.majority_correct >= leaf.naive_bayes_correct ? majority(leaf) : leaf_naive_bayes(leaf, x);
  }
  return {};
}

LeafNode HoeffdingTreeClassifier::new_leaf() {
  LeafNode leaf;
  leaf.id = next_leaf_id_++;
  return leaf;
}

ClassDistribution HoeffdingTreeClassifier::predict_proba_one(const FeatureVector& x) const {
  if (nodes_.empty()) return {};
  return leaf_prediction(leaf_for(x), x);
}

void HoeffdingTreeClassifier::learn_one(const FeatureVector& x, const Label& y) {
  x.require_numeric();
  if (nodes_.empty()) nodes_.emplace_back(new_leaf());

  const std::size_t index = route(x);
  auto& leaf = std::get<LeafNode>(nodes_[index]);

  if (params_.leaf_prediction == LeafPrediction::naive_bayes_adaptive && leaf.total > 0) {
    if (argmax_label(majority(leaf)) == y) ++leaf.majority_correct;
    if (argmax_label(leaf_naive_bayes(leaf, x)) == y) ++leaf.naive_bayes_correct;
  }

  ++leaf.class_counts[y];
  ++leaf.total;
  for (const auto& [name, value] : x) {
    auto it = leaf.observers.find(name);
    if (it == leaf.observers.end()) it = leaf.observers.emplace(name, GaussianObserver{}).first;
    it->second.update(value.number(), y);
  }
  ++samples_seen_;

  if (leaf.samples_since_split_attempt() >= params_.grace_period) {
    leaf.last_split_attempt_total = leaf.total;
    if (!leaf.is_pure()) attempt_split(index);
  }
}

void HoeffdingTreeClassifier::attempt_split(std::size_t leaf_index) {
  const auto& leaf = std::get<LeafNode>(nodes_[leaf_index]);

  ClassMass pre_split;
  for (const auto& [label, n] : leaf.class_counts) pre_split.emplace(label, static_cast<double>(n));

  std::vector<SplitSuggestion> suggestions;
  for (const auto& [name, obs] : leaf.observers) {
    if (auto s = obs.best_split(name, pre_split, params_.n_split_points)) suggestions.push_back(std::move(*s));
  }
  std::sort(suggestions.begin(), suggestions.end(), [](const SplitSuggestion& a, const SplitSuggestion& b) {
    if (a.merit != b.merit) return a.merit > b.merit;
    return a.feature < b.feature;
  });

  SplitAttempt attempt;
  attempt.leaf_id = leaf.id;
  attempt.n = leaf.total;
  attempt.n_classes = leaf.class_counts.size();
  if (!suggestions.empty()) attempt.best = suggestions.front();
  attempt.second_merit = suggestions.size() > 1 ? suggestions[1].merit : 0.0;
  const double range = std::log2(static_cast<double>(std::max<std::size_t>(attempt.n_classes, 2)));
  attempt.epsilon = hoeffding_bound(range, params_.delta, static_cast<double>(attempt.n));
  attempt.split = attempt.best && attempt.best->merit > 0.0 &&
                  (attempt.best->merit - attempt.second_merit > attempt.epsilon || attempt.epsilon < params_.tau);

  if (trace_ != nullptr) *trace_ << to_json_line(attempt) << '\n';
  if (!attempt.split) return;

  const std::size_t left = nodes_.size();
  nodes_.emplace_back(new_leaf());
  nodes_.emplace_back(new_leaf());
  nodes_[leaf_index] = SplitNode{attempt.best->feature, attempt.best->threshold, left, left + 1};
}

std::size_t HoeffdingTreeClassifier::n_leaves() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return std::holds_alternative<LeafNode>(n); }));
}

std::size_t HoeffdingTreeClassifier::n_splits() const { return nodes_.size() - n_leaves(); }

std::size_t HoeffdingTreeClassifier::depth() const {
  if (nodes_.empty()) return 0;
  std::size_t deepest = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [index, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (const auto* split = std::get_if<SplitNode>(&nodes_[index])) {
      stack.emplace_back(split->left, d + 1);
      stack.emplace_back(split->right, d + 1);
    }
  }
  return deepest;
}

}  // namespace riffle
