#pragma once

// Hoeffding tree (VFDT) for numeric features.
//
// Leaves keep class counts and one GaussianObserver per feature. Every
// `grace_period` samples an impure leaf ranks candidate splits by
// information gain and splits when the gain lead of the best feature over
// the runner-up exceeds the Hoeffding bound, or when the bound itself has
// dropped below the tie threshold.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "riffle/core.hpp"
#include "riffle/stats.hpp"

namespace riffle {

using ClassMass = std::map<Label, double>;

/// Shannon entropy in bits. ValueError if no count is positive or any is
/// negative.
double entropy(const ClassMass& counts);

/// sqrt(range^2 ln(1/delta) / (2n)).
double hoeffding_bound(double range, double delta, double n);

struct SplitSuggestion {
  std::string feature;
  double threshold = 0.0;
  double merit = 0.0;  // information gain, bits
};

/// Per-class Gaussian summary of one numeric feature at one leaf.
class GaussianObserver {
 public:
  struct ClassSummary {
    RunningMoments moments;
    double min = 0.0;
    double max = 0.0;
  };

  void update(double value, const Label& y);

  const std::map<Label, ClassSummary>& per_class() const noexcept { return per_class_; }
  /// All classes pooled.
  const RunningMoments& pooled() const noexcept { return pooled_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  const RunningMoments* moments(const Label& y) const;

  /// Estimated class mass left (<= threshold) and right (> threshold).
  std::pair<ClassMass, ClassMass> split_masses(double threshold) const;

  /// Best of `n_points` equally spaced thresholds strictly inside
  /// (min, max). nullopt when fewer than two classes have mass in
  /// `pre_split` or min == max.
  std::optional<SplitSuggestion> best_split(const std::string& feature, const ClassMass& pre_split,
                                            std::size_t n_points = 10) const;

 private:
  std::map<Label, ClassSummary> per_class_;
  RunningMoments pooled_;
  double min_ = 0.0;
  double max_ = 0.0;
};

enum class LeafPrediction { majority, naive_bayes, naive_bayes_adaptive };

struct HoeffdingTreeParams {
  std::uint64_t grace_period = 200;
  double delta = 1e-7;
  double tau = 0.05;
  std::size_t n_split_points = 10;
  LeafPrediction leaf_prediction = LeafPrediction::naive_bayes_adaptive;
};

struct LeafNode {
  std::uint64_t id = 0;
  std::map<Label, std::uint64_t> class_counts;
  std::unordered_map<std::string, GaussianObserver, NameHash, std::equal_to<>> observers;
  std::uint64_t total = 0;
  std::uint64_t last_split_attempt_total = 0;
  // Running record of which leaf predictor would have been right.
  std::uint64_t majority_correct = 0;
  std::uint64_t naive_bayes_correct = 0;

  std::uint64_t samples_since_split_attempt() const noexcept { return total - last_split_attempt_total; }
  bool is_pure() const noexcept { return class_counts.size() < 2; }
};

/// x[feature] <= threshold goes left, otherwise right. A missing feature
/// goes left.
struct SplitNode {
  std::string feature;
  double threshold = 0.0;
  std::size_t left = 0;
  std::size_t right = 0;
};

using TreeNode = std::variant<LeafNode, SplitNode>;

/// One audited split attempt.
struct SplitAttempt {
  std::uint64_t leaf_id = 0;
  std::uint64_t n = 0;
  std::size_t n_classes = 0;
  std::optional<SplitSuggestion> best;
  double second_merit = 0.0;
  double epsilon = 0.0;
  bool split = false;
};

/// One JSON object, no trailing newline.
std::string to_json_line(const SplitAttempt& attempt);
SplitAttempt split_attempt_from_json(const std::string& line);

class HoeffdingTreeClassifier final : public Classifier {
 public:
  HoeffdingTreeClassifier() : HoeffdingTreeClassifier(HoeffdingTreeParams{}) {}
  explicit HoeffdingTreeClassifier(HoeffdingTreeParams params);

  std::string name() const override { return "HoeffdingTreeClassifier"; }
  std::unique_ptr<Estimator> clone() const override;
  std::string fingerprint() const override;

  /// TypeError on categorical values; nothing is updated in that case.
  void learn_one(const FeatureVector& x, const Label& y) override;
  ClassDistribution predict_proba_one(const FeatureVector& x) const override;

  /// Split attempts are written as JSON lines to `sink` while it is set.
  /// The stream must outlive the tree or be reset with nullptr.
  void set_trace(std::ostream* sink) noexcept { trace_ = sink; }

  const HoeffdingTreeParams& params() const noexcept { return params_; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t n_leaves() const;
  std::size_t n_splits() const;
  std::size_t depth() const;
  std::uint64_t samples_seen() const noexcept { return samples_seen_; }

  /// Index into nodes() of the leaf that x routes to. Requires !empty().
  std::size_t route(const FeatureVector& x) const;
  const LeafNode& leaf_for(const FeatureVector& x) const;

  /// Posterior of the leaf-local Gaussian naive Bayes model.
  ClassDistribution leaf_naive_bayes(const LeafNode& leaf, const FeatureVector& x) const;

 private:
  ClassDistribution leaf_prediction(const LeafNode& leaf, const FeatureVector& x) const;
  void attempt_split(std::size_t leaf_index);
  LeafNode new_leaf();

  HoeffdingTreeParams params_;
  std::vector<TreeNode> nodes_;
  std::uint64_t next_leaf_id_ = 0;
  std::uint64_t samples_seen_ = 0;
  std::ostream* trace_ = nullptr;
};

}  // namespace riffle
