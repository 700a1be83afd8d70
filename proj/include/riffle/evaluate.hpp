#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "riffle/core.hpp"
#include "riffle/streams.hpp"

namespace riffle {

class Accuracy {
 public:
  void update(const Label& y_true, const Label& y_pred) noexcept {
    ++total_;
    if (y_true == y_pred) ++correct_;
  }

  std::uint64_t correct() const noexcept { return correct_; }
  std::uint64_t total() const noexcept { return total_; }
  /// 0 before any update.
  double value() const noexcept {
    return total_ == 0 ? 0.0 : static_cast<double>(correct_) / static_cast<double>(total_);
  }

 private:
  std::uint64_t correct_ = 0;
  std::uint64_t total_ = 0;
};

/// (true, predicted) -> count.
class ConfusionMatrix {
 public:
  void update(const Label& y_true, const Label& y_pred) { ++cells_[{y_true, y_pred}]; }
  std::uint64_t operator()(const Label& y_true, const Label& y_pred) const;
  const std::map<std::pair<Label, Label>, std::uint64_t>& cells() const noexcept { return cells_; }

 private:
  std::map<std::pair<Label, Label>, std::uint64_t> cells_;
};

struct EvalReport {
  double metric = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t predictions = 0;
  double learn_seconds = 0.0;
  double predict_seconds = 0.0;
  ConfusionMatrix confusion;
};

struct EvalOptions {
  /// Receives one "index,true,predicted" line per scored prediction.
  std::ostream* prediction_log = nullptr;
};

/// Prequential (test-then-train) evaluation.
///
/// For each sample: predict_one (timed); if a label came back, score it;
/// then learn_one (timed). A missing prediction is not scored. Errors
/// raised by the stream are rethrown as StreamError carrying the index.
EvalReport progressive_val_score(StreamSource& stream, Classifier& model, Accuracy& metric,
                                 const EvalOptions& options = {});

struct LoggedPrediction {
  std::uint64_t index = 0;
  std::string y_true;
  std::string y_pred;
};

/// Parses the prediction log written by progressive_val_score.
std::vector<LoggedPrediction> read_prediction_log(std::istream& in);

}  // namespace riffle
