#include "riffle/evaluate.hpp"

#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "riffle/errors.hpp"

namespace riffle {

std::uint64_t ConfusionMatrix::operator()(const Label& y_true, const Label& y_pred) const {
  auto it = cells_.find({y_true, y_pred});
  return it == cells_.end() ? 0 : it->second;
}

EvalReport progressive_val_score(StreamSource& stream, Classifier& model, Accuracy& metric,
                                 const EvalOptions& options) {
  using clock = std::chrono::steady_clock;
  EvalReport report;
  clock::duration learn_time{};
  clock::duration predict_time{};

  while (true) {
    std::optional<Sample> sample;
    try {
      sample = stream.next();
    } catch (const std::exception& e) {
      throw StreamError(report.samples, e.what());
    }
    if (!sample) break;

    const auto t0 = clock::now();
    const std::optional<Label> y_pred = model.predict_one(sample->x);
    const auto t1 = clock::now();
    predict_time += t1 - t0;

    if (y_pred) {
      metric.update(sample->y, *y_pred);
      report.confusion.update(sample->y, *y_pred);
      ++report.predictions;
      if (options.prediction_log != nullptr) {
        *options.prediction_log << report.samples << ',' << sample->y.to_string() << ',' << y_pred->to_string()
                                << '\n';
      }
    }

    const auto t2 = clock::now();
    model.learn_one(sample->x, sample->y);
    learn_time += clock::now() - t2;
    ++report.samples;
  }

  report.metric = metric.value();
  report.learn_seconds = std::chrono::duration<double>(learn_time).count();
  report.predict_seconds = std::chrono::duration<double>(predict_time).count();
  return report;
}

std::vector<LoggedPrediction> read_prediction_log(std::istream& in) {
  std::vector<LoggedPrediction> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw DataError("prediction log", line_no, "expected index,true,predicted");
    LoggedPrediction p;
    try {
      p.index = std::stoull(line.substr(0, c1));
    } catch (const std::exception&) {
      throw DataError("prediction log", line_no, "bad index");
    }
    p.y_true = line.substr(c1 + 1, c2 - c1 - 1);
    p.y_pred = line.substr(c2 + 1);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace riffle
