#include "riffle/bench.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "riffle/errors.hpp"
#include "riffle/evaluate.hpp"
#include "riffle/linear_model.hpp"
#include "riffle/naive_bayes.hpp"
#include "riffle/pipeline.hpp"
#include "riffle/preprocessing.hpp"
#include "riffle/streams.hpp"
#include "riffle/tree.hpp"

namespace riffle::bench {

std::unique_ptr<Classifier> make_model(std::string_view name) {
  if (name == "gnb") return std::make_unique<GaussianNB>();
  if (name == "lr") return std::make_unique<Pipeline>(StandardScaler{} | LogisticRegression{});
  if (name == "ht") return std::make_unique<HoeffdingTreeClassifier>();
  throw ValueError("unknown model '" + std::string(name) + "' (expected gnb, lr or ht)");
}

void validate(const BenchConfig& cfg) {
  if (cfg.models.empty()) throw ValueError("at least one model is required");
  for (const auto& m : cfg.models) make_model(m);
  if (cfg.repeats == 0) throw ValueError("repeats must be at least 1");
  if (cfg.dataset == Dataset::elec2 && cfg.data_path.empty()) throw ValueError("elec2 needs a data path");
}

double sample_stddev(const std::vector<double>& values, double mean) {
  if (values.size() < 2) return 0.0;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

BenchCell run_cell(const std::string& model_name, const std::string& dataset_name,
                   const std::shared_ptr<const std::vector<Sample>>& samples, std::size_t repeats) {
  BenchCell cell{.model = model_name, .dataset = dataset_name, .repeats = repeats};
  std::vector<double> learn;
  std::vector<double> predict;
  for (std::size_t r = 0; r < repeats; ++r) {
    auto model = make_model(model_name);
    SampleList stream(samples);
    Accuracy metric;
    const EvalReport report = progressive_val_score(stream, *model, metric);
    if (r == 0) {
      cell.accuracy = report.metric;
      cell.samples = report.samples;
    } else if (report.metric != cell.accuracy) {
      throw ContractError(model_name + " accuracy changed between repeats");
    }
    learn.push_back(report.learn_seconds);
    predict.push_back(report.predict_seconds);
  }
  cell.learn_mean = mean_of(learn);
  cell.learn_std = sample_stddev(learn, cell.learn_mean);
  cell.predict_mean = mean_of(predict);
  cell.predict_std = sample_stddev(predict, cell.predict_mean);
  return cell;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& cfg) {
  validate(cfg);

  std::shared_ptr<const std::vector<Sample>> samples;
  std::string dataset_name;
  if (cfg.dataset == Dataset::elec2) {
    samples = std::make_shared<const std::vector<Sample>>(load_elec2(cfg.data_path));
    dataset_name = "elec2";
  } else {
    auto source = take(std::make_unique<Waveform>(cfg.seed), cfg.count);
    samples = std::make_shared<const std::vector<Sample>>(collect(*source));
    dataset_name = "waveform";
  }

  BenchReport report;
  report.cells.resize(cfg.models.size());
  if (cfg.single_thread || cfg.models.size() == 1) {
    for (std::size_t i = 0; i < cfg.models.size(); ++i) {
      report.cells[i] = run_cell(cfg.models[i], dataset_name, samples, cfg.repeats);
    }
    return report;
  }

  std::vector<std::exception_ptr> errors(cfg.models.size());
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < cfg.models.size(); ++i) {
      workers.emplace_back([&, i] {
        try {
          report.cells[i] = run_cell(cfg.models[i], dataset_name, samples, cfg.repeats);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

namespace {

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

constexpr const char* csv_header = "model,dataset,samples,repeats,accuracy,learn_mean,learn_std,predict_mean,predict_std";

}  // namespace

std::string render_table(const BenchReport& report, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::csv) {
    out << csv_header << '\n';
    for (const auto& c : report.cells) {
      out << c.model << ',' << c.dataset << ',' << c.samples << ',' << c.repeats << ','
          << format("%.17g", c.accuracy) << ',' << format("%.6g", c.learn_mean) << ','
          << format("%.6g", c.learn_std) << ',' << format("%.6g", c.predict_mean) << ','
          << format("%.6g", c.predict_std) << '\n';
    }
    return out.str();
  }
  out << "| model | dataset | accuracy (%) | learn (s) | predict (s) |\n";
  out << "|-------|---------|-------------:|----------:|------------:|\n";
  for (const auto& c : report.cells) {
    out << "| " << c.model << " | " << c.dataset << " | " << format("%.2f", 100.0 * c.accuracy) << " | "
        << format("%.3f", c.learn_mean) << " ± " << format("%.3f", c.learn_std) << " | "
        << format("%.3f", c.predict_mean) << " ± " << format("%.3f", c.predict_std) << " |\n";
  }
  return out.str();
}

BenchReport parse_csv(std::string_view text) {
  BenchReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != csv_header) throw DataError("bench csv", line_no, "unexpected header");
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (f.size() != 9) throw DataError("bench csv", line_no, "expected 9 columns");
    try {
      report.cells.push_back(BenchCell{.model = f[0],
                                       .dataset = f[1],
                                       .accuracy = std::stod(f[4]),
                                       .samples = std::stoull(f[2]),
                                       .repeats = std::stoull(f[3]),
                                       .learn_mean = std::stod(f[5]),
                                       .learn_std = std::stod(f[6]),
                                       .predict_mean = std::stod(f[7]),
                                       .predict_std = std::stod(f[8])});
    } catch (const std::logic_error&) {
      throw DataError("bench csv", line_no, "malformed number");
    }
  }
  return report;
}

}  // namespace riffle::bench
