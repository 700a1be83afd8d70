#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "riffle/core.hpp"

namespace riffle::bench {

enum class Dataset { elec2, waveform };
enum class Format { markdown, csv };

struct BenchConfig {
  std::vector<std::string> models;  // subset of {gnb, lr, ht}
  Dataset dataset = Dataset::waveform;
  std::filesystem::path data_path;  // elec2 only
  std::uint64_t seed = 42;          // waveform only
  std::size_t count = 1000;         // waveform only
  std::size_t repeats = 7;
  bool single_thread = false;
};

struct BenchCell {
  std::string model;
  std::string dataset;
  double accuracy = 0.0;  // fraction in [0, 1]
  std::uint64_t samples = 0;
  std::size_t repeats = 0;
  double learn_mean = 0.0;
  double learn_std = 0.0;
  double predict_mean = 0.0;
  double predict_std = 0.0;
};

struct BenchReport {
  std::vector<BenchCell> cells;
};

/// Throws ValueError for an unknown name. lr is a StandardScaler |
/// LogisticRegression pipeline; gnb and ht see raw features.
std::unique_ptr<Classifier> make_model(std::string_view name);

/// Checks models/repeats; ValueError on a bad configuration.
void validate(const BenchConfig& cfg);

/// Fresh model per repeat, full prequential pass each time. Accuracy comes
/// from the first repeat; a later repeat disagreeing is a ContractError.
BenchReport run_benchmark(const BenchConfig& cfg);

std::string render_table(const BenchReport& report, Format format);

/// Inverse of render_table(report, Format::csv).
BenchReport parse_csv(std::string_view text);

/// Sample standard deviation; 0 for fewer than two values.
double sample_stddev(const std::vector<double>& values, double mean);

}  // namespace riffle::bench
