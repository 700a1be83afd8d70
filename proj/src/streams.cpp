#include "riffle/streams.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "riffle/errors.hpp"

namespace riffle {

SampleList::SampleList(std::vector<Sample> samples)
    : samples_(std::make_shared<const std::vector<Sample>>(std::move(samples))) {}

SampleList::SampleList(std::shared_ptr<const std::vector<Sample>> samples) : samples_(std::move(samples)) {}

std::optional<Sample> SampleList::next() {
  if (pos_ >= samples_->size()) return std::nullopt;
  return (*samples_)[pos_++];
}

std::optional<Sample> Take::next() {
  if (left_ == 0) return std::nullopt;
  auto sample = source_->next();
  left_ = sample ? left_ - 1 : 0;
  return sample;
}

std::unique_ptr<StreamSource> take(std::unique_ptr<StreamSource> source, std::size_t n) {
  return std::make_unique<Take>(std::move(source), n);
}

std::vector<Sample> collect(StreamSource& source) {
  std::vector<Sample> out;
  while (auto s = source.next()) out.push_back(std::move(*s));
  return out;
}

// Waveform

double Waveform::base_wave(int wave, std::size_t i) {
  static constexpr int peaks[] = {6, 10, 14};
  if (wave < 1 || wave > 3) throw ValueError("waveform base waves are numbered 1..3");
  const double d = std::abs(static_cast<double>(i) - peaks[wave - 1]);
  return std::max(6.0 - d, 0.0);
}

Sample Waveform::compose(int cls, double u, std::span<const double, n_features> noise) {
  // class 0 mixes waves 1 & 2, class 1 waves 1 & 3, class 2 waves 2 & 3
  static constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  if (cls < 0 || cls > 2) throw ValueError("waveform classes are 0, 1 and 2");
  const auto [a, b] = pairs[cls];
  Sample s{{}, Label(cls)};
  s.x.reserve(n_features);
  for (std::size_t i = 0; i < n_features; ++i) {
    s.x.set(std::to_string(i), u * base_wave(a, i) + (1.0 - u) * base_wave(b, i) + noise[i]);
  }
  return s;
}

Sample Waveform::draw() {
  const int cls = static_cast<int>(rng_.uniform() * 3.0);
  const double u = rng_.uniform();
  std::array<double, n_features> noise;
  for (double& e : noise) e = rng_.normal();
  return compose(cls, u, noise);
}

// Elec2

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_real(std::string_view field) {
  double v = 0.0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

std::vector<Sample> load_elec2(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Elec2 file '" + path.string() + "'");
  const std::string source = path.string();
  constexpr std::size_t n_columns = elec2_features.size() + 1;

  std::vector<Sample> samples;
  samples.reserve(45312);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split_fields(text);
    if (samples.empty() && line_no == 1 && !parse_real(fields.front())) continue;  // header
    if (fields.size() != n_columns) {
      throw DataError(source, line_no,
                      "expected " + std::to_string(n_columns) + " columns, found " + std::to_string(fields.size()));
    }
    Sample s;
    s.x.reserve(elec2_features.size());
    for (std::size_t c = 0; c < elec2_features.size(); ++c) {
      const auto v = parse_real(fields[c]);
      if (!v) {
        throw DataError(source, line_no,
                        "column '" + std::string(elec2_features[c]) + "' is not numeric: '" + std::string(fields[c]) + "'");
      }
      if (c == 1 && (*v != std::trunc(*v) || *v < 1.0 || *v > 7.0)) {
        throw DataError(source, line_no, "day must be an integer code 1-7, got '" + std::string(fields[c]) + "'");
      }
      s.x.set(elec2_features[c], *v);
    }
    const std::string_view label = fields.back();
    if (label != "UP" && label != "DOWN") {
      throw DataError(source, line_no, "unknown class '" + std::string(label) + "' (expected UP or DOWN)");
    }
    s.y = Label(std::string(label));
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace riffle
