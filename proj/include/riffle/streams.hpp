#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "riffle/core.hpp"
#include "riffle/rng.hpp"

namespace riffle {

struct Sample {
  FeatureVector x;
  Label y;
};

/// Single-consumer producer of labeled samples.
class StreamSource {
 public:
  virtual ~StreamSource() = default;
  /// nullopt once the stream is exhausted.
  virtual std::optional<Sample> next() = 0;
};

/// Replays an in-memory sample list. Copies share the list.
class SampleList final : public StreamSource {
 public:
  explicit SampleList(std::vector<Sample> samples);
  explicit SampleList(std::shared_ptr<const std::vector<Sample>> samples);

  std::optional<Sample> next() override;
  std::size_t size() const noexcept { return samples_->size(); }
  const std::vector<Sample>& samples() const noexcept { return *samples_; }

 private:
  std::shared_ptr<const std::vector<Sample>> samples_;
  std::size_t pos_ = 0;
};

/// First `n` samples of another stream.
class Take final : public StreamSource {
 public:
  Take(std::unique_ptr<StreamSource> source, std::size_t n) : source_(std::move(source)), left_(n) {}

  std::optional<Sample> next() override;

 private:
  std::unique_ptr<StreamSource> source_;
  std::size_t left_;
};

std::unique_ptr<StreamSource> take(std::unique_ptr<StreamSource> source, std::size_t n);

/// Drains a stream into memory.
std::vector<Sample> collect(StreamSource& source);

/// Breiman's waveform generator: three classes, 21 noisy features.
///
/// The base waves are triangles of height 6 over positions 0..20 peaking at
/// 6, 10 and 14. Class 0 mixes waves 1 and 2, class 1 waves 1 and 3,
/// class 2 waves 2 and 3, with a uniform weight u, plus N(0, 1) noise.
///
/// Draw order per sample: class = floor(3 * uniform), u = uniform, then 21
/// standard normals. The uniforms and normals come from Xoshiro256 seeded
/// with `seed`. Features are named "0" .. "20"; labels are ids 0, 1, 2.
class Waveform final : public StreamSource {
 public:
  static constexpr std::size_t n_features = 21;

  explicit Waveform(std::uint64_t seed = 0) : rng_(seed) {}

  std::optional<Sample> next() override { return draw(); }
  Sample draw();

  /// Triangular base wave 1, 2 or 3 evaluated at position i (0..20).
  static double base_wave(int wave, std::size_t i);
  /// Deterministic part of the generator: u * h_a + (1 - u) * h_b + noise.
  static Sample compose(int cls, double u, std::span<const double, n_features> noise);

 private:
  Xoshiro256 rng_;
};

inline constexpr std::array<const char*, 8> elec2_features = {
    "date", "day", "period", "nswprice", "nswdemand", "vicprice", "vicdemand", "transfer"};

/// Loads the Elec2 electricity-pricing stream: comma-separated, nine
/// columns (the eight features above, then UP/DOWN), optional header.
/// Throws DataError with the line number on any malformed record and
/// std::runtime_error when the file cannot be opened.
std::vector<Sample> load_elec2(const std::filesystem::path& path);

}  // namespace riffle
