#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riffle/bench.hpp"
#include "riffle/errors.hpp"
#include "riffle/pipeline.hpp"

using namespace riffle;
using namespace riffle::bench;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

BenchCell sample_cell() {
  BenchCell c;
  c.model = "ht";
  c.dataset = "elec2";
  c.accuracy = 0.801287;
  c.samples = 45312;
  c.repeats = 7;
  c.learn_mean = 0.4123456789;
  c.learn_std = 0.0123456789;
  c.predict_mean = 0.2;
  c.predict_std = 0.0;
  return c;
}

}  // namespace

TEST_CASE("models") {
  CHECK(make_model("gnb")->name() == "GaussianNB");
  CHECK(make_model("ht")->name() == "HoeffdingTreeClassifier");
  const auto lr = make_model("lr");
  const auto* pipeline = dynamic_cast<const Pipeline*>(lr.get());
  REQUIRE(pipeline != nullptr);
  CHECK(pipeline->name() == "StandardScaler | LogisticRegression");
  CHECK_THROWS_AS(make_model("svm"), ValueError);
}

TEST_CASE("configuration validation") {
  BenchConfig cfg;
  cfg.models = {"gnb"};
  CHECK_NOTHROW(validate(cfg));
  cfg.models = {"gnb", "svm"};
  CHECK_THROWS_AS(validate(cfg), ValueError);
  cfg.models = {};
  CHECK_THROWS_AS(validate(cfg), ValueError);
  cfg.models = {"gnb"};
  cfg.repeats = 0;
  CHECK_THROWS_AS(validate(cfg), ValueError);
}

TEST_CASE("empty report renders the header only") {
  const BenchReport empty;
  CHECK(lines_of(render_table(empty, Format::csv)).size() == 1);
  // markdown: header and separator row
  const auto md = lines_of(render_table(empty, Format::markdown));
  REQUIRE(md.size() == 2);
  CHECK(md[0].find("accuracy") != std::string::npos);
}

TEST_CASE("one cell renders one row with mean ± std") {
  BenchReport r;
  r.cells.push_back(sample_cell());
  const auto md = lines_of(render_table(r, Format::markdown));
  REQUIRE(md.size() == 3);
  CHECK(md[2].find("80.13") != std::string::npos);
  CHECK(md[2].find("0.412 ± 0.012") != std::string::npos);
  CHECK(lines_of(render_table(r, Format::csv)).size() == 2);
}

TEST_CASE("property: csv round trip") {
  BenchReport r;
  r.cells.push_back(sample_cell());
  BenchCell other = sample_cell();
  other.model = "gnb";
  other.dataset = "waveform";
  other.accuracy = 2.0 / 3.0;
  other.learn_mean = 1.5e-4;
  other.learn_std = 3.25e-6;
  other.repeats = 1;
  other.samples = 1000;
  r.cells.push_back(other);

  const BenchReport back = parse_csv(render_table(r, Format::csv));
  REQUIRE(back.cells.size() == r.cells.size());
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const BenchCell& a = r.cells[i];
    const BenchCell& b = back.cells[i];
    CHECK(a.model == b.model);
    CHECK(a.dataset == b.dataset);
    CHECK(a.samples == b.samples);
    CHECK(a.repeats == b.repeats);
    CHECK(a.accuracy == doctest::Approx(b.accuracy).epsilon(1e-6));
    CHECK(a.learn_mean == doctest::Approx(b.learn_mean).epsilon(1e-5));
    CHECK(a.learn_std == doctest::Approx(b.learn_std).epsilon(1e-5));
    CHECK(a.predict_mean == doctest::Approx(b.predict_mean).epsilon(1e-5));
    CHECK(a.predict_std == doctest::Approx(b.predict_std).epsilon(1e-5));
  }
}

TEST_CASE("sample standard deviation") {
  CHECK(sample_stddev({}, 0.0) == 0.0);
  CHECK(sample_stddev({3.0}, 3.0) == 0.0);
  // {2, 4, 4, 4, 5, 5, 7, 9}: squared deviations sum to 32 over n - 1 = 7
  CHECK(sample_stddev({2, 4, 4, 4, 5, 5, 7, 9}, 5.0) == doctest::Approx(std::sqrt(32.0 / 7.0)));
}

TEST_CASE("repeats report identical accuracy and timing statistics") {
  BenchConfig cfg;
  cfg.models = {"gnb", "ht"};
  cfg.count = 500;
  cfg.repeats = 2;
  const BenchReport r = run_benchmark(cfg);
  REQUIRE(r.cells.size() == 2);
  CHECK(r.cells[0].model == "gnb");
  CHECK(r.cells[1].model == "ht");

  BenchConfig once = cfg;
  once.repeats = 1;
  once.single_thread = true;
  const BenchReport r1 = run_benchmark(once);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(r.cells[i].accuracy == r1.cells[i].accuracy);
    CHECK(r.cells[i].repeats == 2);
    CHECK(r.cells[i].samples == 500);
    CHECK(r.cells[i].learn_mean > 0.0);
    CHECK(r.cells[i].learn_std >= 0.0);
    CHECK(r1.cells[i].learn_std == 0.0);
  }
}

TEST_CASE("waveform seed 42 ht lands in the reference band") {
  BenchConfig cfg;
  cfg.models = {"ht"};
  cfg.repeats = 1;
  const BenchReport r = run_benchmark(cfg);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].accuracy >= 0.72);
  CHECK(r.cells[0].accuracy <= 0.83);
}

TEST_CASE("elec2 without a data path is a configuration error") {
  BenchConfig cfg;
  cfg.models = {"gnb"};
  cfg.dataset = Dataset::elec2;
  CHECK_THROWS(run_benchmark(cfg));
}
