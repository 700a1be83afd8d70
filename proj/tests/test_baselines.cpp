#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "riffle/errors.hpp"
#include "riffle/linear_model.hpp"
#include "riffle/naive_bayes.hpp"
#include "riffle/preprocessing.hpp"
#include "riffle/stats.hpp"
#include "riffle/streams.hpp"
#include "test_support.hpp"

using namespace riffle;

namespace {

struct TwoPass {
  double mean = 0.0;
  double variance = 0.0;
};

TwoPass two_pass(const std::vector<double>& xs) {
  TwoPass out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  for (double x : xs) out.variance += (x - out.mean) * (x - out.mean);
  out.variance /= static_cast<double>(xs.size());
  return out;
}

double pdf(double x, double mean, double var) {
  return std::exp(-(x - mean) * (x - mean) / (2 * var)) / std::sqrt(2 * std::numbers::pi * var);
}

}  // namespace

// ---- StandardScaler ----------------------------------------------------

TEST_CASE("scaler on 1, 2, 3") {
  StandardScaler s;
  for (double v : {1.0, 2.0, 3.0}) s.learn_one(FeatureVector{{"a", v}});
  const RunningMoments* m = s.moments("a");
  REQUIRE(m != nullptr);
  CHECK(m->count() == 3);
  CHECK(m->mean() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m->variance() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.transform_one(FeatureVector{{"a", 3.0}}).number("a") ==
        doctest::Approx(1.224744871391589).epsilon(1e-9));
}

TEST_CASE("scaler maps unseen and constant features to 0") {
  StandardScaler s;
  for (int i = 0; i < 5; ++i) s.learn_one(FeatureVector{{"c", 7.0}});
  CHECK(s.moments("c")->variance() == 0.0);
  const FeatureVector out = s.transform_one(FeatureVector{{"c", 9.0}, {"new", 4.0}});
  CHECK(out.number("c") == 0.0);
  CHECK(out.contains("new"));
  CHECK(out.number("new") == 0.0);
  CHECK(s.moments("new") == nullptr);
}

TEST_CASE("scaler rejects categorical input without updating") {
  StandardScaler s;
  s.learn_one(FeatureVector{{"a", 1.0}});
  const std::string before = s.fingerprint();
  CHECK_THROWS_AS(s.learn_one(FeatureVector{{"a", 2.0}, {"colour", "red"}}), TypeError);
  CHECK(s.fingerprint() == before);
}

TEST_CASE("property: running moments agree with a two-pass oracle") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double shift = (trial % 5) * 1e3;
    const double scale = 1.0 + trial;
    std::vector<double> xs;
    StandardScaler s;
    const int n = 2 + trial * 7;
    for (int i = 0; i < n; ++i) {
      xs.push_back(shift + scale * noise(rng));
      s.learn_one(FeatureVector{{"a", xs.back()}});
    }
    const TwoPass oracle = two_pass(xs);
    const RunningMoments* m = s.moments("a");
    CHECK(m->mean() == doctest::Approx(oracle.mean).epsilon(1e-9));
    CHECK(m->variance() == doctest::Approx(oracle.variance).epsilon(1e-9));
    const double probe = xs.front();
    CHECK(s.transform_one(FeatureVector{{"a", probe}}).number("a") ==
          doctest::Approx((probe - oracle.mean) / std::sqrt(oracle.variance)).epsilon(1e-9));
  }
}

// ---- LogisticRegression ------------------------------------------------

TEST_CASE("sigmoid") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(sigmoid(1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
  CHECK(sigmoid(-1.0) == doctest::Approx(1.0 - 0.7310585786300049).epsilon(1e-15));
  CHECK(sigmoid(1000.0) == 1.0);
  CHECK(sigmoid(-1000.0) == 0.0);
}

TEST_CASE("one SGD step from zero") {
  LogisticRegression lr;
  CHECK(lr.predict_proba_one(FeatureVector{{"a", 1.0}}).empty());
  lr.learn_one(FeatureVector{{"a", 1.0}}, Label("UP"));
  // p = 0.5, target 1: w = 0 - 0.01 * (0.5 - 1) * 1
  CHECK(lr.weights().number("a") == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(lr.bias() == doctest::Approx(0.005).epsilon(1e-15));

  // Only one label so far: it is certain.
  const auto only = lr.predict_proba_one(FeatureVector{{"a", 1.0}});
  CHECK(only.size() == 1);
  CHECK(only[Label("UP")] == 1.0);
}

TEST_CASE("an empty x only moves the bias") {
  LogisticRegression lr;
  lr.learn_one(FeatureVector{}, Label(1));
  CHECK(lr.weights().empty());
  CHECK(lr.bias() == doctest::Approx(0.005).epsilon(1e-15));
}

TEST_CASE("label universe: larger label is positive, third label is rejected") {
  LogisticRegression lr;
  const FeatureVector x{{"a", 2.0}};
  lr.learn_one(x, Label("UP"));
  lr.learn_one(x, Label("DOWN"));
  REQUIRE(lr.positive_label().has_value());
  CHECK(*lr.positive_label() == Label("UP"));
  CHECK(*lr.negative_label() == Label("DOWN"));
  const auto d = lr.predict_proba_one(x);
  CHECK(d[Label("UP")] + d[Label("DOWN")] == doctest::Approx(1.0));
  CHECK(d[Label("UP")] == doctest::Approx(lr.positive_probability(x)).epsilon(1e-15));
  CHECK_THROWS_AS(lr.learn_one(x, Label("FLAT")), ContractError);
}

TEST_CASE("role flip negates the state exactly") {
  // First label 0 is provisionally positive; the larger label 1 takes over.
  LogisticRegression lr;
  const FeatureVector x{{"a", 1.5}};
  for (int i = 0; i < 3; ++i) lr.learn_one(x, Label(0));
  const double w = lr.weights().number("a");
  const double b = lr.bias();
  CHECK(w > 0.0);

  lr.learn_one(FeatureVector{}, Label(1));  // empty x: weights untouched by the step
  CHECK(*lr.positive_label() == Label(1));
  CHECK(*lr.negative_label() == Label(0));
  CHECK(lr.weights().number("a") == -w);
  // flipped bias -b, then one step towards label 1
  CHECK(lr.bias() == doctest::Approx(-b - 0.01 * (sigmoid(-b) - 1.0)).epsilon(1e-15));
}

TEST_CASE("property: repeated learning on (x, y) raises p(y | x)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const FeatureVector x = testing::random_vector(rng, 6, -2, 2);
    LogisticRegression lr;
    lr.learn_one(x, Label(0));
    lr.learn_one(x, Label(1));
    double prev = lr.predict_proba_one(x)[Label(1)];
    for (int step = 0; step < 30; ++step) {
      lr.learn_one(x, Label(1));
      const double p = lr.predict_proba_one(x)[Label(1)];
      if (x.empty() && p == prev) continue;
      CHECK(p >= prev);
      prev = p;
    }
  }
}

TEST_CASE("property: the SGD step follows the finite-difference gradient") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  constexpr double h = 1e-6;
  for (int trial = 0; trial < 30; ++trial) {
    const FeatureVector x = testing::random_vector(rng, 5, -3, 3);
    const bool positive = trial % 2 == 0;

    FeatureVector weights;
    for (const auto& [name, value] : x) weights.set(name, w(rng));
    const double bias = w(rng);

    LogisticRegression lr;
    lr.learn_one(FeatureVector{}, Label(0));
    lr.learn_one(FeatureVector{}, Label(1));
    lr.set_state(weights, bias);

    auto loss_at = [&](FeatureVector ws, double b) {
      LogisticRegression probe = lr;
      probe.set_state(std::move(ws), b);
      return probe.log_loss(x, positive);
    };

    LogisticRegression stepped = lr;
    stepped.learn_one(x, Label(positive ? 1 : 0));
    const double lr_rate = lr.params().learning_rate;

    for (const auto& [name, value] : x) {
      FeatureVector up = weights;
      FeatureVector down = weights;
      up.set(name, weights.number(name) + h);
      down.set(name, weights.number(name) - h);
      const double grad = (loss_at(up, bias) - loss_at(down, bias)) / (2 * h);
      const double expected = weights.number(name) - lr_rate * grad;
      CHECK(stepped.weights().number(name) == doctest::Approx(expected).epsilon(1e-6));
    }
    const double grad_b = (loss_at(weights, bias + h) - loss_at(weights, bias - h)) / (2 * h);
    CHECK(stepped.bias() == doctest::Approx(bias - lr_rate * grad_b).epsilon(1e-6));
  }
}

// ---- GaussianNB --------------------------------------------------------

TEST_CASE("GNB: symmetric classes give 0.5 at the midpoint") {
  GaussianNB nb;
  nb.learn_one(FeatureVector{{"x", -1.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"x", -3.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"x", 1.0}}, Label("B"));
  nb.learn_one(FeatureVector{{"x", 3.0}}, Label("B"));
  const auto d = nb.predict_proba_one(FeatureVector{{"x", 0.0}});
  CHECK(d[Label("A")] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d[Label("B")] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("GNB: one class is certain; fresh model is empty") {
  GaussianNB nb;
  CHECK(nb.predict_proba_one(FeatureVector{{"x", 1.0}}).empty());
  nb.learn_one(FeatureVector{{"x", 1.0}}, Label(4));
  nb.learn_one(FeatureVector{{"x", 2.0}}, Label(4));
  const auto d = nb.predict_proba_one(FeatureVector{{"x", 100.0}});
  CHECK(d.size() == 1);
  CHECK(d[Label(4)] == 1.0);
}

TEST_CASE("GNB: brute-force density oracle on four samples") {
  // class A: (1, 2), (2, 4); class B: (5, 1), (7, 3)
  GaussianNB nb;
  nb.learn_one(FeatureVector{{"u", 1.0}, {"v", 2.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"u", 5.0}, {"v", 1.0}}, Label("B"));
  nb.learn_one(FeatureVector{{"u", 2.0}, {"v", 4.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"u", 7.0}, {"v", 3.0}}, Label("B"));

  // global variances: u over {1,5,2,7} = 5.6875, v over {2,1,4,3} = 1.25
  const double floor = 1e-9 * 5.6875;
  CHECK(nb.variance_floor() == doctest::Approx(floor).epsilon(1e-12));

  const double qu = 3.0;
  const double qv = 2.5;
  const double a = 0.5 * pdf(qu, 1.5, 0.25 + floor) * pdf(qv, 3.0, 1.0 + floor);
  const double b = 0.5 * pdf(qu, 6.0, 1.0 + floor) * pdf(qv, 2.0, 1.0 + floor);
  const auto d = nb.predict_proba_one(FeatureVector{{"u", qu}, {"v", qv}});
  CHECK(d[Label("A")] == doctest::Approx(a / (a + b)).epsilon(1e-9));
  CHECK(d[Label("B")] == doctest::Approx(b / (a + b)).epsilon(1e-9));
}

TEST_CASE("GNB: an unseen (class, feature) pair scores against N(0, floor)") {
  GaussianNB nb;
  nb.learn_one(FeatureVector{{"u", 1.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"u", 3.0}}, Label("A"));
  nb.learn_one(FeatureVector{{"w", 2.0}}, Label("B"));
  nb.learn_one(FeatureVector{{"w", 4.0}}, Label("B"));
  const double floor = nb.variance_floor();
  CHECK(floor == doctest::Approx(1e-9).epsilon(1e-12));  // max global variance is 1

  const double qu = 2.0;
  const double qw = 3.0;
  const double la = std::log(0.5) + log_normal_density(qu, 2.0, 1.0 + floor) + log_normal_density(qw, 0.0, floor);
  const double lb = std::log(0.5) + log_normal_density(qu, 0.0, floor) + log_normal_density(qw, 3.0, 1.0 + floor);
  const double m = std::max(la, lb);
  const double pa = std::exp(la - m) / (std::exp(la - m) + std::exp(lb - m));
  const auto d = nb.predict_proba_one(FeatureVector{{"u", qu}, {"w", qw}});
  CHECK(d[Label("A")] == doctest::Approx(pa).epsilon(1e-9));
}

TEST_CASE("property: GNB counts and moments match a group-by") {
  Waveform w(31);
  GaussianNB nb;
  std::map<Label, std::uint64_t> counts;
  std::map<Label, std::vector<double>> column5;
  for (int i = 0; i < 600; ++i) {
    const Sample s = w.draw();
    nb.learn_one(s.x, s.y);
    ++counts[s.y];
    column5[s.y].push_back(s.x.number("5"));
  }
  CHECK(nb.class_counts() == counts);
  CHECK(nb.total() == 600);
  for (const auto& [label, xs] : column5) {
    const TwoPass oracle = two_pass(xs);
    const RunningMoments* m = nb.moments(label, "5");
    REQUIRE(m != nullptr);
    CHECK(m->count() == xs.size());
    CHECK(m->mean() == doctest::Approx(oracle.mean).epsilon(1e-9));
    CHECK(m->variance() == doctest::Approx(oracle.variance).epsilon(1e-9));
    CHECK(nb.prior(label) == doctest::Approx(static_cast<double>(xs.size()) / 600.0));
  }

  for (int i = 0; i < 200; ++i) {
    const auto d = nb.predict_proba_one(w.draw().x);
    double total = 0.0;
    for (const auto& [label, p] : d) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
