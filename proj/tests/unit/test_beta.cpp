#include <cmath>
#include <random>

#include "doctest.h"
#include "pargue/beta.hpp"
#include "pargue/error.hpp"

using namespace pargue;
using doctest::Approx;

namespace {

// Composite Simpson estimate of Var[X] for X ~ Beta(a, b).
double integrated_variance(double a, double b) {
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  auto density = [&](double x) {
    if (x <= 0.0 || x >= 1.0) {
      const double edge = x <= 0.0 ? a : b;
      return edge == 1.0 ? std::exp(log_norm) : 0.0;
    }
    return std::exp(log_norm + (a - 1) * std::log(x) + (b - 1) * std::log1p(-x));
  };
  const int n = 400000;
  const double h = 1.0 / n;
  double m0 = 0, m1 = 0, m2 = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double f = density(x);
    m0 += w * f;
    m1 += w * f * x;
    m2 += w * f * x * x;
  }
  m0 *= h / 3;
  m1 *= h / 3;
  m2 *= h / 3;
  return m2 / m0 - (m1 / m0) * (m1 / m0);
}

}  // namespace

TEST_CASE("posterior update") {
  CHECK(posterior(BetaLabel(1, 1), 3, 1) == BetaLabel(4, 2));
  CHECK(posterior(BetaLabel(1, 1), 0, 0) == BetaLabel(1, 1));
  const BetaLabel b = posterior(BetaLabel(2, 3), 2, 1);
  CHECK(b == BetaLabel(4, 4));
  CHECK(b.mean() == 0.5);
  CHECK_THROWS_AS(posterior(BetaLabel(1, 1), -1, 0), InputError);
}

TEST_CASE("moments") {
  const MomentPair m = moments(BetaLabel(5.0, 1.5));
  CHECK(std::abs(m.mean - 0.7692) < 5e-5);
  CHECK(std::abs(m.variance - 0.0237) < 5e-5);
  const MomentPair u = moments(BetaLabel(1, 1));
  CHECK(u.mean == 0.5);
  CHECK(u.variance == Approx(1.0 / 12));
  const MomentPair b = moments(BetaLabel(17, 2));
  CHECK(std::abs(b.mean - 0.89474) < 5e-6);
  CHECK(b.variance == Approx(34.0 / 7220).epsilon(1e-14));
  CHECK(std::abs(b.variance - 0.004711) < 2e-6);
}

TEST_CASE("variance agrees with numeric integration") {
  const std::pair<double, double> grid[] = {{1, 1},   {2, 3},     {5, 1.5},  {17, 2},  {4, 15},
                                            {1.5, 1.5}, {3, 3},   {10, 10},  {2, 8},   {7, 2.5}};
  for (auto [a, b] : grid) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(std::abs(BetaLabel(a, b).variance() - integrated_variance(a, b)) < 1e-6);
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(BetaLabel(0, 1), InputError);
  CHECK_THROWS_AS(BetaLabel(1, -2), InputError);
  CHECK_THROWS_AS(BetaLabel(NAN, 1), InputError);
  CHECK_THROWS_AS(moment_match({1.2, 0.0}), InputError);
  CHECK_THROWS_AS(moment_match({0.5, -0.1}), InputError);
}

TEST_CASE("complement") {
  CHECK(complement(BetaLabel(1, 1)) == BetaLabel(1, 1));
  CHECK(complement(BetaLabel(4, 15)) == BetaLabel(15, 4));
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> param(0.1, 50);
  for (int i = 0; i < 100; ++i) {
    const BetaLabel b(param(rng), param(rng));
    CHECK(complement(complement(b)) == b);
    CHECK(complement(b).strength() == b.strength());
    CHECK(complement(b).mean() == Approx(1 - b.mean()).epsilon(1e-14));
    CHECK(complement(b).variance() == Approx(b.variance()).epsilon(1e-14));
  }
}

TEST_CASE("moment matching") {
  const BetaLabel b = moment_match({0.7692, 0.0237});
  CHECK(std::abs(b.alpha() - 5.0) <= 0.01);
  CHECK(std::abs(b.beta() - 1.5) <= 0.01);
  const BetaLabel u = moment_match({0.5, 1.0 / 12});
  CHECK(u.alpha() == Approx(1.0));
  CHECK(u.beta() == Approx(1.0));
  const BetaLabel zero = moment_match({0.0, 0.0});
  CHECK(zero.degenerate());
  CHECK(zero.alpha() == 1.0);
  CHECK(std::isinf(zero.beta()));
  CHECK(std::isinf(zero.strength()));
  const BetaLabel one = moment_match({1.0, 0.0});
  CHECK(one.degenerate());
  CHECK(std::isinf(one.alpha()));
  CHECK(one.beta() == 1.0);
  CHECK(moment_match({0.3, 0.0}).degenerate());
  CHECK(moment_match({0.3, 0.0}).mean() == 0.3);
}

TEST_CASE("moment matching clamps variance and floors strength") {
  const BetaLabel wide = moment_match({0.5, 0.3});
  CHECK(wide.strength() >= kMinStrength);
  CHECK(wide.mean() == Approx(0.5));
  CHECK(wide.variance() <= 0.25);
}

TEST_CASE("moment matching inverts moments") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> param(0.05, 200);
  for (int i = 0; i < 500; ++i) {
    const BetaLabel b(param(rng), param(rng));
    const BetaLabel r = moment_match(moments(b));
    CHECK(std::abs(r.alpha() - b.alpha()) <= 1e-9 * b.alpha());
    CHECK(std::abs(r.beta() - b.beta()) <= 1e-9 * b.beta());
  }
}

TEST_CASE("fuzzy labels") {
  CHECK(to_fuzzy(BetaLabel(5, 1.5)) == FuzzyLabel{Aleatory::likely, Epistemic::some_confidence});
  CHECK(to_fuzzy(BetaLabel(17, 2)) == FuzzyLabel{Aleatory::very_likely, Epistemic::high_confidence});
  CHECK(to_fuzzy(BetaLabel(1.35, 2.07)) == FuzzyLabel{Aleatory::somewhat_unlikely, Epistemic::low_confidence});
  CHECK(to_fuzzy(BetaLabel::point(0)) ==
        FuzzyLabel{Aleatory::absolutely_not_likely, Epistemic::total_confidence});
  CHECK(describe({Aleatory::somewhat_likely, Epistemic::some_confidence}) ==
        "Somewhat likely with some confidence");

  const BetaLabel d = from_fuzzy({Aleatory::likely, Epistemic::some_confidence});
  CHECK(std::abs(d.alpha() - 5.0) <= 0.01);
  CHECK(std::abs(d.beta() - 1.5) <= 0.01);
  const BetaLabel z = from_fuzzy({Aleatory::absolutely_not_likely, Epistemic::total_confidence});
  CHECK(z.degenerate());
  CHECK(z.mean() == 0.0);
}

TEST_CASE("fuzzy roundtrip where the representative sits in its own bins") {
  const LabelConfig& cfg = LabelConfig::defaults();
  int checked = 0;
  for (std::size_t a = 0; a < kAleatoryCount; ++a) {
    for (std::size_t e = 0; e < kEpistemicCount; ++e) {
      const FuzzyLabel f{static_cast<Aleatory>(a), static_cast<Epistemic>(e)};
      const MomentPair rep = cfg.representative(f);
      if (!(cfg.classify(rep) == f)) continue;
      if (rep.variance > kVarianceCeiling * rep.mean * (1 - rep.mean)) continue;
      CAPTURE(describe(f));
      CHECK(to_fuzzy(from_fuzzy(f)) == f);
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("vocabulary tokens") {
  for (std::size_t a = 0; a < kAleatoryCount; ++a) {
    const auto v = static_cast<Aleatory>(a);
    CHECK(parse_aleatory(to_string(v)) == v);
  }
  for (std::size_t e = 0; e < kEpistemicCount; ++e) {
    const auto v = static_cast<Epistemic>(e);
    CHECK(parse_epistemic(to_string(v)) == v);
  }
  CHECK_FALSE(parse_aleatory("probably").has_value());
}

TEST_CASE("label configuration json") {
  const LabelConfig& d = LabelConfig::defaults();
  const LabelConfig r = LabelConfig::from_json(d.to_json());
  CHECK(r.aleatory_edges == d.aleatory_edges);
  CHECK(r.epistemic_edges == d.epistemic_edges);
  CHECK(r.to_json() == d.to_json());
  CHECK_THROWS_AS(LabelConfig::from_json("{"), InputError);
  CHECK_THROWS_AS(LabelConfig::from_json(R"({"aleatory": {"edges": [0, 0.5, 0.2, 1]}})"), InputError);

  // Shifting one edge moves a classification.
  LabelConfig shifted = d;
  shifted.aleatory_edges[7] = 0.7;
  CHECK(shifted.classify({0.75, 0.0}).aleatory == Aleatory::very_likely);
  CHECK(d.classify({0.75, 0.0}).aleatory == Aleatory::likely);
}
