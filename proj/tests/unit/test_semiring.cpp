#include <algorithm>
#include <random>

#include "doctest.h"
#include "pargue/compile.hpp"
#include "pargue/encode.hpp"
#include "pargue/error.hpp"
#include "pargue/semiring.hpp"
#include "support.hpp"

using namespace pargue;
using testing::gamma_e;

namespace {

Circuit gamma_ad() { return compile(encode(gamma_e(), Semantics::AD)); }

// Rebuilds c with the children of every node in a random order.
Circuit shuffled(const Circuit& c, std::mt19937_64& rng) {
  Circuit::Builder b(c.variables());
  std::vector<NodeId> map(c.size());
  for (NodeId i = 0; i < c.size(); ++i) {
    const CircuitNode& n = c.node(i);
    std::vector<NodeId> kids;
    for (NodeId ch : n.children) kids.push_back(map[ch]);
    std::shuffle(kids.begin(), kids.end(), rng);
    switch (n.kind) {
      case NodeKind::True: map[i] = b.add_true(); break;
      case NodeKind::False: map[i] = b.add_false(); break;
      case NodeKind::Literal: map[i] = b.add_literal(n.literal); break;
      case NodeKind::And: map[i] = b.add_and(kids); break;
      case NodeKind::Or: map[i] = b.add_or(kids, n.decision); break;
    }
  }
  return std::move(b).finish(map[c.root()]);
}

}  // namespace

TEST_CASE("uniform labels give model count over 2^n") {
  const Circuit c = gamma_ad();
  CHECK(evaluate(c, ProbabilitySemiring{}, uniform_labelling<double>(4, 0.5)) == doctest::Approx(7.0 / 16).epsilon(1e-15));
  CHECK(evaluate(c, CountingSemiring{}, uniform_labelling<std::uint64_t>(4, 1)) == 7);
}

TEST_CASE("false circuit evaluates to zero") {
  const Circuit f = compile(Theory{{"a"}, Formula::bottom()});
  CHECK(evaluate(f, ProbabilitySemiring{}, uniform_labelling<double>(1, 0.3)) == 0.0);
  CHECK(evaluate(f, CountingSemiring{}, uniform_labelling<std::uint64_t>(1, 1)) == 0);
}

TEST_CASE("query on the admissible theory") {
  const Circuit c = gamma_ad();
  const auto rho = probability_labelling(c, {{"a", 0.5}, {"b", 17.0 / 19}, {"c", 4.0 / 19}, {"d", 10.0 / 13}});
  const double pd = amc_query(c, std::vector<Literal>{c.literal("d")}, ProbabilitySemiring{}, rho);
  // {a,d}, {b,d}, {a,b,d}
  const double a = 0.5, b = 17.0 / 19, cc = 4.0 / 19, d = 10.0 / 13;
  const double expected = (1 - cc) * d * (a * (1 - b) + (1 - a) * b + a * b);
  CHECK(pd == doctest::Approx(expected).epsilon(1e-14));
  CHECK(pd == doctest::Approx(0.575325).epsilon(1e-6));
  CHECK(amc_query(c, std::vector<Literal>{}, ProbabilitySemiring{}, rho) ==
        doctest::Approx(evaluate(c, ProbabilitySemiring{}, rho)));
  CHECK(amc_query(c, std::vector<Literal>{c.literal("c")}, ProbabilitySemiring{}, rho) == 0.0);
  const Literal d_lit = c.literal("d");
  CHECK_THROWS_AS(amc_query(c, std::vector<Literal>{d_lit, ~d_lit}, ProbabilitySemiring{}, rho), InputError);
}

TEST_CASE("labelling errors") {
  const Circuit c = gamma_ad();
  Labelling<double> partial(4);
  partial.set(0, 0.5, 0.5);
  CHECK_FALSE(partial.total());
  CHECK_THROWS_AS(evaluate(c, ProbabilitySemiring{}, partial), InputError);
  CHECK_THROWS_AS(probability_labelling(c, {{"a", 0.5}}), InputError);
  CHECK_THROWS_AS(probability_labelling(c, {{"a", 1.5}, {"b", 0.1}, {"c", 0.1}, {"d", 0.1}}), InputError);
}

TEST_CASE("child order does not matter") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + round % 6;
    const Circuit c = compile(Theory{testing::var_names(n), testing::random_formula(rng, n, 4)});
    Labelling<double> rho(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      const double p = unit(rng);
      rho.set(v, p, 1 - p);
    }
    const Literal q{0, true};
    const double x = amc_query(c, std::vector<Literal>{q}, ProbabilitySemiring{}, rho);
    const double y = amc_query(shuffled(c, rng), std::vector<Literal>{q}, ProbabilitySemiring{}, rho);
    CHECK(std::abs(x - y) <= 1e-12);
  }
}

TEST_CASE("a fresh tautological variable is neutral") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + round % 5;
    const Formula f = testing::random_formula(rng, n, 3);
    const Circuit c = compile(Theory{testing::var_names(n), f});
    const Formula fx = Formula::conj({f, Formula::disj({Formula::var(n), !Formula::var(n)})});
    const Circuit cx = compile(Theory{testing::var_names(n + 1), fx});
    Labelling<double> rho(n), rhox(n + 1);
    for (std::uint32_t v = 0; v < n; ++v) {
      const double p = unit(rng);
      rho.set(v, p, 1 - p);
      rhox.set(v, p, 1 - p);
    }
    rhox.set(static_cast<std::uint32_t>(n), 1.0, 0.0);
    for (std::uint32_t v = 0; v < n; ++v) {
      for (bool pos : {true, false}) {
        const double x = amc_query(c, std::vector<Literal>{{v, pos}}, ProbabilitySemiring{}, rho);
        const double y = amc_query(cx, std::vector<Literal>{{v, pos}}, ProbabilitySemiring{}, rhox);
        CHECK(std::abs(x - y) <= 1e-12);
      }
    }
  }
}

TEST_CASE("query equals enumeration over extensions") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + round % 6;
    const Framework af = testing::random_framework(rng, n, 0.3);
    std::map<std::string, double, std::less<>> p;
    for (std::size_t i = 0; i < n; ++i) p[af.id(i)] = unit(rng);
    for (Semantics s : kAllSemantics) {
      const Circuit c = compile(theory_for(af, s));
      const auto rho = probability_labelling(c, p);
      for (std::size_t i = 0; i < n; ++i) {
        double expected = 0.0;
        for (ArgSet e : extensions(af, s)) {
          if (!e.contains(i)) continue;
          double w = 1.0;
          for (std::size_t j = 0; j < n; ++j) w *= e.contains(j) ? p[af.id(j)] : 1.0 - p[af.id(j)];
          expected += w;
        }
        const double got = amc_query(c, std::vector<Literal>{c.literal(af.id(i))}, ProbabilitySemiring{}, rho);
        CHECK(std::abs(got - expected) <= 1e-9);
      }
    }
  }
}

TEST_CASE("semiring laws on sampled elements") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ProbabilitySemiring s;
  for (int i = 0; i < 100; ++i) {
    const double x = unit(rng), y = unit(rng), z = unit(rng);
    CHECK(s.plus(x, y) == s.plus(y, x));
    CHECK(s.times(x, s.plus(y, z)) == doctest::Approx(s.plus(s.times(x, y), s.times(x, z))).epsilon(1e-14));
    CHECK(s.times(x, s.zero()) == 0.0);
    CHECK(s.times(x, s.one()) == x);
    CHECK(s.plus(x, s.zero()) == x);
  }
  const CountingSemiring k;
  for (std::uint64_t x = 0; x < 20; ++x) {
    for (std::uint64_t y = 0; y < 20; ++y) {
      CHECK(k.times(x, k.plus(y, 3)) == k.plus(k.times(x, y), k.times(x, 3)));
      CHECK(k.times(x, k.zero()) == 0);
    }
  }
}
