#pragma once

#include <random>
#include <string>
#include <vector>

#include "pargue/circuit.hpp"
#include "pargue/formula.hpp"
#include "pargue/framework.hpp"

namespace testing {

inline pargue::Framework gamma_e() {
  return pargue::Framework({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}});
}

inline pargue::Framework chain() { return pargue::Framework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

/// Random framework with ids a0..a{n-1}; each ordered pair, self-attacks
/// included, is an attack with probability `density`.
inline pargue::Framework random_framework(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::string, std::string>> atts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (edge(rng)) atts.emplace_back(ids[i], ids[j]);
    }
  }
  return pargue::Framework(ids, atts);
}

/// Truth-table models of f over n variables, as sorted assignment sets.
inline std::vector<pargue::ArgSet> models(const pargue::Formula& f, std::size_t n) {
  std::vector<pargue::ArgSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (f.evaluate(pargue::ArgSet(bits))) out.push_back(pargue::ArgSet(bits));
  }
  std::sort(out.begin(), out.end(), pargue::set_order);
  return out;
}

/// Random formula over variables 0..n-1.
inline pargue::Formula random_formula(std::mt19937_64& rng, std::size_t n, int depth) {
  using pargue::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  switch (pick(rng)) {
    case 0: return Formula::var(var(rng));
    case 1: return Formula::negate(Formula::var(var(rng)));
    case 2: return Formula::negate(random_formula(rng, n, depth - 1));
    case 3:
      return Formula::conj({random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1),
                            random_formula(rng, n, depth - 1)});
    case 4: return Formula::disj({random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1)});
    default: return Formula::iff(random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1));
  }
}

inline std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace testing
