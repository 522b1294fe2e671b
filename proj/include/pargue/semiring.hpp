#pragma once

// Algebraic model counting over NNF circuits.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pargue/circuit.hpp"
#include "pargue/error.hpp"

namespace pargue {

/// A commutative semiring ⟨A, plus, times, zero, one⟩.
template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& x) {
  typename S::value_type;
  { s.plus(x, x) } -> std::convertible_to<typename S::value_type>;
  { s.times(x, x) } -> std::convertible_to<typename S::value_type>;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
};

struct ProbabilitySemiring {
  using value_type = double;
  double plus(double a, double b) const { return a + b; }
  double times(double a, double b) const { return a * b; }
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
};

struct CountingSemiring {
  using value_type = std::uint64_t;
  std::uint64_t plus(std::uint64_t a, std::uint64_t b) const { return a + b; }
  std::uint64_t times(std::uint64_t a, std::uint64_t b) const { return a * b; }
  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }
};

/// Labels for both literals of every variable of a circuit.
template <class T>
class Labelling {
 public:
  explicit Labelling(std::size_t variables) : positive_(variables), negative_(variables) {}

  void set(Literal lit, T value) {
    auto& slot = lit.positive ? positive_ : negative_;
    if (lit.var >= slot.size()) throw InputError("label for unknown variable index");
    slot[lit.var] = std::move(value);
  }
  void set(std::uint32_t var, T positive, T negative) {
    set(Literal{var, true}, std::move(positive));
    set(Literal{var, false}, std::move(negative));
  }

  const T& operator()(Literal lit) const {
    const auto& slot = lit.positive ? positive_ : negative_;
    if (lit.var >= slot.size() || !slot[lit.var]) {
      throw InputError("missing label for " + std::string(lit.positive ? "" : "~") + "variable " +
                       std::to_string(lit.var));
    }
    return *slot[lit.var];
  }

  std::size_t variable_count() const { return positive_.size(); }

  bool total() const {
    for (std::size_t i = 0; i < positive_.size(); ++i) {
      if (!positive_[i] || !negative_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::optional<T>> positive_;
  std::vector<std::optional<T>> negative_;
};

/// Bottom-up evaluation, each node once: True ↦ one, False ↦ zero,
/// literal ↦ its label, Or ↦ plus of the children, And ↦ times.
template <Semiring S>
typename S::value_type evaluate(const Circuit& c, const S& s,
                                const Labelling<typename S::value_type>& labels) {
  using V = typename S::value_type;
  std::vector<V> value;
  value.reserve(c.size());
  for (const CircuitNode& n : c.nodes()) {
    switch (n.kind) {
      case NodeKind::True: value.push_back(s.one()); break;
      case NodeKind::False: value.push_back(s.zero()); break;
      case NodeKind::Literal: value.push_back(labels(n.literal)); break;
      case NodeKind::Or: {
        V acc = s.zero();
        for (NodeId ch : n.children) acc = s.plus(acc, value[ch]);
        value.push_back(std::move(acc));
        break;
      }
      case NodeKind::And: {
        V acc = s.one();
        for (NodeId ch : n.children) acc = s.times(acc, value[ch]);
        value.push_back(std::move(acc));
        break;
      }
    }
  }
  return value[c.root()];
}

/// Label of a query: the semiring sum over the models containing every
/// literal of `query`, each weighted by the product of its literal labels.
template <Semiring S>
typename S::value_type amc_query(const Circuit& c, std::span<const Literal> query, const S& s,
                                 const Labelling<typename S::value_type>& labels) {
  return evaluate(condition(c, query), s, labels);
}

/// Probability labelling: ρ(x) = p and ρ(¬x) = 1 − p. Every circuit variable
/// must be present in `probabilities` and lie in [0, 1].
Labelling<double> probability_labelling(const Circuit& c,
                                        const std::map<std::string, double, std::less<>>& probabilities);

/// Every literal labelled by `value`.
template <class T>
Labelling<T> uniform_labelling(std::size_t variables, const T& value) {
  Labelling<T> out(variables);
  for (std::uint32_t v = 0; v < variables; ++v) out.set(v, value, value);
  return out;
}

}  // namespace pargue
