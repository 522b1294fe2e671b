#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pargue/framework.hpp"

namespace pargue {

/// Immutable propositional formula over variables identified by index.
///
/// The combinators fold constants as they build: an empty conjunction is
/// True, an empty disjunction is False, True/False children are absorbed and
/// double negation cancels. Nothing else is rewritten, so the printed form of
/// an encoding stays close to how it was written.
class Formula {
 public:
  enum class Kind { True, False, Var, Not, And, Or };

  Formula();  // True

  static Formula top();
  static Formula bottom();
  static Formula var(std::size_t index);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  /// Conjunction of every variable in `universe`: positive if in `chosen`.
  static Formula full_assignment(ArgSet chosen, ArgSet universe);

  Kind kind() const;
  /// Variable index; only meaningful for Kind::Var.
  std::size_t variable() const;
  std::span<const Formula> children() const;

  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }

  bool evaluate(ArgSet assignment) const;
  ArgSet variables() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula nary(Kind kind, std::vector<Formula> children);
  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&&(const Formula& lhs, const Formula& rhs);
Formula operator||(const Formula& lhs, const Formula& rhs);

/// A formula together with its declared variable vocabulary. Variable i of the
/// formula is named variables[i]; the declared set may include variables the
/// formula never mentions.
struct Theory {
  std::vector<std::string> variables;
  Formula formula;
};

}  // namespace pargue
