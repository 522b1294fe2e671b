#include "pargue/formula.hpp"

#include <stdexcept>

namespace pargue {

struct Formula::Node {
  Kind kind = Kind::True;
  std::size_t var = 0;
  std::vector<Formula> children;
  ArgSet vars;
};

Formula::Formula() : Formula(top()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, 0, {}, {}});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, 0, {}, {}});
  return Formula(node);
}

Formula Formula::var(std::size_t index) {
  if (index >= 64) throw std::out_of_range("formula variable index exceeds 63");
  return Formula(std::make_shared<const Node>(Node{Kind::Var, index, {}, ArgSet::single(index)}));
}

Formula Formula::negate(Formula f) {
  switch (f.kind()) {
    case Kind::True: return bottom();
    case Kind::False: return top();
    case Kind::Not: return f.children()[0];
    default: break;
  }
  ArgSet vars = f.variables();
  return Formula(std::make_shared<const Node>(Node{Kind::Not, 0, {std::move(f)}, vars}));
}

Formula Formula::nary(Kind kind, std::vector<Formula> children) {
  const bool is_and = kind == Kind::And;
  const Kind absorbing = is_and ? Kind::False : Kind::True;
  const Kind neutral = is_and ? Kind::True : Kind::False;
  std::vector<Formula> kept;
  kept.reserve(children.size());
  ArgSet vars;
  for (auto& c : children) {
    if (c.kind() == absorbing) return is_and ? bottom() : top();
    if (c.kind() == neutral) continue;
    vars |= c.variables();
    kept.push_back(std::move(c));
  }
  if (kept.empty()) return is_and ? top() : bottom();
  if (kept.size() == 1) return std::move(kept.front());
  return Formula(std::make_shared<const Node>(Node{kind, 0, std::move(kept), vars}));
}

Formula Formula::conj(std::vector<Formula> children) { return nary(Kind::And, std::move(children)); }

Formula Formula::disj(std::vector<Formula> children) { return nary(Kind::Or, std::move(children)); }

Formula Formula::implies(Formula lhs, Formula rhs) {
  return disj({negate(std::move(lhs)), std::move(rhs)});
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  if (rhs.is_true()) return lhs;
  if (rhs.is_false()) return negate(std::move(lhs));
  return conj({implies(lhs, rhs), implies(rhs, lhs)});
}

Formula Formula::full_assignment(ArgSet chosen, ArgSet universe) {
  std::vector<Formula> lits;
  for (std::size_t i : universe) {
    lits.push_back(chosen.contains(i) ? var(i) : negate(var(i)));
  }
  return conj(std::move(lits));
}

Formula::Kind Formula::kind() const { return node_->kind; }

std::size_t Formula::variable() const { return node_->var; }

std::span<const Formula> Formula::children() const { return node_->children; }

ArgSet Formula::variables() const { return node_->vars; }

bool Formula::evaluate(ArgSet assignment) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Var: return assignment.contains(node_->var);
    case Kind::Not: return !node_->children[0].evaluate(assignment);
    case Kind::And:
      for (const auto& c : node_->children) {
        if (!c.evaluate(assignment)) return false;
      }
      return true;
    case Kind::Or:
      for (const auto& c : node_->children) {
        if (c.evaluate(assignment)) return true;
      }
      return false;
  }
  return false;
}

std::string Formula::to_string(const std::vector<std::string>& names) const {
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
  switch (kind()) {
    case Kind::True: return "T";
    case Kind::False: return "F";
    case Kind::Var: return name(node_->var);
    case Kind::Not: {
      const Formula& c = node_->children[0];
      if (c.kind() == Kind::Var) return "~" + name(c.variable());
      return "~(" + c.to_string(names) + ")";
    }
    case Kind::And:
    case Kind::Or: {
      const char* op = kind() == Kind::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i) out += op;
        out += node_->children[i].to_string(names);
      }
      return out + ")";
    }
  }
  return "";
}

Formula operator!(const Formula& f) { return Formula::negate(f); }
Formula operator&&(const Formula& lhs, const Formula& rhs) { return Formula::conj({lhs, rhs}); }
Formula operator||(const Formula& lhs, const Formula& rhs) { return Formula::disj({lhs, rhs}); }

}  // namespace pargue
