#include "pargue/compile.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pargue/error.hpp"

namespace pargue {

namespace {

// Hash-consed NNF expressions. Ids 0 and 1 are True and False.
class ExprStore {
 public:
  enum class Kind : std::uint8_t { True, False, Lit, And, Or };
  using Id = std::uint32_t;
  static constexpr Id kTrue = 0;
  static constexpr Id kFalse = 1;

  struct Expr {
    Kind kind;
    Literal lit;
    std::vector<Id> kids;
    ArgSet vars;
  };

  ExprStore() {
    intern({Kind::True, {}, {}, {}});
    intern({Kind::False, {}, {}, {}});
  }

  const Expr& get(Id id) const { return exprs_[id]; }

  Id literal(Literal lit) { return intern({Kind::Lit, lit, {}, ArgSet::single(lit.var)}); }

  Id make(Kind kind, std::vector<Id> kids) {
    const bool is_and = kind == Kind::And;
    const Id absorbing = is_and ? kFalse : kTrue;
    const Id neutral = is_and ? kTrue : kFalse;
    std::vector<Id> flat;
    flat.reserve(kids.size());
    for (Id k : kids) {
      if (k == absorbing) return absorbing;
      if (k == neutral) continue;
      if (exprs_[k].kind == kind) {
        flat.insert(flat.end(), exprs_[k].kids.begin(), exprs_[k].kids.end());
      } else {
        flat.push_back(k);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    // x & ~x is False, x | ~x is True.
    ArgSet pos, neg;
    for (Id k : flat) {
      const Expr& e = exprs_[k];
      if (e.kind != Kind::Lit) continue;
      (e.lit.positive ? pos : neg) = (e.lit.positive ? pos : neg).with(e.lit.var);
    }
    if (pos.intersects(neg)) return absorbing;
    if (flat.empty()) return neutral;
    if (flat.size() == 1) return flat.front();
    ArgSet vars;
    for (Id k : flat) vars |= exprs_[k].vars;
    return intern({kind, {}, std::move(flat), vars});
  }

  Id from_formula(const Formula& f, bool negated) {
    using FK = Formula::Kind;
    switch (f.kind()) {
      case FK::True: return negated ? kFalse : kTrue;
      case FK::False: return negated ? kTrue : kFalse;
      case FK::Var: return literal({static_cast<std::uint32_t>(f.variable()), !negated});
      case FK::Not: return from_formula(f.children()[0], !negated);
      case FK::And:
      case FK::Or: {
        std::vector<Id> kids;
        for (const Formula& c : f.children()) kids.push_back(from_formula(c, negated));
        const bool conjunctive = (f.kind() == FK::And) != negated;
        return make(conjunctive ? Kind::And : Kind::Or, std::move(kids));
      }
    }
    return kFalse;
  }

  /// Substitutes the variables in `truths` by True and those in `falsities`
  /// by False.
  Id condition(Id root, ArgSet truths, ArgSet falsities) {
    std::unordered_map<Id, Id> memo;
    return condition_rec(root, truths, falsities, memo);
  }

 private:
  Id condition_rec(Id id, ArgSet truths, ArgSet falsities, std::unordered_map<Id, Id>& memo) {
    const ArgSet fixed = truths | falsities;
    if (!exprs_[id].vars.intersects(fixed)) return id;
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    Id out;
    const Expr& e = exprs_[id];
    if (e.kind == Kind::Lit) {
      const bool value = truths.contains(e.lit.var);
      out = value == e.lit.positive ? kTrue : kFalse;
    } else {
      const Kind kind = e.kind;
      const std::vector<Id> kids = e.kids;  // copy: interning may reallocate
      std::vector<Id> next;
      next.reserve(kids.size());
      for (Id k : kids) next.push_back(condition_rec(k, truths, falsities, memo));
      out = make(kind, std::move(next));
    }
    memo.emplace(id, out);
    return out;
  }

  Id intern(Expr e) {
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(e.kind), e.lit.var, e.lit.positive ? 1U : 0U};
    key.insert(key.end(), e.kids.begin(), e.kids.end());
    auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<Id>(exprs_.size()));
    if (inserted) exprs_.push_back(std::move(e));
    return it->second;
  }

  std::vector<Expr> exprs_;
  std::map<std::vector<std::uint32_t>, Id> index_;
};

class ShannonCompiler {
 public:
  ShannonCompiler(ExprStore& store, Circuit::Builder& builder)
      : store_(store), builder_(builder), false_node_(builder.add_false()) {}

  NodeId compile(ExprStore::Id id) {
    if (auto it = cache_.find(id); it != cache_.end()) return it->second;
    const NodeId out = expand(id);
    cache_.emplace(id, out);
    return out;
  }

 private:
  using Kind = ExprStore::Kind;

  NodeId expand(ExprStore::Id id) {
    const ExprStore::Expr& e = store_.get(id);
    switch (e.kind) {
      case Kind::True: return builder_.add_true();
      case Kind::False: return false_node_;
      case Kind::Lit: return builder_.add_literal(e.lit);
      case Kind::And: {
        ArgSet truths, falsities;
        std::vector<NodeId> units;
        for (ExprStore::Id k : e.kids) {
          const ExprStore::Expr& kid = store_.get(k);
          if (kid.kind != Kind::Lit) continue;
          (kid.lit.positive ? truths : falsities) = (kid.lit.positive ? truths : falsities).with(kid.lit.var);
          units.push_back(builder_.add_literal(kid.lit));
        }
        if (!units.empty()) return propagate(id, truths, falsities, std::move(units));
        break;
      }
      case Kind::Or: break;
    }
    return branch(id);
  }

  NodeId propagate(ExprStore::Id id, ArgSet truths, ArgSet falsities, std::vector<NodeId> units) {
    const ExprStore::Id rest = store_.condition(id, truths, falsities);
    const NodeId sub = compile(rest);
    if (sub == false_node_) return false_node_;
    if (rest != ExprStore::kTrue) units.push_back(sub);
    return units.size() == 1 ? units.front() : builder_.add_and(std::move(units));
  }

  NodeId branch(ExprStore::Id id) {
    const ArgSet vars = store_.get(id).vars;
    const auto x = static_cast<std::uint32_t>(*vars.begin());
    const ArgSet only_x = ArgSet::single(x);
    std::vector<NodeId> branches;
    for (bool value : {true, false}) {
      const ExprStore::Id rest = value ? store_.condition(id, only_x, {}) : store_.condition(id, {}, only_x);
      const NodeId sub = compile(rest);
      if (sub == false_node_) continue;
      const NodeId lit = builder_.add_literal({x, value});
      branches.push_back(rest == ExprStore::kTrue ? lit : builder_.add_and({lit, sub}));
    }
    if (branches.empty()) return false_node_;
    if (branches.size() == 1) return branches.front();
    return builder_.add_or(std::move(branches), x + 1);
  }

  ExprStore& store_;
  Circuit::Builder& builder_;
  NodeId false_node_;
  std::unordered_map<ExprStore::Id, NodeId> cache_;
};

}  // namespace

Circuit compile(const Theory& theory) {
  if (theory.variables.size() > kMaxCompileVariables) {
    throw CapacityError("compilation is limited to " + std::to_string(kMaxCompileVariables) +
                        " variables (theory has " + std::to_string(theory.variables.size()) + ")");
  }
  if (!theory.formula.variables().subset_of(ArgSet::first(theory.variables.size()))) {
    throw InputError("formula mentions undeclared variables");
  }
  ExprStore store;
  const ExprStore::Id root = store.from_formula(theory.formula, false);
  Circuit::Builder builder(theory.variables);
  ShannonCompiler compiler(store, builder);
  const NodeId top = compiler.compile(root);
  return smooth(std::move(builder).finish(top));
}

}  // namespace pargue
