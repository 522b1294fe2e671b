#include "pargue/circuit.hpp"

#include <algorithm>
#include <string>

#include "pargue/error.hpp"
#include "pargue/semiring.hpp"

namespace pargue {

Circuit::Builder::Builder(std::vector<std::string> variables) : variables_(std::move(variables)) {
  if (variables_.size() > kMaxVariables) {
    throw CapacityError("circuits support at most " + std::to_string(kMaxVariables) + " variables");
  }
}

NodeId Circuit::Builder::intern(CircuitNode node) {
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(node.kind), node.literal.var,
                                 node.literal.positive ? 1U : 0U, node.decision};
  key.insert(key.end(), node.children.begin(), node.children.end());
  auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<NodeId>(nodes_.size()));
  if (inserted) nodes_.push_back(std::move(node));
  return it->second;
}

NodeId Circuit::Builder::add_true() { return intern({NodeKind::True, {}, {}, 0}); }

NodeId Circuit::Builder::add_false() { return intern({NodeKind::False, {}, {}, 0}); }

NodeId Circuit::Builder::add_literal(Literal lit) {
  if (lit.var >= variables_.size()) throw InputError("literal over undeclared variable");
  return intern({NodeKind::Literal, lit, {}, 0});
}

NodeId Circuit::Builder::add_and(std::vector<NodeId> children) {
  for (NodeId ch : children) {
    if (ch >= nodes_.size()) throw InputError("child node does not exist yet");
  }
  return intern({NodeKind::And, {}, std::move(children), 0});
}

NodeId Circuit::Builder::add_or(std::vector<NodeId> children, std::uint32_t decision) {
  for (NodeId ch : children) {
    if (ch >= nodes_.size()) throw InputError("child node does not exist yet");
  }
  if (decision > variables_.size()) throw InputError("decision variable out of range");
  return intern({NodeKind::Or, {}, std::move(children), decision});
}

Circuit Circuit::Builder::finish(NodeId root) && {
  if (root >= nodes_.size()) throw InputError("root node does not exist");
  std::vector<char> reachable(nodes_.size(), 0);
  reachable[root] = 1;
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (!reachable[i]) continue;
    for (NodeId ch : nodes_[i].children) reachable[ch] = 1;
  }
  std::vector<NodeId> remap(nodes_.size(), 0);
  Circuit c;
  c.variables_ = std::move(variables_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!reachable[i]) continue;
    remap[i] = static_cast<NodeId>(c.nodes_.size());
    CircuitNode n = std::move(nodes_[i]);
    for (NodeId& ch : n.children) ch = remap[ch];
    c.nodes_.push_back(std::move(n));
  }
  c.root_ = remap[root];
  return c;
}

std::size_t Circuit::edge_count() const {
  std::size_t edges = 0;
  for (const auto& n : nodes_) edges += n.children.size();
  return edges;
}

std::vector<ArgSet> Circuit::node_variables() const {
  std::vector<ArgSet> vars(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const CircuitNode& n = nodes_[i];
    if (n.kind == NodeKind::Literal) {
      vars[i] = ArgSet::single(n.literal.var);
    } else {
      for (NodeId ch : n.children) vars[i] |= vars[ch];
    }
  }
  return vars;
}

Literal Circuit::literal(std::string_view variable, bool positive) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == variable) return {static_cast<std::uint32_t>(i), positive};
  }
  throw InputError("unknown variable '" + std::string(variable) + "'");
}

namespace {

bool literal_true(Literal lit, ArgSet assignment) {
  return assignment.contains(lit.var) == lit.positive;
}

// A direct child literal on `var` with the given polarity, or the node itself.
bool asserts(const Circuit& c, NodeId id, Literal lit) {
  const CircuitNode& n = c.node(id);
  if (n.kind == NodeKind::Literal) return n.literal == lit;
  if (n.kind != NodeKind::And) return false;
  return std::any_of(n.children.begin(), n.children.end(), [&](NodeId ch) {
    const CircuitNode& m = c.node(ch);
    return m.kind == NodeKind::Literal && m.literal == lit;
  });
}

bool decision_certificate(const Circuit& c, const CircuitNode& n) {
  if (n.decision == 0 || n.children.size() != 2) return false;
  const Literal pos{n.decision - 1, true};
  return (asserts(c, n.children[0], pos) && asserts(c, n.children[1], ~pos)) ||
         (asserts(c, n.children[0], ~pos) && asserts(c, n.children[1], pos));
}

bool exhaustively_deterministic(const Circuit& c, NodeId or_id, ArgSet scope) {
  const CircuitNode& n = c.node(or_id);
  std::vector<char> in_cone(or_id + 1, 0);
  for (NodeId ch : n.children) in_cone[ch] = 1;
  std::vector<NodeId> cone;
  for (NodeId i = or_id; i-- > 0;) {
    if (!in_cone[i]) continue;
    cone.push_back(i);
    for (NodeId ch : c.node(i).children) in_cone[ch] = 1;
  }
  std::reverse(cone.begin(), cone.end());

  std::vector<char> value(or_id + 1, 0);
  std::uint64_t sub = 0;
  do {
    const ArgSet assignment(sub);
    for (NodeId i : cone) {
      const CircuitNode& m = c.node(i);
      switch (m.kind) {
        case NodeKind::True: value[i] = 1; break;
        case NodeKind::False: value[i] = 0; break;
        case NodeKind::Literal: value[i] = literal_true(m.literal, assignment); break;
        case NodeKind::And:
          value[i] = std::all_of(m.children.begin(), m.children.end(), [&](NodeId ch) { return value[ch] != 0; });
          break;
        case NodeKind::Or:
          value[i] = std::any_of(m.children.begin(), m.children.end(), [&](NodeId ch) { return value[ch] != 0; });
          break;
      }
    }
    std::size_t satisfied = 0;
    for (NodeId ch : n.children) satisfied += value[ch] != 0;
    if (satisfied > 1) return false;
    sub = (sub - scope.bits()) & scope.bits();
  } while (sub != 0);
  return true;
}

}  // namespace

ValidationReport validate(const Circuit& c) {
  ValidationReport report;
  const std::vector<ArgSet> vars = c.node_variables();
  for (NodeId id = 0; id < c.size(); ++id) {
    const CircuitNode& n = c.node(id);
    if (n.kind == NodeKind::And && report.decomposable) {
      ArgSet seen;
      for (NodeId ch : n.children) {
        if (seen.intersects(vars[ch])) {
          report.decomposable = false;
          report.non_decomposable_node = id;
          break;
        }
        seen |= vars[ch];
      }
    }
    if (n.kind != NodeKind::Or || n.children.size() < 2) continue;
    if (report.smooth) {
      for (NodeId ch : n.children) {
        if (vars[ch] != vars[n.children.front()]) {
          report.smooth = false;
          report.non_smooth_node = id;
          break;
        }
      }
    }
    if (report.deterministic) {
      bool ok;
      if (vars[id].size() <= kMaxDeterminismCheckVariables) {
        ok = exhaustively_deterministic(c, id, vars[id]);
      } else if (decision_certificate(c, n)) {
        ok = true;
      } else {
        throw CapacityError("determinism check: disjunction " + std::to_string(id) + " spans " +
                            std::to_string(vars[id].size()) +
                            " variables and carries no decision certificate");
      }
      if (!ok) {
        report.deterministic = false;
        report.non_deterministic_node = id;
      }
    }
  }
  return report;
}

Circuit smooth(const Circuit& c) {
  const std::vector<ArgSet> vars = c.node_variables();
  Circuit::Builder b(c.variables());
  std::vector<NodeId> remap(c.size());
  auto gap = [&](std::size_t v) {
    const auto var = static_cast<std::uint32_t>(v);
    return b.add_or({b.add_literal({var, true}), b.add_literal({var, false})}, var + 1);
  };
  auto fill = [&](NodeId node, ArgSet missing) {
    if (missing.empty()) return node;
    std::vector<NodeId> parts;
    if (b.node(node).kind != NodeKind::True) parts.push_back(node);
    for (std::size_t v : missing) parts.push_back(gap(v));
    return parts.size() == 1 ? parts.front() : b.add_and(std::move(parts));
  };

  for (NodeId id = 0; id < c.size(); ++id) {
    const CircuitNode& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: remap[id] = b.add_true(); break;
      case NodeKind::False: remap[id] = b.add_false(); break;
      case NodeKind::Literal: remap[id] = b.add_literal(n.literal); break;
      case NodeKind::And: {
        std::vector<NodeId> kids;
        for (NodeId ch : n.children) kids.push_back(remap[ch]);
        remap[id] = b.add_and(std::move(kids));
        break;
      }
      case NodeKind::Or: {
        std::vector<NodeId> kids;
        for (NodeId ch : n.children) kids.push_back(fill(remap[ch], vars[id] - vars[ch]));
        remap[id] = b.add_or(std::move(kids), n.decision);
        break;
      }
    }
  }
  NodeId root = remap[c.root()];
  if (b.node(root).kind != NodeKind::False) {
    root = fill(root, ArgSet::first(c.variable_count()) - vars[c.root()]);
  }
  return std::move(b).finish(root);
}

Circuit condition(const Circuit& c, std::span<const Literal> fixed) {
  ArgSet forced_true, forced_false;
  for (Literal lit : fixed) {
    if (lit.var >= c.variable_count()) throw InputError("conditioning on an undeclared variable");
    (lit.positive ? forced_true : forced_false) = (lit.positive ? forced_true : forced_false).with(lit.var);
  }
  if (forced_true.intersects(forced_false)) throw InputError("inconsistent conditioning literals");
  if (fixed.empty()) return c;

  Circuit::Builder b(c.variables());
  const NodeId bottom = b.add_false();
  std::vector<NodeId> remap(c.size());
  for (NodeId id = 0; id < c.size(); ++id) {
    const CircuitNode& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: remap[id] = b.add_true(); break;
      case NodeKind::False: remap[id] = bottom; break;
      case NodeKind::Literal: {
        const bool contradicted =
            n.literal.positive ? forced_false.contains(n.literal.var) : forced_true.contains(n.literal.var);
        remap[id] = contradicted ? bottom : b.add_literal(n.literal);
        break;
      }
      case NodeKind::And: {
        std::vector<NodeId> kids;
        bool dead = false;
        for (NodeId ch : n.children) {
          dead = dead || remap[ch] == bottom;
          kids.push_back(remap[ch]);
        }
        remap[id] = dead ? bottom : b.add_and(std::move(kids));
        break;
      }
      case NodeKind::Or: {
        std::vector<NodeId> kids;
        for (NodeId ch : n.children) {
          if (remap[ch] != bottom) kids.push_back(remap[ch]);
        }
        if (kids.empty()) {
          remap[id] = bottom;
        } else if (kids.size() == 1) {
          remap[id] = kids.front();
        } else {
          remap[id] = b.add_or(std::move(kids), n.decision);
        }
        break;
      }
    }
  }
  return std::move(b).finish(remap[c.root()]);
}

std::uint64_t count_models_unchecked(const Circuit& c) {
  const std::uint64_t count =
      evaluate(c, CountingSemiring{}, uniform_labelling<std::uint64_t>(c.variable_count(), 1));
  // Declared variables the circuit never mentions are free.
  const ArgSet mentioned = c.node_variables()[c.root()];
  const std::size_t free_vars = c.variable_count() - mentioned.size();
  return count << free_vars;
}

std::uint64_t model_count(const Circuit& c) {
  const ValidationReport report = validate(c);
  if (!report.valid()) {
    std::string what = "model counting requires a";
    if (!report.decomposable) what += " decomposable";
    if (!report.deterministic) what += " deterministic";
    if (!report.smooth) what += " smooth";
    throw StructuralError(what + " circuit");
  }
  return count_models_unchecked(c);
}

void write_nnf(const Circuit& c, std::ostream& out) {
  out << "nnf " << c.size() << ' ' << c.edge_count() << ' ' << c.variable_count() << '\n';
  for (std::size_t i = 0; i < c.variable_count(); ++i) {
    out << "c var " << (i + 1) << ' ' << c.variables()[i] << '\n';
  }
  for (const CircuitNode& n : c.nodes()) {
    switch (n.kind) {
      case NodeKind::True: out << "T\n"; break;
      case NodeKind::False: out << "F\n"; break;
      case NodeKind::Literal:
        out << "L " << (n.literal.positive ? "" : "-") << (n.literal.var + 1) << '\n';
        break;
      case NodeKind::And:
      case NodeKind::Or:
        out << (n.kind == NodeKind::And ? "A " : "O ");
        if (n.kind == NodeKind::Or) out << n.decision << ' ';
        out << n.children.size();
        for (NodeId ch : n.children) out << ' ' << ch;
        out << '\n';
        break;
    }
  }
}

Labelling<double> probability_labelling(const Circuit& c,
                                        const std::map<std::string, double, std::less<>>& probabilities) {
  Labelling<double> out(c.variable_count());
  for (std::uint32_t v = 0; v < c.variable_count(); ++v) {
    auto it = probabilities.find(c.variables()[v]);
    if (it == probabilities.end()) throw InputError("missing probability for '" + c.variables()[v] + "'");
    const double p = it->second;
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("probability for '" + c.variables()[v] + "' is outside [0, 1]");
    }
    out.set(v, p, 1.0 - p);
  }
  return out;
}

}  // namespace pargue
