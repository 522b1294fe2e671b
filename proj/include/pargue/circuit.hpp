#pragma once

// Negation normal form circuits: a rooted DAG stored in topological order
// (children always have smaller indices than their parents).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pargue/framework.hpp"

namespace pargue {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { True, False, Literal, And, Or };

struct Literal {
  std::uint32_t var = 0;
  bool positive = true;

  Literal operator~() const { return {var, !positive}; }
  auto operator<=>(const Literal&) const = default;
};

struct CircuitNode {
  NodeKind kind = NodeKind::True;
  Literal literal{};            // Literal nodes only
  std::vector<NodeId> children;  // And/Or nodes only
  std::uint32_t decision = 0;    // Or nodes: 1-based decision variable, 0 if none
};

class Circuit {
 public:
  static constexpr std::size_t kMaxVariables = 64;

  /// Appends nodes bottom-up. Structurally identical nodes are shared; no
  /// logical simplification is performed, so deliberately malformed circuits
  /// can be built for testing the validators.
  class Builder {
   public:
    explicit Builder(std::vector<std::string> variables);

    NodeId add_true();
    NodeId add_false();
    NodeId add_literal(Literal lit);
    NodeId add_and(std::vector<NodeId> children);
    NodeId add_or(std::vector<NodeId> children, std::uint32_t decision = 0);

    const CircuitNode& node(NodeId id) const { return nodes_.at(id); }
    std::size_t variable_count() const { return variables_.size(); }

    /// Drops nodes unreachable from `root`, keeping the relative order.
    Circuit finish(NodeId root) &&;

   private:
    NodeId intern(CircuitNode node);

    std::vector<std::string> variables_;
    std::vector<CircuitNode> nodes_;
    std::map<std::vector<std::uint32_t>, NodeId> index_;
  };

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::span<const CircuitNode> nodes() const { return nodes_; }
  const CircuitNode& node(NodeId id) const { return nodes_.at(id); }
  NodeId root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t edge_count() const;

  /// Variables mentioned below each node.
  std::vector<ArgSet> node_variables() const;

  /// Literal of a named variable; throws InputError for unknown names.
  Literal literal(std::string_view variable, bool positive = true) const;

  bool is_false() const { return nodes_[root_].kind == NodeKind::False; }

 private:
  Circuit() = default;
  std::vector<std::string> variables_;
  std::vector<CircuitNode> nodes_;
  NodeId root_ = 0;
};

struct ValidationReport {
  bool decomposable = true;
  bool deterministic = true;
  bool smooth = true;
  std::optional<NodeId> non_decomposable_node;
  std::optional<NodeId> non_deterministic_node;
  std::optional<NodeId> non_smooth_node;

  bool valid() const { return decomposable && deterministic && smooth; }
};

/// Largest disjunction scope checked for determinism by exhaustive assignment.
inline constexpr std::size_t kMaxDeterminismCheckVariables = 20;

/// Decomposability and smoothness are checked syntactically. Determinism is
/// checked exactly by enumerating the assignments of each disjunction's scope;
/// larger scopes must carry a decision-variable certificate or a
/// CapacityError is thrown.
ValidationReport validate(const Circuit& c);

/// Makes every disjunction's children mention the same variables and the
/// root mention every declared variable, by conjoining (v | ~v) gap nodes.
Circuit smooth(const Circuit& c);

/// Fixes the given literals to true: leaves of their complements become
/// False and the falsity is propagated upwards. Throws InputError for an
/// inconsistent set or unknown variable.
Circuit condition(const Circuit& c, std::span<const Literal> fixed);

/// Satisfying assignments over the declared variables. Throws StructuralError
/// unless the circuit is decomposable, deterministic and smooth.
std::uint64_t model_count(const Circuit& c);

/// Same count without the structural validation.
std::uint64_t count_models_unchecked(const Circuit& c);

/// c2d-style NNF text: `nnf <nodes> <edges> <vars>`, `c var <index> <id>`
/// comments, then one line per node in topological order.
void write_nnf(const Circuit& c, std::ostream& out);

}  // namespace pargue
