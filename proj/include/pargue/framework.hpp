#pragma once

// Abstract argumentation frameworks and extension-based semantics computed by
// direct enumeration. This is the reference layer: encodings, circuits and
// queries are all checked against it.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pargue {

/// Set of arguments of one framework, as a bitmask over argument indices.
class ArgSet {
 public:
  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ArgSet() = default;
  constexpr explicit ArgSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ArgSet single(std::size_t index) { return ArgSet(std::uint64_t{1} << index); }
  /// The set {0, ..., n-1}.
  static constexpr ArgSet first(std::size_t n) {
    return ArgSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  constexpr bool subset_of(ArgSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ArgSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr ArgSet with(std::size_t index) const { return ArgSet(bits_ | (std::uint64_t{1} << index)); }
  constexpr ArgSet without(std::size_t index) const { return ArgSet(bits_ & ~(std::uint64_t{1} << index)); }

  constexpr ArgSet operator|(ArgSet o) const { return ArgSet(bits_ | o.bits_); }
  constexpr ArgSet operator&(ArgSet o) const { return ArgSet(bits_ & o.bits_); }
  constexpr ArgSet operator-(ArgSet o) const { return ArgSet(bits_ & ~o.bits_); }
  constexpr ArgSet& operator|=(ArgSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  constexpr bool operator==(const ArgSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by cardinality, then lexicographically by member indices.
bool set_order(ArgSet lhs, ArgSet rhs);

enum class Semantics { CF, AD, CO, GR, ST, PR };

inline constexpr Semantics kAllSemantics[] = {Semantics::CF, Semantics::AD, Semantics::CO,
                                              Semantics::GR, Semantics::ST, Semantics::PR};

std::string_view to_string(Semantics s);
/// Accepts the two-letter codes, case-insensitively.
std::optional<Semantics> parse_semantics(std::string_view text);

using Extension = ArgSet;

/// An immutable argumentation framework. Arguments are stored in lexicographic
/// order of their ids and referred to by that index everywhere else.
class Framework {
 public:
  static constexpr std::size_t kMaxArguments = 64;

  Framework() = default;
  /// Duplicate arguments and attacks are merged. Throws InputError when an
  /// attack names an unknown argument or an id is not a valid token, and
  /// CapacityError beyond kMaxArguments.
  Framework(std::vector<std::string> arguments,
            const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& arguments() const { return ids_; }
  const std::string& id(std::size_t index) const { return ids_.at(index); }
  ArgSet all() const { return ArgSet::first(ids_.size()); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws InputError for an unknown id.
  std::size_t index_of(std::string_view id) const;
  ArgSet set_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> names(ArgSet s) const;

  bool attacks(std::size_t from, std::size_t to) const { return attacked_by_[from].contains(to); }
  ArgSet attackers_of(std::size_t index) const { return attackers_[index]; }
  ArgSet attacked_by(std::size_t index) const { return attacked_by_[index]; }
  /// Attack pairs ordered by (attacker, target) index.
  std::vector<std::pair<std::size_t, std::size_t>> attack_pairs() const;

  /// The subgraph induced by `keep`: arguments in `keep` and every attack
  /// between them.
  Framework induced(ArgSet keep) const;

  bool operator==(const Framework&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> attacked_by_;
};

bool is_valid_id(std::string_view id);

ArgSet attackers(const Framework& af, std::string_view argument);
ArgSet attacked(const Framework& af, ArgSet s);
bool is_conflict_free(const Framework& af, ArgSet s);
bool is_admissible(const Framework& af, ArgSet s);
bool is_complete(const Framework& af, ArgSet s);
bool is_stable(const Framework& af, ArgSet s);
/// Arguments acceptable with respect to `s`: every attacker is attacked by `s`.
ArgSet characteristic(const Framework& af, ArgSet s);
/// Least fixed point of the characteristic function.
ArgSet grounded(const Framework& af);

inline constexpr std::size_t kMaxEnumerationArguments = 25;

/// Exact extension set, sorted with set_order. Throws CapacityError above
/// kMaxEnumerationArguments.
std::vector<Extension> extensions(const Framework& af, Semantics sigma);

bool credulous(const Framework& af, Semantics sigma, std::string_view argument);
bool credulous(const Framework& af, Semantics sigma, std::size_t argument);

}  // namespace pargue
