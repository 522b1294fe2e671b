#include "pargue/framework.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "pargue/error.hpp"

namespace pargue {

bool set_order(ArgSet lhs, ArgSet rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  // Same cardinality: the set whose first differing member is smaller comes first.
  const std::uint64_t diff = lhs.bits() ^ rhs.bits();
  if (diff == 0) return false;
  return lhs.contains(static_cast<std::size_t>(std::countr_zero(diff)));
}

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::CF: return "CF";
    case Semantics::AD: return "AD";
    case Semantics::CO: return "CO";
    case Semantics::GR: return "GR";
    case Semantics::ST: return "ST";
    case Semantics::PR: return "PR";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Semantics s : kAllSemantics) {
    if (to_string(s) == upper) return s;
  }
  return std::nullopt;
}

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

Framework::Framework(std::vector<std::string> arguments,
                     const std::vector<std::pair<std::string, std::string>>& attacks)
    : ids_(std::move(arguments)) {
  for (const auto& id : ids_) {
    if (!is_valid_id(id)) throw InputError("invalid argument id '" + id + "'");
  }
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (ids_.size() > kMaxArguments) {
    throw CapacityError("framework has " + std::to_string(ids_.size()) +
                        " arguments; at most " + std::to_string(kMaxArguments) + " are supported");
  }
  attackers_.assign(ids_.size(), ArgSet{});
  attacked_by_.assign(ids_.size(), ArgSet{});
  for (const auto& [from, to] : attacks) {
    const std::size_t f = index_of(from);
    const std::size_t t = index_of(to);
    attackers_[t] = attackers_[t].with(f);
    attacked_by_[f] = attacked_by_[f].with(t);
  }
}

std::optional<std::size_t> Framework::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Framework::index_of(std::string_view id) const {
  if (auto idx = find(id)) return *idx;
  throw InputError("unknown argument '" + std::string(id) + "'");
}

ArgSet Framework::set_of(const std::vector<std::string>& ids) const {
  ArgSet s;
  for (const auto& id : ids) s = s.with(index_of(id));
  return s;
}

std::vector<std::string> Framework::names(ArgSet s) const {
  std::vector<std::string> out;
  for (std::size_t i : s) out.push_back(ids_.at(i));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Framework::attack_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t f = 0; f < size(); ++f) {
    for (std::size_t t : attacked_by_[f]) out.emplace_back(f, t);
  }
  return out;
}

Framework Framework::induced(ArgSet keep) const {
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> atts;
  for (std::size_t i : keep & all()) args.push_back(ids_[i]);
  for (auto [f, t] : attack_pairs()) {
    if (keep.contains(f) && keep.contains(t)) atts.emplace_back(ids_[f], ids_[t]);
  }
  return Framework(std::move(args), atts);
}

ArgSet attackers(const Framework& af, std::string_view argument) {
  return af.attackers_of(af.index_of(argument));
}

ArgSet attacked(const Framework& af, ArgSet s) {
  ArgSet out;
  for (std::size_t i : s) out |= af.attacked_by(i);
  return out;
}

bool is_conflict_free(const Framework& af, ArgSet s) {
  for (std::size_t i : s) {
    if (af.attackers_of(i).intersects(s)) return false;
  }
  return true;
}

ArgSet characteristic(const Framework& af, ArgSet s) {
  const ArgSet defeated = attacked(af, s);
  ArgSet out;
  for (std::size_t i = 0; i < af.size(); ++i) {
    if (af.attackers_of(i).subset_of(defeated)) out = out.with(i);
  }
  return out;
}

bool is_admissible(const Framework& af, ArgSet s) {
  return is_conflict_free(af, s) && s.subset_of(characteristic(af, s));
}

bool is_complete(const Framework& af, ArgSet s) {
  return is_conflict_free(af, s) && s == characteristic(af, s);
}

bool is_stable(const Framework& af, ArgSet s) {
  return is_conflict_free(af, s) && (s | attacked(af, s)) == af.all();
}

ArgSet grounded(const Framework& af) {
  ArgSet current;
  // The characteristic function is monotone, so iteration from the empty set
  // reaches its least fixed point within |arguments| + 1 rounds.
  for (std::size_t round = 0; round <= af.size(); ++round) {
    ArgSet next = characteristic(af, current);
    if (next == current) break;
    current = next;
  }
  return current;
}

namespace {

void require_enumerable(const Framework& af) {
  if (af.size() > kMaxEnumerationArguments) {
    throw CapacityError("extension enumeration is limited to " +
                        std::to_string(kMaxEnumerationArguments) + " arguments (framework has " +
                        std::to_string(af.size()) + ")");
  }
}

template <class Pred>
std::vector<Extension> filter_subsets(const Framework& af, Pred pred) {
  std::vector<Extension> out;
  const std::uint64_t limit = std::uint64_t{1} << af.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (pred(ArgSet(bits))) out.emplace_back(bits);
  }
  return out;
}

std::vector<Extension> maximal(std::vector<Extension> sets) {
  std::sort(sets.begin(), sets.end(), [](ArgSet a, ArgSet b) { return set_order(b, a); });
  std::vector<Extension> kept;
  for (ArgSet s : sets) {
    // Every non-maximal set lies below some maximal one, so comparing against
    // the maxima found so far is enough.
    bool dominated = std::any_of(kept.begin(), kept.end(), [s](ArgSet m) { return s.subset_of(m); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace

std::vector<Extension> extensions(const Framework& af, Semantics sigma) {
  require_enumerable(af);
  std::vector<Extension> out;
  switch (sigma) {
    case Semantics::CF:
      out = filter_subsets(af, [&](ArgSet s) { return is_conflict_free(af, s); });
      break;
    case Semantics::AD:
      out = filter_subsets(af, [&](ArgSet s) { return is_admissible(af, s); });
      break;
    case Semantics::CO:
      out = filter_subsets(af, [&](ArgSet s) { return is_complete(af, s); });
      break;
    case Semantics::ST:
      out = filter_subsets(af, [&](ArgSet s) { return is_stable(af, s); });
      break;
    case Semantics::GR:
      out = {grounded(af)};
      break;
    case Semantics::PR:
      out = maximal(filter_subsets(af, [&](ArgSet s) { return is_admissible(af, s); }));
      break;
  }
  std::sort(out.begin(), out.end(), set_order);
  return out;
}

bool credulous(const Framework& af, Semantics sigma, std::string_view argument) {
  return credulous(af, sigma, af.index_of(argument));
}

bool credulous(const Framework& af, Semantics sigma, std::size_t argument) {
  if (argument >= af.size()) throw InputError("argument index out of range");
  switch (sigma) {
    case Semantics::CF:
      return !af.attacks(argument, argument);
    case Semantics::GR:
      return grounded(af).contains(argument);
    case Semantics::AD:
    case Semantics::CO:
    case Semantics::PR:
    case Semantics::ST: {
      // Credulous acceptance coincides for AD, CO and PR: every admissible set
      // extends to a preferred extension, which is complete.
      require_enumerable(af);
      if (af.attacks(argument, argument)) return false;
      const ArgSet others = af.all().without(argument);
      const std::uint64_t target = ArgSet::single(argument).bits();
      // Enumerate subsets of the other arguments and add the query argument.
      std::uint64_t sub = 0;
      do {
        ArgSet s(sub | target);
        bool ok = sigma == Semantics::ST ? is_stable(af, s) : is_admissible(af, s);
        if (ok) return true;
        sub = (sub - others.bits()) & others.bits();
      } while (sub != 0);
      return false;
    }
  }
  return false;
}

}  // namespace pargue
