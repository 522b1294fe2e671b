#include "pargue/encode.hpp"

#include <string>

#include "pargue/error.hpp"

namespace pargue {

namespace {

// ⋀_{b attacks a} ¬b
Formula unattacked_in(const Framework& af, std::size_t a) {
  std::vector<Formula> parts;
  for (std::size_t b : af.attackers_of(a)) parts.push_back(!Formula::var(b));
  return Formula::conj(std::move(parts));
}

// ⋀_{b attacks a} ⋁_{c attacks b} c
Formula defended(const Framework& af, std::size_t a) {
  std::vector<Formula> parts;
  for (std::size_t b : af.attackers_of(a)) {
    std::vector<Formula> defenders;
    for (std::size_t c : af.attackers_of(b)) defenders.push_back(Formula::var(c));
    parts.push_back(Formula::disj(std::move(defenders)));
  }
  return Formula::conj(std::move(parts));
}

Formula conflict_free(const Framework& af) {
  std::vector<Formula> parts;
  for (auto [a, b] : af.attack_pairs()) {
    parts.push_back(!(Formula::var(a) && Formula::var(b)));
  }
  return Formula::conj(std::move(parts));
}

}  // namespace

Theory encode(const Framework& af, Semantics sigma) {
  std::vector<Formula> parts;
  switch (sigma) {
    case Semantics::CF:
      return {af.arguments(), conflict_free(af)};
    case Semantics::AD:
      for (std::size_t a = 0; a < af.size(); ++a) {
        parts.push_back(Formula::implies(Formula::var(a), unattacked_in(af, a)));
        parts.push_back(Formula::implies(Formula::var(a), defended(af, a)));
      }
      break;
    case Semantics::ST:
      for (std::size_t a = 0; a < af.size(); ++a) {
        parts.push_back(Formula::iff(Formula::var(a), unattacked_in(af, a)));
      }
      break;
    case Semantics::CO:
      parts.push_back(conflict_free(af));
      for (std::size_t a = 0; a < af.size(); ++a) {
        parts.push_back(Formula::iff(Formula::var(a), defended(af, a)));
      }
      break;
    case Semantics::GR:
    case Semantics::PR:
      throw InputError("no direct encoding for " + std::string(to_string(sigma)) +
                       "; use the enumerative encoding");
  }
  return {af.arguments(), Formula::conj(std::move(parts))};
}

Theory encode_enumerative(const Framework& af, Semantics sigma) {
  std::vector<Formula> terms;
  for (Extension e : extensions(af, sigma)) {
    terms.push_back(Formula::full_assignment(e, af.all()));
  }
  return {af.arguments(), Formula::disj(std::move(terms))};
}

Theory encode_constellation(const Framework& af, Semantics sigma, std::string_view argument) {
  const std::size_t query = af.index_of(argument);
  if (af.size() > kMaxConstellationArguments) {
    throw CapacityError("constellation encoding is limited to " +
                        std::to_string(kMaxConstellationArguments) + " arguments (framework has " +
                        std::to_string(af.size()) + ")");
  }
  const std::string& query_id = af.id(query);
  std::vector<Formula> terms;
  const std::uint64_t limit = std::uint64_t{1} << af.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    ArgSet present(bits);
    if (!present.contains(query)) continue;
    if (credulous(af.induced(present), sigma, query_id)) {
      terms.push_back(Formula::full_assignment(present, af.all()));
    }
  }
  return {af.arguments(), Formula::disj(std::move(terms))};
}

Theory theory_for(const Framework& af, Semantics sigma) {
  if (sigma == Semantics::GR || sigma == Semantics::PR) return encode_enumerative(af, sigma);
  return encode(af, sigma);
}

}  // namespace pargue
