#pragma once

// Propositional theories whose models are the extensions of a framework
// (variable i is argument i of the framework).

#include <string_view>

#include "pargue/formula.hpp"
#include "pargue/framework.hpp"

namespace pargue {

inline constexpr std::size_t kMaxConstellationArguments = 20;

/// Direct encoding for CF, AD, CO and ST. Throws InputError for GR and PR,
/// which are only available through encode_enumerative.
Theory encode(const Framework& af, Semantics sigma);

/// Disjunction of one full assignment per extension.
Theory encode_enumerative(const Framework& af, Semantics sigma);

/// Disjunction of the full assignments of every induced subgraph in which
/// `argument` is credulously accepted under `sigma`.
Theory encode_constellation(const Framework& af, Semantics sigma, std::string_view argument);

/// The theory used for queries: direct where available, enumerative otherwise.
Theory theory_for(const Framework& af, Semantics sigma);

}  // namespace pargue
