#pragma once

#include "pargue/circuit.hpp"
#include "pargue/formula.hpp"

namespace pargue {

inline constexpr std::size_t kMaxCompileVariables = 25;

/// Compiles a theory into a smooth, deterministic, decomposable NNF circuit
/// over its declared variables.
///
/// The formula is put in negation normal form and hash-consed, then expanded
/// on the lowest-indexed remaining variable, f = (x & f|x) | (~x & f|~x).
/// Literals that are top-level conjuncts are propagated before branching.
/// Residual formulas are cached by their canonical (flattened, sorted,
/// deduplicated) form, so identical inputs always yield identical circuits.
/// Throws CapacityError above kMaxCompileVariables declared variables.
Circuit compile(const Theory& theory);

}  // namespace pargue
