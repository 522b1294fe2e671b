#pragma once

// Moment propagation through compiled circuits whose leaves carry beta labels.
//
// The circuit computes a multilinear polynomial f of the leaf probabilities
// (x ↦ pi_x, ~x ↦ 1 - pi_x). With independent leaves its mean is f evaluated
// at the leaf means, which is exact on a smooth deterministic decomposable
// circuit. The variance is the first-order (delta method) estimate
// g' Σ g, with g the gradient of f at the means obtained by one backward
// pass over the DAG.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pargue/beta.hpp"
#include "pargue/circuit.hpp"

namespace pargue {

using BetaLabels = std::map<std::string, BetaLabel, std::less<>>;

/// Symmetric covariance between argument probabilities. Only off-diagonal
/// entries are stored; the diagonal always comes from the labels.
class CovarianceSpec {
 public:
  CovarianceSpec() = default;

  /// Sets Cov(a, b) = Cov(b, a). Throws InputError when a == b.
  void set(const std::string& a, const std::string& b, double value);
  double get(std::string_view a, std::string_view b) const;
  const std::map<std::pair<std::string, std::string>, double>& entries() const { return entries_; }

 private:
  std::map<std::pair<std::string, std::string>, double> entries_;
};

struct Estimate {
  MomentPair moments;
  BetaLabel label = BetaLabel::point(0.0);
  FuzzyLabel fuzzy;
  std::vector<std::string> warnings;
};

double eval_mean(const Circuit& c, const BetaLabels& labels);

/// ∂f/∂pi_v for every circuit variable v, indexed like c.variables().
std::vector<double> gradients(const Circuit& c, const BetaLabels& labels);

/// Mean, delta-method variance, matched beta label and fuzzy rendering.
/// Throws InputError when the covariance names unknown arguments; entries
/// violating |Cov(a,b)| <= sd(a) sd(b) are kept and reported as warnings.
Estimate propagate(const Circuit& c, const BetaLabels& labels, const CovarianceSpec* covariance = nullptr,
                   const LabelConfig& config = LabelConfig::defaults());

}  // namespace pargue
