#pragma once

// Probabilistic queries over argumentation frameworks.
//
//   PROB(a)   sums, over the extensions E containing a, the probability that
//             exactly the arguments of E hold.
//   PROB-C(a) sums, over the induced subgraphs in which a is credulously
//             accepted, the probability of that subgraph under independent
//             argument inclusion.
//
// Both are answered by compiling a theory, evaluating it in the probability
// semiring (point labels) or by moment propagation (beta labels). The
// brute_force_* and mc_oracle functions are independent reference paths.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pargue/beta.hpp"
#include "pargue/beta_prop.hpp"
#include "pargue/framework.hpp"

namespace pargue {

using ArgumentLabel = std::variant<double, BetaLabel>;

class ProbabilisticGraph {
 public:
  /// Throws InputError when an argument is unlabelled, a label names an
  /// unknown argument or a point probability lies outside [0, 1].
  ProbabilisticGraph(Framework af, const std::map<std::string, ArgumentLabel, std::less<>>& labels);

  const Framework& framework() const { return af_; }
  const ArgumentLabel& label(std::size_t index) const { return labels_.at(index); }

  /// True when no argument carries a beta label.
  bool point_only() const;
  /// Beta view: point probabilities become zero-variance labels.
  BetaLabel beta(std::size_t index) const;
  double mean(std::size_t index) const;

  BetaLabels beta_labels() const;
  std::map<std::string, double, std::less<>> means() const;

 private:
  Framework af_;
  std::vector<ArgumentLabel> labels_;
};

enum class QueryMode { prob, prob_c };

std::string_view to_string(QueryMode m);
/// Accepts "prob", "prob-c" and "prob_c".
std::optional<QueryMode> parse_query_mode(std::string_view text);

struct QueryResult {
  std::string argument;
  Semantics semantics = Semantics::AD;
  QueryMode mode = QueryMode::prob;
  double mean = 0.0;
  double variance = 0.0;
  BetaLabel label = BetaLabel::point(0.0);
  FuzzyLabel fuzzy;
  std::size_t circuit_nodes = 0;
  std::uint64_t model_count = 0;
  std::vector<std::string> warnings;
};

struct QueryOptions {
  const CovarianceSpec* covariance = nullptr;
  const LabelConfig* config = nullptr;
};

QueryResult prob(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument,
                 const QueryOptions& options = {});
QueryResult prob_c(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument,
                   const QueryOptions& options = {});
QueryResult query(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument, QueryMode mode,
                  const QueryOptions& options = {});

inline constexpr std::size_t kMaxOracleArguments = 12;

/// The assignments (sets of true arguments) whose probabilities a query sums:
/// extensions containing the argument (prob), or accepting subgraphs
/// (prob_c). Computed from the extension definitions directly.
std::vector<ArgSet> accepting_worlds(const Framework& af, Semantics sigma, std::string_view argument,
                                     QueryMode mode);

/// Exact mean and exact mixture variance by enumeration. Point-only graphs
/// give variance 0. Throws CapacityError above kMaxOracleArguments.
MomentPair brute_force_prob(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument);
MomentPair brute_force_prob_c(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument);

/// Empirical mean and variance of the point query over `samples` joint draws
/// of the argument probabilities. Deterministic for a given seed.
MomentPair mc_oracle(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument, QueryMode mode,
                     std::size_t samples, std::uint64_t seed);

}  // namespace pargue
