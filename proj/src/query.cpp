#include "pargue/query.hpp"

#include <algorithm>
#include <random>

#include "pargue/compile.hpp"
#include "pargue/encode.hpp"
#include "pargue/error.hpp"
#include "pargue/semiring.hpp"

namespace pargue {

ProbabilisticGraph::ProbabilisticGraph(Framework af,
                                       const std::map<std::string, ArgumentLabel, std::less<>>& labels)
    : af_(std::move(af)) {
  for (const auto& [id, label] : labels) {
    if (!af_.find(id)) throw InputError("label for unknown argument '" + id + "'");
    if (const double* p = std::get_if<double>(&label); p && !(*p >= 0.0 && *p <= 1.0)) {
      throw InputError("probability of '" + id + "' is outside [0, 1]");
    }
  }
  for (const auto& id : af_.arguments()) {
    auto it = labels.find(id);
    if (it == labels.end()) throw InputError("argument '" + id + "' has no label");
    labels_.push_back(it->second);
  }
}

bool ProbabilisticGraph::point_only() const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const ArgumentLabel& l) { return std::holds_alternative<double>(l); });
}

BetaLabel ProbabilisticGraph::beta(std::size_t index) const {
  const ArgumentLabel& l = labels_.at(index);
  if (const double* p = std::get_if<double>(&l)) return BetaLabel::point(*p);
  return std::get<BetaLabel>(l);
}

double ProbabilisticGraph::mean(std::size_t index) const { return beta(index).mean(); }

BetaLabels ProbabilisticGraph::beta_labels() const {
  BetaLabels out;
  for (std::size_t i = 0; i < af_.size(); ++i) out.emplace(af_.id(i), beta(i));
  return out;
}

std::map<std::string, double, std::less<>> ProbabilisticGraph::means() const {
  std::map<std::string, double, std::less<>> out;
  for (std::size_t i = 0; i < af_.size(); ++i) out.emplace(af_.id(i), mean(i));
  return out;
}

std::string_view to_string(QueryMode m) { return m == QueryMode::prob ? "prob" : "prob_c"; }

std::optional<QueryMode> parse_query_mode(std::string_view text) {
  if (text == "prob") return QueryMode::prob;
  if (text == "prob-c" || text == "prob_c") return QueryMode::prob_c;
  return std::nullopt;
}

namespace {

QueryResult evaluate_query(const ProbabilisticGraph& g, const Circuit& circuit, Semantics sigma,
                           std::string_view argument, QueryMode mode, const QueryOptions& options) {
  const LabelConfig& config = options.config ? *options.config : LabelConfig::defaults();
  QueryResult r;
  r.argument = std::string(argument);
  r.semantics = sigma;
  r.mode = mode;
  r.circuit_nodes = circuit.size();
  r.model_count = count_models_unchecked(circuit);
  if (g.point_only() && options.covariance == nullptr) {
    const double mean = evaluate(circuit, ProbabilitySemiring{}, probability_labelling(circuit, g.means()));
    r.mean = std::clamp(mean, 0.0, 1.0);
    r.variance = 0.0;
    r.label = BetaLabel::point(r.mean);
    r.fuzzy = to_fuzzy(r.label, config);
    return r;
  }
  Estimate e = propagate(circuit, g.beta_labels(), options.covariance, config);
  r.mean = e.moments.mean;
  r.variance = e.moments.variance;
  r.label = e.label;
  r.fuzzy = e.fuzzy;
  r.warnings = std::move(e.warnings);
  return r;
}

}  // namespace

QueryResult prob(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument,
                 const QueryOptions& options) {
  const Framework& af = g.framework();
  const std::size_t index = af.index_of(argument);
  const Circuit theory = compile(theory_for(af, sigma));
  const Literal query{static_cast<std::uint32_t>(index), true};
  return evaluate_query(g, condition(theory, std::span(&query, 1)), sigma, af.id(index), QueryMode::prob,
                        options);
}

QueryResult prob_c(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument,
                   const QueryOptions& options) {
  const Framework& af = g.framework();
  const std::size_t index = af.index_of(argument);
  const Circuit circuit = compile(encode_constellation(af, sigma, af.id(index)));
  return evaluate_query(g, circuit, sigma, af.id(index), QueryMode::prob_c, options);
}

QueryResult query(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument, QueryMode mode,
                  const QueryOptions& options) {
  return mode == QueryMode::prob ? prob(g, sigma, argument, options) : prob_c(g, sigma, argument, options);
}

std::vector<ArgSet> accepting_worlds(const Framework& af, Semantics sigma, std::string_view argument,
                                     QueryMode mode) {
  const std::size_t index = af.index_of(argument);
  std::vector<ArgSet> worlds;
  if (mode == QueryMode::prob) {
    for (Extension e : extensions(af, sigma)) {
      if (e.contains(index)) worlds.push_back(e);
    }
    return worlds;
  }
  const std::uint64_t limit = std::uint64_t{1} << af.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const ArgSet present(bits);
    if (!present.contains(index)) continue;
    const Framework sub = af.induced(present);
    const std::size_t in_sub = sub.index_of(argument);
    const auto exts = extensions(sub, sigma);
    if (std::any_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(in_sub); })) {
      worlds.push_back(present);
    }
  }
  return worlds;
}

namespace {

MomentPair exact_moments(const ProbabilisticGraph& g, const std::vector<ArgSet>& worlds) {
  const std::size_t n = g.framework().size();
  std::vector<double> mu(n), second(n);
  bool all_points = true;
  for (std::size_t i = 0; i < n; ++i) {
    const BetaLabel b = g.beta(i);
    mu[i] = b.mean();
    second[i] = b.second_moment();
    all_points = all_points && b.degenerate();
  }
  double mean = 0.0;
  for (ArgSet w : worlds) {
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) p *= w.contains(i) ? mu[i] : 1.0 - mu[i];
    mean += p;
  }
  if (all_points) return {mean, 0.0};
  // E[f^2] over pairs of worlds; per argument the factor is E[pi^2],
  // E[(1-pi)^2] or E[pi(1-pi)] depending on membership in each world.
  double second_moment = 0.0;
  for (ArgSet u : worlds) {
    for (ArgSet v : worlds) {
      double p = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool in_u = u.contains(i), in_v = v.contains(i);
        if (in_u && in_v) {
          p *= second[i];
        } else if (!in_u && !in_v) {
          p *= 1.0 - 2.0 * mu[i] + second[i];
        } else {
          p *= mu[i] - second[i];
        }
      }
      second_moment += p;
    }
  }
  return {mean, std::max(0.0, second_moment - mean * mean)};
}

void require_oracle_size(const Framework& af) {
  if (af.size() > kMaxOracleArguments) {
    throw CapacityError("brute-force oracles are limited to " + std::to_string(kMaxOracleArguments) +
                        " arguments (framework has " + std::to_string(af.size()) + ")");
  }
}

}  // namespace

MomentPair brute_force_prob(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument) {
  require_oracle_size(g.framework());
  return exact_moments(g, accepting_worlds(g.framework(), sigma, argument, QueryMode::prob));
}

MomentPair brute_force_prob_c(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument) {
  require_oracle_size(g.framework());
  return exact_moments(g, accepting_worlds(g.framework(), sigma, argument, QueryMode::prob_c));
}

MomentPair mc_oracle(const ProbabilisticGraph& g, Semantics sigma, std::string_view argument, QueryMode mode,
                     std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("at least one sample is required");
  require_oracle_size(g.framework());
  const std::size_t n = g.framework().size();
  const std::vector<ArgSet> worlds = accepting_worlds(g.framework(), sigma, argument, mode);

  std::mt19937_64 rng(seed);
  std::vector<BetaLabel> labels;
  std::vector<std::gamma_distribution<double>> positive, negative;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.beta(i));
    const BetaLabel& b = labels.back();
    positive.emplace_back(b.degenerate() ? 1.0 : b.alpha(), 1.0);
    negative.emplace_back(b.degenerate() ? 1.0 : b.beta(), 1.0);
  }

  std::vector<double> pi(n);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t k = 1; k <= samples; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i].degenerate()) {
        pi[i] = labels[i].mean();
        continue;
      }
      const double x = positive[i](rng);
      const double y = negative[i](rng);
      // Both draws can underflow to zero for very small parameters.
      pi[i] = x + y > 0.0 ? x / (x + y) : labels[i].mean();
    }
    double value = 0.0;
    for (ArgSet w : worlds) {
      double p = 1.0;
      for (std::size_t i = 0; i < n; ++i) p *= w.contains(i) ? pi[i] : 1.0 - pi[i];
      value += p;
    }
    // Welford update.
    const double delta = value - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (value - mean);
  }
  const double variance = samples > 1 ? m2 / static_cast<double>(samples - 1) : 0.0;
  return {mean, variance};
}

}  // namespace pargue
