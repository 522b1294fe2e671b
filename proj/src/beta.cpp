#include "pargue/beta.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "pargue/error.hpp"

namespace pargue {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxVariance = 0.25;

constexpr std::array<std::string_view, kAleatoryCount> kAleatoryNames = {
    "absolutely_not_likely", "very_unlikely", "unlikely", "somewhat_unlikely", "chances_about_even",
    "somewhat_likely",       "likely",        "very_likely", "absolutely_likely"};

constexpr std::array<std::string_view, kEpistemicCount> kEpistemicNames = {
    "total_confidence", "high_confidence", "some_confidence", "low_confidence", "no_confidence"};

}  // namespace

BetaLabel::BetaLabel(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(std::isfinite(alpha) && alpha > 0.0) || !(std::isfinite(beta) && beta > 0.0)) {
    throw InputError("beta parameters must be finite and positive");
  }
}

BetaLabel BetaLabel::point(double mean) {
  if (!(mean >= 0.0 && mean <= 1.0)) throw InputError("point probability must lie in [0, 1]");
  BetaLabel b;
  b.degenerate_ = true;
  b.point_ = mean;
  b.alpha_ = mean > 0.0 ? kInf : 1.0;
  b.beta_ = mean < 1.0 ? kInf : 1.0;
  return b;
}

double BetaLabel::alpha() const { return alpha_; }
double BetaLabel::beta() const { return beta_; }
double BetaLabel::strength() const { return degenerate_ ? kInf : alpha_ + beta_; }
double BetaLabel::mean() const { return degenerate_ ? point_ : alpha_ / (alpha_ + beta_); }

double BetaLabel::variance() const {
  if (degenerate_) return 0.0;
  const double mu = mean();
  return mu * (1.0 - mu) / (strength() + 1.0);
}

double BetaLabel::second_moment() const {
  if (degenerate_) return point_ * point_;
  const double mu = mean();
  const double s = strength();
  return mu * (mu * s + 1.0) / (s + 1.0);
}

BetaLabel posterior(const BetaLabel& prior, double positive, double negative) {
  if (!(positive >= 0.0) || !(negative >= 0.0) || !std::isfinite(positive) || !std::isfinite(negative)) {
    throw InputError("evidence counts must be finite and nonnegative");
  }
  if (prior.degenerate()) return prior;
  return BetaLabel(prior.alpha() + positive, prior.beta() + negative);
}

MomentPair moments(const BetaLabel& b) { return {b.mean(), b.variance()}; }

BetaLabel complement(const BetaLabel& b) {
  if (b.degenerate()) return BetaLabel::point(1.0 - b.mean());
  return BetaLabel(b.beta(), b.alpha());
}

BetaLabel moment_match(MomentPair m) {
  if (!(m.mean >= 0.0 && m.mean <= 1.0)) throw InputError("mean must lie in [0, 1]");
  if (!(m.variance >= 0.0) || !std::isfinite(m.variance)) {
    throw InputError("variance must be finite and nonnegative");
  }
  const double bernoulli = m.mean * (1.0 - m.mean);
  if (m.variance == 0.0 || bernoulli == 0.0) return BetaLabel::point(m.mean);
  const double variance = std::min(m.variance, kVarianceCeiling * bernoulli);
  const double strength = std::max(bernoulli / variance - 1.0, kMinStrength);
  return BetaLabel(m.mean * strength, (1.0 - m.mean) * strength);
}

std::string_view to_string(Aleatory a) { return kAleatoryNames[static_cast<std::size_t>(a)]; }
std::string_view to_string(Epistemic e) { return kEpistemicNames[static_cast<std::size_t>(e)]; }

std::optional<Aleatory> parse_aleatory(std::string_view token) {
  for (std::size_t i = 0; i < kAleatoryNames.size(); ++i) {
    if (kAleatoryNames[i] == token) return static_cast<Aleatory>(i);
  }
  return std::nullopt;
}

std::optional<Epistemic> parse_epistemic(std::string_view token) {
  for (std::size_t i = 0; i < kEpistemicNames.size(); ++i) {
    if (kEpistemicNames[i] == token) return static_cast<Epistemic>(i);
  }
  return std::nullopt;
}

std::string describe(const FuzzyLabel& f) {
  std::string out(to_string(f.aleatory));
  out += " with ";
  out += to_string(f.epistemic);
  std::replace(out.begin(), out.end(), '_', ' ');
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

namespace {

LabelConfig make_defaults() {
  LabelConfig c;
  c.aleatory_edges = {0.0, 0.005, 0.15, 0.35, 0.44, 0.54, 0.665, 0.855, 0.995, 1.0};
  c.epistemic_edges = {0.0, 0.001, 0.0119, 0.049, 0.066, 0.25};
  c.aleatory_representatives = {0.0, 0.0775, 0.25, 0.395, 0.5, 0.6025, 0.7692, 0.925, 1.0};
  c.epistemic_representatives = {0.0, 0.00645, 0.0237, 0.0575, 0.158};
  for (std::size_t a = 0; a < kAleatoryCount; ++a) {
    for (std::size_t e = 0; e < kEpistemicCount; ++e) {
      c.representatives[a][e] = {c.aleatory_representatives[a], c.epistemic_representatives[e]};
    }
  }
  return c;
}

template <std::size_t N>
std::size_t bin_of(const std::array<double, N>& edges, double value) {
  for (std::size_t i = 1; i + 1 < N; ++i) {
    if (value < edges[i]) return i - 1;
  }
  return N - 2;
}

template <std::size_t N>
void check_edges(const std::array<double, N>& edges, double top, std::string_view what) {
  if (edges.front() != 0.0 || edges.back() != top) {
    throw InputError(std::string(what) + " edges must span [0, " + std::to_string(top) + "]");
  }
  for (std::size_t i = 1; i < N; ++i) {
    if (!(edges[i] > edges[i - 1])) throw InputError(std::string(what) + " edges must be strictly increasing");
  }
}

template <std::size_t N, class Parse>
std::array<double, N> read_named(const nlohmann::json& obj, Parse parse, std::string_view what) {
  if (!obj.is_object() || obj.size() != N) {
    throw InputError(std::string(what) + " representatives must name every label exactly once");
  }
  std::array<double, N> out{};
  for (const auto& [key, value] : obj.items()) {
    auto label = parse(key);
    if (!label) throw InputError("unknown " + std::string(what) + " label '" + key + "'");
    out[static_cast<std::size_t>(*label)] = value.template get<double>();
  }
  return out;
}

}  // namespace

const LabelConfig& LabelConfig::defaults() {
  static const LabelConfig config = make_defaults();
  return config;
}

void LabelConfig::validate() const {
  check_edges(aleatory_edges, 1.0, "aleatory");
  check_edges(epistemic_edges, kMaxVariance, "epistemic");
  for (const auto& row : representatives) {
    for (const MomentPair& m : row) {
      if (!(m.mean >= 0.0 && m.mean <= 1.0) || !(m.variance >= 0.0 && m.variance <= kMaxVariance)) {
        throw InputError("representative (mean, variance) out of range");
      }
    }
  }
}

LabelConfig LabelConfig::from_json(std::string_view text) {
  LabelConfig c;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& ale = doc.at("aleatory");
    const auto& epi = doc.at("epistemic");
    const auto ale_edges = ale.at("edges").get<std::vector<double>>();
    const auto epi_edges = epi.at("edges").get<std::vector<double>>();
    if (ale_edges.size() != c.aleatory_edges.size() || epi_edges.size() != c.epistemic_edges.size()) {
      throw InputError("label config needs 10 aleatory and 6 epistemic edges");
    }
    std::copy(ale_edges.begin(), ale_edges.end(), c.aleatory_edges.begin());
    std::copy(epi_edges.begin(), epi_edges.end(), c.epistemic_edges.begin());
    c.aleatory_representatives =
        read_named<kAleatoryCount>(ale.at("representatives"), parse_aleatory, "aleatory");
    c.epistemic_representatives =
        read_named<kEpistemicCount>(epi.at("representatives"), parse_epistemic, "epistemic");
    for (std::size_t a = 0; a < kAleatoryCount; ++a) {
      for (std::size_t e = 0; e < kEpistemicCount; ++e) {
        c.representatives[a][e] = {c.aleatory_representatives[a], c.epistemic_representatives[e]};
      }
    }
    if (doc.contains("pairs")) {
      for (const auto& p : doc.at("pairs")) {
        auto a = parse_aleatory(p.at("aleatory").get<std::string>());
        auto e = parse_epistemic(p.at("epistemic").get<std::string>());
        if (!a || !e) throw InputError("unknown label in representative pair");
        c.representatives[static_cast<std::size_t>(*a)][static_cast<std::size_t>(*e)] = {
            p.at("mean").get<double>(), p.at("variance").get<double>()};
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("label config: ") + ex.what());
  }
  c.validate();
  return c;
}

std::string LabelConfig::to_json() const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json ale_reps, epi_reps;
  for (std::size_t i = 0; i < kAleatoryCount; ++i) {
    ale_reps[std::string(kAleatoryNames[i])] = aleatory_representatives[i];
  }
  for (std::size_t i = 0; i < kEpistemicCount; ++i) {
    epi_reps[std::string(kEpistemicNames[i])] = epistemic_representatives[i];
  }
  doc["aleatory"] = {{"edges", aleatory_edges}, {"representatives", ale_reps}};
  doc["epistemic"] = {{"edges", epistemic_edges}, {"representatives", epi_reps}};
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < kAleatoryCount; ++a) {
    for (std::size_t e = 0; e < kEpistemicCount; ++e) {
      const MomentPair m = representatives[a][e];
      if (m.mean == aleatory_representatives[a] && m.variance == epistemic_representatives[e]) continue;
      pairs.push_back({{"aleatory", kAleatoryNames[a]},
                       {"epistemic", kEpistemicNames[e]},
                       {"mean", m.mean},
                       {"variance", m.variance}});
    }
  }
  if (!pairs.empty()) doc["pairs"] = pairs;
  return doc.dump(2) + "\n";
}

FuzzyLabel LabelConfig::classify(MomentPair m) const {
  const double mean = std::clamp(m.mean, 0.0, 1.0);
  const double variance = std::clamp(m.variance, 0.0, kMaxVariance);
  return {static_cast<Aleatory>(bin_of(aleatory_edges, mean)),
          static_cast<Epistemic>(bin_of(epistemic_edges, variance))};
}

MomentPair LabelConfig::representative(FuzzyLabel f) const {
  return representatives[static_cast<std::size_t>(f.aleatory)][static_cast<std::size_t>(f.epistemic)];
}

FuzzyLabel to_fuzzy(const BetaLabel& b, const LabelConfig& config) { return config.classify(moments(b)); }

BetaLabel from_fuzzy(FuzzyLabel f, const LabelConfig& config) {
  return moment_match(config.representative(f));
}

}  // namespace pargue
