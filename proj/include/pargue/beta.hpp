#pragma once

// Beta-distributed uncertain probabilities and their qualitative rendering.
//
// A label Beta(alpha, beta) treats its parameters as pseudocounts of positive
// and negative evidence. The mean carries the aleatory component and the
// variance the epistemic one. A zero-variance (degenerate) label is a point
// mass, rendered with infinite strength.

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pargue {

struct MomentPair {
  double mean = 0.0;
  double variance = 0.0;
};

class BetaLabel {
 public:
  /// Throws InputError unless both parameters are finite and positive.
  BetaLabel(double alpha, double beta);

  /// Point mass at `mean` (zero variance).
  static BetaLabel point(double mean);

  bool degenerate() const { return degenerate_; }

  /// Rendered parameters. Degenerate labels report infinity for the side
  /// that carries the mass and 1 for the other (both infinite when the mean
  /// is interior), e.g. a point mass at 0 is Beta(1, +inf).
  double alpha() const;
  double beta() const;
  double strength() const;
  double mean() const;
  double variance() const;
  /// E[pi^2].
  double second_moment() const;

  bool operator==(const BetaLabel&) const = default;

 private:
  BetaLabel() = default;
  double alpha_ = 1.0;
  double beta_ = 1.0;
  bool degenerate_ = false;
  double point_ = 0.0;
};

/// Conjugate update with `positive` and `negative` observations.
BetaLabel posterior(const BetaLabel& prior, double positive, double negative);
MomentPair moments(const BetaLabel& b);
/// Distribution of 1 - pi.
BetaLabel complement(const BetaLabel& b);

/// Strength floor applied by moment_match.
inline constexpr double kMinStrength = 0.02;
/// Variance is clamped to this fraction of mean * (1 - mean).
inline constexpr double kVarianceCeiling = 0.999;

/// Beta label with the given mean and variance. Zero variance or a mean of
/// exactly 0 or 1 yields a point mass. Throws InputError for a mean outside
/// [0, 1] or a negative variance.
BetaLabel moment_match(MomentPair m);

enum class Aleatory {
  absolutely_not_likely,
  very_unlikely,
  unlikely,
  somewhat_unlikely,
  chances_about_even,
  somewhat_likely,
  likely,
  very_likely,
  absolutely_likely,
};

enum class Epistemic {
  total_confidence,
  high_confidence,
  some_confidence,
  low_confidence,
  no_confidence,
};

inline constexpr std::size_t kAleatoryCount = 9;
inline constexpr std::size_t kEpistemicCount = 5;

struct FuzzyLabel {
  Aleatory aleatory = Aleatory::chances_about_even;
  Epistemic epistemic = Epistemic::no_confidence;
  bool operator==(const FuzzyLabel&) const = default;
};

std::string_view to_string(Aleatory a);
std::string_view to_string(Epistemic e);
std::optional<Aleatory> parse_aleatory(std::string_view token);
std::optional<Epistemic> parse_epistemic(std::string_view token);
/// "Somewhat likely with some confidence".
std::string describe(const FuzzyLabel& f);

/// Bin edges and representatives of the fuzzy vocabulary.
///
/// Aleatory bins partition the mean range [0, 1] and epistemic bins the
/// variance range [0, 0.25]; each bin is half-open except the last, which is
/// closed. A vocabulary pair is turned back into a distribution through its
/// representative (mean, variance).
struct LabelConfig {
  std::array<double, kAleatoryCount + 1> aleatory_edges{};
  std::array<double, kEpistemicCount + 1> epistemic_edges{};
  std::array<double, kAleatoryCount> aleatory_representatives{};
  std::array<double, kEpistemicCount> epistemic_representatives{};
  /// Row-major [aleatory][epistemic] representatives.
  std::array<std::array<MomentPair, kEpistemicCount>, kAleatoryCount> representatives{};

  static const LabelConfig& defaults();

  /// Parses and validates the JSON configuration format. Throws InputError.
  static LabelConfig from_json(std::string_view text);
  std::string to_json() const;

  /// Throws InputError unless edges are strictly increasing, cover their
  /// ranges and every representative is a valid (mean, variance) pair.
  void validate() const;

  FuzzyLabel classify(MomentPair m) const;
  MomentPair representative(FuzzyLabel f) const;
};

FuzzyLabel to_fuzzy(const BetaLabel& b, const LabelConfig& config = LabelConfig::defaults());
BetaLabel from_fuzzy(FuzzyLabel f, const LabelConfig& config = LabelConfig::defaults());

}  // namespace pargue
