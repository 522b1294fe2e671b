#pragma once

// Text formats: ASPARTIX-style framework and label files, covariance CSV and
// the JSON query report.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pargue/beta.hpp"
#include "pargue/beta_prop.hpp"
#include "pargue/framework.hpp"
#include "pargue/query.hpp"

namespace pargue {

/// Parses `arg(x).` and `att(x,y).` facts. Several facts may share a line;
/// `%` starts a comment. Throws ParseError.
Framework parse_af(std::string_view text);
std::string format_af(const Framework& af);

using LabelMap = std::map<std::string, ArgumentLabel, std::less<>>;

/// Parses `prob(a,0.5).`, `beta(a,17,2).` and `fuzzy(a,likely,some_confidence).`
/// facts for arguments of `af`. Fuzzy labels are resolved through `config`.
LabelMap parse_labels(std::string_view text, const Framework& af,
                      const LabelConfig& config = LabelConfig::defaults());

/// Header row and first column hold argument ids; the body must be
/// symmetric. Diagonal entries are ignored with a warning.
CovarianceSpec parse_covariance_csv(std::string_view text, const Framework& af,
                                    std::vector<std::string>& warnings);

/// `{a,b,d}`
std::string format_extension(const Framework& af, ArgSet s);

/// One-line JSON object with a fixed key order and 6 significant digits.
std::string emit_json(const QueryResult& r);

/// Human-readable rendering, e.g. `Beta(7.05, 5.21)`.
std::string format_beta(const BetaLabel& b);
std::string format_pretty(const QueryResult& r);
std::string format_summary(const QueryResult& r);

}  // namespace pargue
