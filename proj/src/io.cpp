#include "pargue/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pargue/error.hpp"

namespace pargue {

namespace {

struct Fact {
  std::string predicate;
  std::vector<std::string> args;
  std::size_t line = 0;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits `pred(a, b, ...).` facts; any number per line.
std::vector<Fact> scan_facts(std::string_view text) {
  std::vector<Fact> facts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);

    std::size_t pos = 0;
    while (true) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      const std::size_t open = line.find('(', pos);
      const std::size_t close = open == std::string_view::npos ? open : line.find(')', open);
      if (close == std::string_view::npos) {
        throw ParseError(line_no, "malformed fact '" + std::string(trim(line.substr(pos))) + "'");
      }
      std::size_t dot = close + 1;
      while (dot < line.size() && (line[dot] == ' ' || line[dot] == '\t')) ++dot;
      if (dot >= line.size() || line[dot] != '.') {
        throw ParseError(line_no, "expected '.' after '" + std::string(line.substr(pos, close + 1 - pos)) + "'");
      }
      Fact f;
      f.line = line_no;
      f.predicate = std::string(trim(line.substr(pos, open - pos)));
      std::string_view inner = line.substr(open + 1, close - open - 1);
      std::size_t from = 0;
      while (true) {
        const std::size_t comma = inner.find(',', from);
        f.args.emplace_back(trim(inner.substr(from, comma == std::string_view::npos ? comma : comma - from)));
        if (comma == std::string_view::npos) break;
        from = comma + 1;
      }
      facts.push_back(std::move(f));
      pos = dot + 1;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return facts;
}

void expect_arity(const Fact& f, std::size_t n) {
  if (f.args.size() != n) {
    throw ParseError(f.line, f.predicate + "/" + std::to_string(n) + " expects " + std::to_string(n) +
                                 " argument(s), got " + std::to_string(f.args.size()));
  }
}

const std::string& expect_id(const Fact& f, std::size_t i) {
  if (!is_valid_id(f.args[i])) throw ParseError(f.line, "invalid argument id '" + f.args[i] + "'");
  return f.args[i];
}

double expect_number(const Fact& f, std::size_t i) {
  const std::string& s = f.args[i];
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(f.line, "expected a number, got '" + s + "'");
  }
  return value;
}

double round6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json json_number(double x) {
  if (std::isinf(x)) return "inf";
  return round6(x);
}

std::string fixed2(double x) {
  if (std::isinf(x)) return "+inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

Framework parse_af(std::string_view text) {
  std::vector<std::string> args;
  std::vector<Fact> attacks;
  for (Fact& f : scan_facts(text)) {
    if (f.predicate == "arg") {
      expect_arity(f, 1);
      args.push_back(expect_id(f, 0));
    } else if (f.predicate == "att") {
      expect_arity(f, 2);
      expect_id(f, 0);
      expect_id(f, 1);
      attacks.push_back(std::move(f));
    } else {
      throw ParseError(f.line, "unknown predicate '" + f.predicate + "'");
    }
  }
  const std::set<std::string> declared(args.begin(), args.end());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Fact& f : attacks) {
    for (const auto& id : f.args) {
      if (!declared.count(id)) throw ParseError(f.line, "attack references undeclared argument '" + id + "'");
    }
    pairs.emplace_back(f.args[0], f.args[1]);
  }
  return Framework(std::move(args), pairs);
}

std::string format_af(const Framework& af) {
  std::string out;
  for (const auto& id : af.arguments()) out += "arg(" + id + ").\n";
  for (auto [f, t] : af.attack_pairs()) out += "att(" + af.id(f) + "," + af.id(t) + ").\n";
  return out;
}

LabelMap parse_labels(std::string_view text, const Framework& af, const LabelConfig& config) {
  LabelMap labels;
  for (const Fact& f : scan_facts(text)) {
    if (f.args.empty()) throw ParseError(f.line, "label fact without argument");
    const std::string& id = expect_id(f, 0);
    if (!af.find(id)) throw ParseError(f.line, "label for unknown argument '" + id + "'");
    if (labels.count(id)) throw ParseError(f.line, "duplicate label for '" + id + "'");
    if (f.predicate == "prob") {
      expect_arity(f, 2);
      const double p = expect_number(f, 1);
      if (!(p >= 0.0 && p <= 1.0)) throw ParseError(f.line, "probability " + f.args[1] + " is outside [0, 1]");
      labels.emplace(id, p);
    } else if (f.predicate == "beta") {
      expect_arity(f, 3);
      const double a = expect_number(f, 1);
      const double b = expect_number(f, 2);
      if (!(a > 0.0 && b > 0.0)) throw ParseError(f.line, "beta parameters must be positive");
      labels.emplace(id, BetaLabel(a, b));
    } else if (f.predicate == "fuzzy") {
      expect_arity(f, 3);
      auto ale = parse_aleatory(f.args[1]);
      auto epi = parse_epistemic(f.args[2]);
      if (!ale) throw ParseError(f.line, "unknown aleatory label '" + f.args[1] + "'");
      if (!epi) throw ParseError(f.line, "unknown epistemic label '" + f.args[2] + "'");
      labels.emplace(id, from_fuzzy({*ale, *epi}, config));
    } else {
      throw ParseError(f.line, "unknown predicate '" + f.predicate + "'");
    }
  }
  return labels;
}

CovarianceSpec parse_covariance_csv(std::string_view text, const Framework& af,
                                    std::vector<std::string>& warnings) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.emplace_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
    line_of.push_back(n);
  }
  if (rows.empty()) return {};

  const std::vector<std::string> header(rows[0].begin() + 1, rows[0].end());
  for (const auto& id : header) {
    if (!af.find(id)) throw ParseError(line_of[0], "covariance names unknown argument '" + id + "'");
  }
  if (rows.size() != header.size() + 1) throw ParseError(line_of.back(), "covariance matrix must be square");

  std::vector<std::vector<double>> m(header.size(), std::vector<double>(header.size()));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size() + 1) throw ParseError(line_of[r], "row length does not match the header");
    if (row[0] != header[r - 1]) {
      throw ParseError(line_of[r], "row id '" + row[0] + "' does not match column '" + header[r - 1] + "'");
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
      Fact cell{"", {row[c + 1]}, line_of[r]};
      m[r - 1][c] = expect_number(cell, 0);
    }
  }

  CovarianceSpec spec;
  bool diagonal_given = false;
  for (std::size_t i = 0; i < header.size(); ++i) {
    diagonal_given = diagonal_given || m[i][i] != 0.0;
    for (std::size_t j = i + 1; j < header.size(); ++j) {
      const double scale = std::max({1.0, std::abs(m[i][j]), std::abs(m[j][i])});
      if (std::abs(m[i][j] - m[j][i]) > 1e-12 * scale) {
        throw InputError("covariance matrix is not symmetric at (" + header[i] + ", " + header[j] + ")");
      }
      if (m[i][j] != 0.0) spec.set(header[i], header[j], m[i][j]);
    }
  }
  if (diagonal_given) warnings.emplace_back("covariance diagonal ignored; variances come from the labels");
  return spec;
}

std::string format_extension(const Framework& af, ArgSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ',';
    out += af.id(i);
    first = false;
  }
  return out + "}";
}

std::string emit_json(const QueryResult& r) {
  nlohmann::ordered_json j;
  j["argument"] = r.argument;
  j["semantics"] = std::string(to_string(r.semantics));
  j["mode"] = std::string(to_string(r.mode));
  j["mean"] = round6(r.mean);
  j["variance"] = round6(r.variance);
  j["alpha"] = json_number(r.label.alpha());
  j["beta"] = json_number(r.label.beta());
  j["aleatory_label"] = std::string(to_string(r.fuzzy.aleatory));
  j["epistemic_label"] = std::string(to_string(r.fuzzy.epistemic));
  j["circuit_nodes"] = r.circuit_nodes;
  j["model_count"] = r.model_count;
  return j.dump();
}

std::string format_beta(const BetaLabel& b) { return "Beta(" + fixed2(b.alpha()) + ", " + fixed2(b.beta()) + ")"; }

std::string format_summary(const QueryResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " mean=%.6g variance=%.6g ", r.mean, r.variance);
  return r.argument + " " + std::string(to_string(r.semantics)) + " " + std::string(to_string(r.mode)) + buf +
         format_beta(r.label) + " " + std::string(to_string(r.fuzzy.aleatory)) + "/" +
         std::string(to_string(r.fuzzy.epistemic));
}

std::string format_pretty(const QueryResult& r) {
  char mean[32], variance[32];
  std::snprintf(mean, sizeof mean, "%.6g", r.mean);
  std::snprintf(variance, sizeof variance, "%.6g", r.variance);
  std::ostringstream out;
  out << "argument   " << r.argument << '\n'
      << "semantics  " << to_string(r.semantics) << '\n'
      << "mode       " << to_string(r.mode) << '\n'
      << "mean       " << mean << '\n'
      << "variance   " << variance << '\n'
      << "label      " << format_beta(r.label) << '\n'
      << "fuzzy      " << describe(r.fuzzy) << '\n'
      << "circuit    " << r.circuit_nodes << " nodes, " << r.model_count << " models\n";
  return out.str();
}

}  // namespace pargue
