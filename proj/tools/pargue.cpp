// Command-line front end: extensions, query, compile, oracle, check.
//
// Exit codes: 0 success, 1 input error, 2 capacity error, 3 failed self-check.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pargue/compile.hpp"
#include "pargue/encode.hpp"
#include "pargue/error.hpp"
#include "pargue/io.hpp"
#include "pargue/query.hpp"

namespace {

using namespace pargue;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabelConfig load_label_config() {
  const char* path = std::getenv("PARGUE_LABEL_CONFIG");
  if (path == nullptr || *path == '\0') return LabelConfig::defaults();
  return LabelConfig::from_json(read_file(path));
}

Semantics semantics_arg(const std::string& text) {
  if (auto s = parse_semantics(text)) return *s;
  throw InputError("unknown semantics '" + text + "' (expected CF, AD, CO, GR, ST or PR)");
}

QueryMode mode_arg(const std::string& text) {
  if (auto m = parse_query_mode(text)) return *m;
  throw InputError("unknown mode '" + text + "' (expected prob or prob-c)");
}

struct Options {
  std::string af_path, labels_path, semantics, mode = "prob", argument, cov_path, out_path;
  std::size_t samples = 200000;
  std::uint64_t seed = 1;
  bool json = false;
  bool pretty = false;
};

int run_extensions(const Options& o) {
  const Framework af = parse_af(read_file(o.af_path));
  for (Extension e : extensions(af, semantics_arg(o.semantics))) {
    std::cout << format_extension(af, e) << '\n';
  }
  return 0;
}

ProbabilisticGraph load_graph(const Options& o, const LabelConfig& config) {
  Framework af = parse_af(read_file(o.af_path));
  LabelMap labels = parse_labels(read_file(o.labels_path), af, config);
  return ProbabilisticGraph(std::move(af), labels);
}

int run_query(const Options& o) {
  const LabelConfig config = load_label_config();
  const ProbabilisticGraph g = load_graph(o, config);
  std::optional<CovarianceSpec> cov;
  std::vector<std::string> warnings;
  if (!o.cov_path.empty()) cov = parse_covariance_csv(read_file(o.cov_path), g.framework(), warnings);
  QueryOptions opts{cov ? &*cov : nullptr, &config};
  const QueryResult r = query(g, semantics_arg(o.semantics), o.argument, mode_arg(o.mode), opts);
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (o.json) {
    std::cout << emit_json(r) << '\n';
  } else if (o.pretty) {
    std::cout << format_pretty(r);
  } else {
    std::cout << format_summary(r) << '\n';
  }
  return 0;
}

int run_compile(const Options& o) {
  const Framework af = parse_af(read_file(o.af_path));
  const Semantics sigma = semantics_arg(o.semantics);
  const Circuit c = compile(theory_for(af, sigma));
  std::ofstream out(o.out_path);
  if (!out) throw InputError("cannot write '" + o.out_path + "'");
  write_nnf(c, out);
  std::cout << o.out_path << ": " << c.size() << " nodes, " << c.edge_count() << " edges, "
            << c.variable_count() << " variables, " << count_models_unchecked(c) << " models\n";
  return 0;
}

int run_oracle(const Options& o) {
  const LabelConfig config = load_label_config();
  const ProbabilisticGraph g = load_graph(o, config);
  const Semantics sigma = semantics_arg(o.semantics);
  const QueryMode mode = mode_arg(o.mode);
  g.framework().index_of(o.argument);
  const MomentPair m = mc_oracle(g, sigma, o.argument, mode, o.samples, o.seed);
  if (o.json) {
    nlohmann::ordered_json j;
    j["argument"] = o.argument;
    j["semantics"] = std::string(to_string(sigma));
    j["mode"] = std::string(to_string(mode));
    j["samples"] = o.samples;
    j["seed"] = o.seed;
    j["mean"] = m.mean;
    j["variance"] = m.variance;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << o.argument << ' ' << to_string(sigma) << ' ' << to_string(mode) << " samples=" << o.samples
              << " seed=" << o.seed << " mean=" << m.mean << " variance=" << m.variance << '\n';
  }
  return 0;
}

int run_check(const Options& o) {
  const Framework af = parse_af(read_file(o.af_path));
  const Semantics sigma = semantics_arg(o.semantics);
  const Theory theory = theory_for(af, sigma);
  const Circuit c = compile(theory);
  const ValidationReport report = validate(c);
  bool ok = report.valid();
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "nodes          " << c.size() << '\n'
            << "decomposable   " << yes(report.decomposable) << '\n'
            << "deterministic  " << yes(report.deterministic) << '\n'
            << "smooth         " << yes(report.smooth) << '\n';

  const std::vector<Extension> exts = extensions(af, sigma);
  const std::uint64_t models = count_models_unchecked(c);
  std::cout << "models         " << models << " (extensions " << exts.size() << ")\n";
  ok = ok && models == exts.size();

  if (af.size() > kMaxOracleArguments) {
    std::cout << "oracle         skipped (more than " << kMaxOracleArguments << " arguments)\n";
    return ok ? 0 : 3;
  }
  // The model set must be exactly the extension set.
  bool same_models = true;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << af.size()); ++bits) {
    const bool is_ext = std::binary_search(exts.begin(), exts.end(), ArgSet(bits), set_order);
    same_models = same_models && theory.formula.evaluate(ArgSet(bits)) == is_ext;
  }
  std::cout << "model set      " << (same_models ? "matches extensions" : "DIFFERS from extensions") << '\n';
  ok = ok && same_models;

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  LabelMap labels;
  for (const auto& id : af.arguments()) labels.emplace(id, unit(rng));
  const ProbabilisticGraph g(af, labels);
  for (QueryMode mode : {QueryMode::prob, QueryMode::prob_c}) {
    double worst = 0.0;
    for (const auto& id : af.arguments()) {
      const double compiled = query(g, sigma, id, mode).mean;
      const double exact = mode == QueryMode::prob ? brute_force_prob(g, sigma, id).mean
                                                   : brute_force_prob_c(g, sigma, id).mean;
      worst = std::max(worst, std::abs(compiled - exact));
    }
    const bool agree = worst <= 1e-9;
    std::cout << "oracle " << (mode == QueryMode::prob ? "prob   " : "prob_c ") << (agree ? "ok" : "MISMATCH")
              << " (max abs error " << worst << ")\n";
    ok = ok && agree;
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic queries over abstract argumentation frameworks"};
  app.require_subcommand(1);
  Options o;

  auto* ext = app.add_subcommand("extensions", "List the extensions of a framework, one per line");
  ext->add_option("-f,--file", o.af_path, "Framework file (arg/att facts)")->required();
  ext->add_option("-s,--semantics", o.semantics, "CF, AD, CO, GR, ST or PR")->required();

  auto* qry = app.add_subcommand("query", "Answer a PROB or PROB-C query");
  qry->add_option("-f,--file", o.af_path, "Framework file")->required();
  qry->add_option("-l,--labels", o.labels_path, "Label file (prob/beta/fuzzy facts)")->required();
  qry->add_option("-s,--semantics", o.semantics, "CF, AD, CO, GR, ST or PR")->required();
  qry->add_option("--mode", o.mode, "prob or prob-c");
  qry->add_option("-a,--argument", o.argument, "Queried argument")->required();
  qry->add_option("--cov", o.cov_path, "Covariance CSV");
  qry->add_flag("--json", o.json, "Machine-readable output");
  qry->add_flag("--pretty", o.pretty, "Human-readable table");

  auto* cmp = app.add_subcommand("compile", "Write the compiled theory as an NNF file");
  cmp->add_option("-f,--file", o.af_path, "Framework file")->required();
  cmp->add_option("-s,--semantics", o.semantics, "CF, AD, CO, GR, ST or PR")->required();
  cmp->add_option("-o,--output", o.out_path, "Output .nnf path")->required();

  auto* orc = app.add_subcommand("oracle", "Monte-Carlo estimate of a query under beta labels");
  orc->add_option("-f,--file", o.af_path, "Framework file")->required();
  orc->add_option("-l,--labels", o.labels_path, "Label file")->required();
  orc->add_option("-s,--semantics", o.semantics, "CF, AD, CO, GR, ST or PR")->required();
  orc->add_option("--mode", o.mode, "prob or prob-c");
  orc->add_option("-a,--argument", o.argument, "Queried argument")->required();
  orc->add_option("--samples", o.samples, "Number of draws")->check(CLI::PositiveNumber);
  orc->add_option("--seed", o.seed, "Generator seed");
  orc->add_flag("--json", o.json, "Machine-readable output");

  auto* chk = app.add_subcommand("check", "Validate the compiled circuit and compare against the oracles");
  chk->add_option("-f,--file", o.af_path, "Framework file")->required();
  chk->add_option("-s,--semantics", o.semantics, "CF, AD, CO, GR, ST or PR")->required();
  chk->add_option("--seed", o.seed, "Seed for the self-test labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*ext) return run_extensions(o);
    if (*qry) return run_query(o);
    if (*cmp) return run_compile(o);
    if (*orc) return run_oracle(o);
    if (*chk) return run_check(o);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
