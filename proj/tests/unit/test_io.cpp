#include "doctest.h"
#include "json.hpp"
#include "pargue/error.hpp"
#include "pargue/io.hpp"
#include "support.hpp"

using namespace pargue;

TEST_CASE("framework parsing") {
  const Framework g = parse_af("arg(a). arg(b). arg(c). arg(d). att(a,c). att(b,c). att(c,d).");
  CHECK(g == testing::gamma_e());
  CHECK(parse_af("").size() == 0);
  CHECK(parse_af("% only a comment\n\n").size() == 0);
  CHECK(parse_af("arg(a).\narg(a).  % again\natt(a,a).\natt(a,a).\n") == Framework({"a"}, {{"a", "a"}}));
}

TEST_CASE("framework parse errors carry line numbers") {
  try {
    parse_af("arg(y).\natt(x,y).");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_af("att(x,y)."), ParseError);
  CHECK_THROWS_AS(parse_af("arg(a)"), ParseError);
  CHECK_THROWS_AS(parse_af("arg(a,b)."), ParseError);
  CHECK_THROWS_AS(parse_af("node(a)."), ParseError);
  CHECK_THROWS_AS(parse_af("arg(a-b)."), ParseError);
}

TEST_CASE("framework roundtrip") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 50; ++round) {
    const Framework af = testing::random_framework(rng, round % 9, 0.3);
    CHECK(parse_af(format_af(af)) == af);
  }
}

TEST_CASE("label parsing") {
  const Framework g = testing::gamma_e();
  const LabelMap m = parse_labels("beta(a,1,1). beta(b,17,2). beta(c,4,15). beta(d,5,1.5).", g);
  CHECK(std::get<BetaLabel>(m.at("b")) == BetaLabel(17, 2));
  CHECK(std::get<BetaLabel>(m.at("d")) == BetaLabel(5, 1.5));

  const LabelMap f = parse_labels("fuzzy(d,likely,some_confidence).", g);
  const BetaLabel d = std::get<BetaLabel>(f.at("d"));
  CHECK(std::abs(d.alpha() - 5.0) <= 0.01);
  CHECK(std::abs(d.beta() - 1.5) <= 0.01);

  const LabelMap p = parse_labels("prob(a,0.25).", g);
  CHECK(std::get<double>(p.at("a")) == 0.25);

  CHECK_THROWS_AS(parse_labels("prob(a,1.3).", g), InputError);
  CHECK_THROWS_AS(parse_labels("beta(a,0,1).", g), InputError);
  CHECK_THROWS_AS(parse_labels("fuzzy(a,probable,some_confidence).", g), InputError);
  CHECK_THROWS_AS(parse_labels("prob(a,0.1). prob(a,0.2).", g), InputError);
  CHECK_THROWS_AS(parse_labels("prob(zz,0.1).", g), InputError);
  CHECK_THROWS_AS(ProbabilisticGraph(g, parse_labels("prob(a,0.1).", g)), InputError);
}

TEST_CASE("covariance csv") {
  const Framework g = testing::gamma_e();
  std::vector<std::string> warnings;
  const CovarianceSpec c = parse_covariance_csv(",a,c\na,0,0.01\nc,0.01,0\n", g, warnings);
  CHECK(c.get("a", "c") == 0.01);
  CHECK(warnings.empty());
  parse_covariance_csv(",a,c\na,0.5,0.01\nc,0.01,0\n", g, warnings);
  CHECK(warnings.size() == 1);
  CHECK_THROWS_AS(parse_covariance_csv(",a,c\na,0,0.01\nc,0.02,0\n", g, warnings), InputError);
  CHECK_THROWS_AS(parse_covariance_csv(",a,zz\na,0,0\nzz,0,0\n", g, warnings), InputError);
  CHECK_THROWS_AS(parse_covariance_csv(",a,c\na,0,0.01\n", g, warnings), InputError);
  CHECK_THROWS_AS(parse_covariance_csv(",a,c\na,0,x\nc,x,0\n", g, warnings), InputError);
}

TEST_CASE("json report") {
  const Framework g = testing::gamma_e();
  const ProbabilisticGraph pg(g, parse_labels("beta(a,1,1). beta(b,17,2). beta(c,4,15). beta(d,5,1.5).", g));
  const std::string c = emit_json(prob(pg, Semantics::AD, "c"));
  CHECK(c ==
        R"({"argument":"c","semantics":"AD","mode":"prob","mean":0.0,"variance":0.0,"alpha":1.0,"beta":"inf",)"
        R"("aleatory_label":"absolutely_not_likely","epistemic_label":"total_confidence","circuit_nodes":1,"model_count":0})");
  const std::string d = emit_json(prob(pg, Semantics::AD, "d"));
  CHECK(d == emit_json(prob(pg, Semantics::AD, "d")));
  const auto j = nlohmann::ordered_json::parse(d);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"argument", "semantics", "mode", "mean", "variance", "alpha", "beta",
                                         "aleatory_label", "epistemic_label", "circuit_nodes", "model_count"});
  CHECK(j["mean"].get<double>() == 0.575325);
  CHECK(j["aleatory_label"] == "somewhat_likely");

  const ProbabilisticGraph points(g, parse_labels("prob(a,0.5). prob(b,0.5). prob(c,0.5). prob(d,0.5).", g));
  const auto p = nlohmann::json::parse(emit_json(prob(points, Semantics::AD, "d")));
  CHECK(p["variance"].get<double>() == 0.0);
  CHECK(p["epistemic_label"] == "total_confidence");
}

TEST_CASE("text rendering") {
  CHECK(format_beta(BetaLabel(7.0526, 5.2058)) == "Beta(7.05, 5.21)");
  CHECK(format_beta(BetaLabel::point(0)) == "Beta(1.00, +inf)");
  const Framework g = testing::gamma_e();
  CHECK(format_extension(g, g.set_of({"a", "b", "d"})) == "{a,b,d}");
  CHECK(format_extension(g, ArgSet()) == "{}");
}
