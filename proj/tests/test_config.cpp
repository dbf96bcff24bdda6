#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "schnizer/commands.hpp"

using namespace schnizer;

namespace {

std::string config_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/schnizer_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("toml subset: scalars, arrays, comments and multi-line values") {
  const auto j = parse_toml_subset(
      "# run\n"
      "n = 3\n"
      "l = 5  # odd\n"
      "lambda = [[1, 0, 2],\n"
      "          [0, 0, 1]]\n"
      "spectral = [\"1\", \"eps^2\"]\n"
      "strict_gate = true\n"
      "sign = \"#\"\n");
  CHECK(j["n"] == 3);
  CHECK(j["l"] == 5);
  CHECK(j["lambda"] == Json::array({Json::array({1, 0, 2}), Json::array({0, 0, 1})}));
  CHECK(j["spectral"] == Json::array({"1", "eps^2"}));
  CHECK(j["strict_gate"] == true);
  CHECK(j["sign"] == "#");
}

TEST_CASE("toml subset: errors name the line") {
  CHECK(config_error([] { parse_toml_subset("n = 2\n[table]\n"); }).find("line 2") == 0);
  CHECK(config_error([] { parse_toml_subset("n = 2\n\nn = 3\n"); }).find("line 3: duplicate") == 0);
  CHECK(config_error([] { parse_toml_subset("n 2\n"); }).find("line 1") == 0);
  CHECK(config_error([] { parse_toml_subset("x = \"open\n"); }).find("line 1") == 0);
}

TEST_CASE("json overlay: known fields, aliases and unknown-field errors") {
  RunConfig cfg;
  apply_config_json(cfg, Json::parse(R"({"n": 3, "l": 5, "a": ["eps"], "sign": "both", "backend": "float",
                                         "lambda": [1, 2, 0], "seed": 11, "format": "text"})"));
  CHECK(cfg.n == 3);
  CHECK(cfg.l == 5);
  CHECK(cfg.spectral == std::vector<std::string>{"eps"});
  CHECK(cfg.signs == std::vector<Sign>{Sign::Plus, Sign::Minus});
  CHECK(cfg.backend == Backend::Float);
  CHECK(cfg.lambda.mode == LambdaMode::Explicit);
  CHECK(cfg.lambda.weights == std::vector<WeightVector>{{1, 2, 0}});
  CHECK(cfg.seed == 11);
  CHECK(config_error([&] { apply_config_json(cfg, Json::parse(R"({"rank": 2})")); }).find("field 'rank'") == 0);
  CHECK(config_error([&] { apply_config_json(cfg, Json::parse(R"({"n": "two"})")); }).find("field 'n'") == 0);
  CHECK(config_error([&] { apply_config_json(cfg, Json::parse(R"({"backend": "gpu"})")); }).find("field 'backend'") == 0);
  CHECK(config_error([&] { apply_config_json(cfg, Json::parse(R"({"sign": "x"})")); }).find("field 'sign'") == 0);
}

TEST_CASE("config files load by extension") {
  const auto toml = temp_file("cfg.toml", "n = 1\nl = 7\nlambda = \"random:4\"\n");
  const auto cfg = load_config_file(toml);
  CHECK(cfg.n == 1);
  CHECK(cfg.l == 7);
  CHECK(cfg.lambda.mode == LambdaMode::Random);
  CHECK(cfg.lambda.count == 4);
  const auto json = temp_file("cfg.json", R"({"n": 2, "lambda": "all"})");
  CHECK(load_config_file(json).n == 2);
  const auto bad = temp_file("bad.json", "{\"n\": ");
  CHECK_THROWS_AS(load_config_file(bad), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/cfg.json"), ConfigError);
  std::remove(toml.c_str());
  std::remove(json.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("lambda selectors") {
  CHECK(parse_lambda_selector("all").mode == LambdaMode::All);
  CHECK(parse_lambda_selector("grid").mode == LambdaMode::Grid);
  CHECK(parse_lambda_selector("random:20").count == 20);
  CHECK(parse_lambda_selector("2, 0,1").weights == std::vector<WeightVector>{{2, 0, 1}});
  CHECK_THROWS_AS(parse_lambda_selector("random:0"), ConfigError);
  CHECK_THROWS_AS(parse_lambda_selector("1,x"), ConfigError);

  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 5;
  CHECK(select_weights(cfg).size() == 25);
  CHECK(select_weights(cfg).front() == WeightVector{0, 0});
  CHECK(select_weights(cfg).back() == WeightVector{4, 4});

  cfg.n = 3;
  cfg.l = 3;
  cfg.seed = 42;
  CHECK(select_weights(cfg).size() == kGridSample);
  cfg.lambda = parse_lambda_selector("all");
  CHECK(select_weights(cfg).size() == 27);
  cfg.lambda = parse_lambda_selector("random:20");
  const auto first = select_weights(cfg);
  CHECK(first.size() == 20);
  CHECK(select_weights(cfg) == first);
  for (const auto& w : first) {
    CHECK(w.size() == 3);
    for (long x : w) CHECK((x >= 0 && x < 3));
  }
  cfg.seed = 43;
  CHECK(select_weights(cfg) != first);
}

TEST_CASE("validation rejects bad modules before computing") {
  RunConfig cfg;
  cfg.l = 4;
  CHECK(config_error([&] { validate(cfg, false); }).find("field 'l'") == 0);
  cfg.l = 3;
  cfg.strict_gate = true;
  CHECK(config_error([&] { validate(cfg, false); }).find("strict gate") != std::string::npos);
  cfg.l = 5;
  CHECK_NOTHROW(validate(cfg, true));
  cfg.n = 1;
  CHECK(config_error([&] { validate(cfg, true); }).find("RankTooSmall") != std::string::npos);
  CHECK_NOTHROW(validate(cfg, false));
  cfg.lambda = parse_lambda_selector("5");
  CHECK(config_error([&] { validate(cfg, false); }).find("field 'lambda'") == 0);
  cfg.lambda = parse_lambda_selector("1,1");
  CHECK(config_error([&] { validate(cfg, false); }).find("field 'lambda'") == 0);
  cfg.lambda = parse_lambda_selector("1");
  cfg.module_a = std::vector<std::string>{"1", "2"};
  CHECK(config_error([&] { validate(cfg, false); }).find("field 'module_a'") == 0);
  cfg.module_a = std::vector<std::string>{"eps^"};
  CHECK(config_error([&] { validate(cfg, false); }).find("field 'module_a'") == 0);
}

TEST_CASE("scalar text parsing") {
  const auto& f = CyclotomicField::get(5);
  CHECK(parse_scalar(f, "2/3") == f.from_rational(Rational(2, 3)));
  CHECK(parse_scalar(f, "eps^2") == f.eps(f.exponent(2L)));
  CHECK(parse_scalar(f, "-eps^-1") == f.zero() - f.eps(f.exponent(-1L)));
  CHECK(parse_scalar(f, "1 + 3*eps") == f.one() + f.from_rational(Rational(3)) * f.eps(f.exponent(1L)));
  CHECK(parse_scalar(f, "0.75") == f.from_rational(Rational(3, 4)));
  CHECK_THROWS_AS(parse_scalar(f, "0.7+0.2i"), ParseError);
  CHECK_THROWS_AS(parse_scalar(f, "eps^1/2"), ParseError);
  CHECK_THROWS_AS(parse_scalar(f, ""), ParseError);
  CHECK_THROWS_AS(parse_scalar(f, "2eps"), ParseError);

  const auto& c = ComplexField::get(5);
  const auto z = parse_scalar(c, "0.7+0.2i");
  CHECK(z.real() == doctest::Approx(0.7));
  CHECK(z.imag() == doctest::Approx(0.2));
  CHECK(std::abs(parse_scalar(c, "eps") - std::polar(1.0, 2 * M_PI / 5)) < 1e-12);
}

TEST_CASE("exact scalars round-trip through json") {
  const auto& f = CyclotomicField::get(7);
  for (const auto& text : {"0", "1", "-2/3*eps^3 + eps", "5*eps^6 - 1/2"}) {
    const auto x = parse_scalar(f, text);
    CHECK(cyc_scalar_from_json(scalar_json(x)) == x);
  }
  CHECK_THROWS_AS(cyc_scalar_from_json(Json::parse(R"({"l": 7})")), ParseError);
}

TEST_CASE("commands: verify passes on a small grid and reports are deterministic") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 3;
  const auto rep = cmd_verify(cfg);
  CHECK(rep.pass);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.body["cases"].size() == 9);
  CHECK(rep.body["tool"]["name"] == kToolName);
  CHECK(rep.body["conventions"]["f0_bracket_subscript"] == to_string(F0Subscript::Shifted));
  CHECK(rep.render("json") == cmd_verify(cfg).render("json"));
  CHECK_FALSE(rep.body.contains("timing_ms"));
  cfg.timing = true;
  cfg.lambda = parse_lambda_selector("1,1");
  CHECK(cmd_verify(cfg).body.contains("timing_ms"));
}

TEST_CASE("commands: corruption is detected with a witness") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 5;
  cfg.lambda = parse_lambda_selector("2,1");
  cfg.corrupt = true;
  cfg.suites = {"finite", "affine"};
  const auto rep = cmd_verify(cfg);
  CHECK_FALSE(rep.pass);
  CHECK(rep.exit_code() == 1);
  const auto& finite = rep.body["cases"][0]["finite"];
  CHECK(finite["all_pass"] == false);
  bool has_witness = false;
  for (const auto& r : finite["relations"]) has_witness = has_witness || r.contains("witness");
  CHECK(has_witness);
}

TEST_CASE("commands: drinfeld, iso and dump") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 3;
  cfg.lambda = parse_lambda_selector("1,1");
  const auto d = cmd_drinfeld(cfg);
  CHECK(d.pass);
  CHECK(d.body["cases"].size() == 2);

  const auto iso = cmd_iso(cfg);
  CHECK(iso.pass);
  CHECK(iso.body["agreement"] == true);
  CHECK(iso.body["cases"].size() == 3);
  CHECK(iso.body["cases"][0]["iso"][0]["verdict"] == true);
  CHECK(iso.body["coincidences"].size() == 1);

  cfg.ops = {"E0", "K1^-1"};
  const auto dump = cmd_dump(cfg);
  CHECK(dump.body["operators"].size() == 2);
  CHECK(dump.body["operators"][1]["entries"].size() == 27);
  cfg.ops = {"X1"};
  CHECK_THROWS_AS(cmd_dump(cfg), ConfigError);
  CHECK_THROWS_AS(run_command("plot", cfg), ConfigError);

  cfg.n = 1;
  cfg.lambda = parse_lambda_selector("1");
  CHECK_THROWS_AS(cmd_drinfeld(cfg), ConfigError);
  CHECK_THROWS_AS(cmd_iso(cfg), ConfigError);
}

TEST_CASE("commands: the float backend agrees with the exact one") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.l = 5;
  cfg.lambda = parse_lambda_selector("2,1");
  cfg.spectral = {"0.7+0.2i"};
  cfg.backend = Backend::Float;
  CHECK(cmd_drinfeld(cfg).pass);
  cfg.backend = Backend::Exact;
  CHECK_THROWS_AS(cmd_drinfeld(cfg), ParseError);
}
