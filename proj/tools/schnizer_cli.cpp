// Command-line front end: verify, drinfeld, iso and dump.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad configuration or input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schnizer/commands.hpp"

namespace {

struct Flags {
  std::string config;
  std::optional<int> n, l;
  std::optional<long> seed;
  std::optional<std::string> lambda, backend, out, format, sign;
  std::vector<std::string> spectral, a_plus, a_minus, module_a, module_b, suites, ops;
  std::vector<int> indices;
  bool corrupt = false, strict_gate = false, timing = false;
};

void add_flags(CLI::App& app, Flags& f) {
  app.add_option("--config", f.config, "JSON or TOML configuration file");
  app.add_option("--n", f.n, "rank n of sl_{n+1}");
  app.add_option("--l", f.l, "odd root-of-unity order l >= 3");
  app.add_option("--lambda", f.lambda, "weight '1,2', 'all' or 'random:k'");
  app.add_option("--a", f.spectral, "spectral parameter(s), e.g. 1 or eps^2");
  app.add_option("--a-plus", f.a_plus, "iso: spectral parameter(s) of the + module");
  app.add_option("--a-minus", f.a_minus, "iso: spectral parameter(s) of the - module");
  app.add_option("--module-a", f.module_a, "per-slot module parameters a (default distinguished)");
  app.add_option("--module-b", f.module_b, "per-slot module parameters b (default distinguished)");
  app.add_option("--sign", f.sign, "+, - or both")->check(CLI::IsMember({"+", "-", "both"}));
  app.add_option("--backend", f.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--seed", f.seed, "seed for random weight sampling");
  app.add_option("--suite", f.suites, "verify: finite, nilpotent, kernels, closure, affine");
  app.add_option("--index", f.indices, "drinfeld: polynomial indices");
  app.add_option("--op", f.ops, "dump: operator names such as E0, F2, K1, K1^-1, KL1");
  app.add_option("--out", f.out, "write the report to this file");
  app.add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--self-test-corrupt", f.corrupt, "corrupt one operator column to exercise the failure path");
  app.add_flag("--strict-gate", f.strict_gate, "reject gcd(l, n+1) != 1 before computing");
  app.add_flag("--timing", f.timing, "record wall time in the report");
}

schnizer::Json overlay(const Flags& f) {
  schnizer::Json j = schnizer::Json::object();
  if (f.n) j["n"] = *f.n;
  if (f.l) j["l"] = *f.l;
  if (f.lambda) j["lambda"] = *f.lambda;
  if (f.seed) j["seed"] = *f.seed;
  if (f.backend) j["backend"] = *f.backend;
  if (f.sign) j["sign"] = *f.sign;
  if (f.out) j["out"] = *f.out;
  if (f.format) j["format"] = *f.format;
  if (!f.spectral.empty()) j["spectral"] = f.spectral;
  if (!f.a_plus.empty()) j["a_plus"] = f.a_plus;
  if (!f.a_minus.empty()) j["a_minus"] = f.a_minus;
  if (!f.module_a.empty()) j["module_a"] = f.module_a;
  if (!f.module_b.empty()) j["module_b"] = f.module_b;
  if (!f.suites.empty()) j["suites"] = f.suites;
  if (!f.indices.empty()) j["indices"] = f.indices;
  if (!f.ops.empty()) j["ops"] = f.ops;
  if (f.corrupt) j["corrupt"] = true;
  if (f.strict_gate) j["strict_gate"] = true;
  if (f.timing) j["timing"] = true;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schnizer modules of U_eps(sl_{n+1}) at odd roots of unity"};
  app.set_version_flag("--version", std::string(schnizer::kToolName) + " " + schnizer::kToolVersion);
  app.require_subcommand(1, 1);
  Flags flags;
  std::string command;
  for (const auto* name : {"verify", "drinfeld", "iso", "dump"}) {
    static const std::map<std::string, std::string> help{
        {"verify", "check the defining relations, nilpotency, kernels and closures"},
        {"drinfeld", "Drinfeld polynomials from the closed form and from the module"},
        {"iso", "isomorphism criterion: direct, explicit and operator witness"},
        {"dump", "operator matrices as sparse triplets"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    add_flags(*sub, flags);
    sub->callback([&command, name] { command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    schnizer::RunConfig cfg;
    if (!flags.config.empty()) cfg = schnizer::load_config_file(flags.config);
    schnizer::apply_config_json(cfg, overlay(flags));
    const auto report = schnizer::run_command(command, cfg);
    const std::string text = report.render(cfg.format);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw schnizer::ConfigError("cannot write '" + cfg.out + "'");
      out << text;
      std::cout << schnizer::kToolName << " " << command << ": " << (report.pass ? "PASS" : "FAIL") << " -> "
                << cfg.out << "\n";
    }
    return report.exit_code();
  } catch (const schnizer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
