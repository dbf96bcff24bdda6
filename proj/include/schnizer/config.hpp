#pragma once

// Run configuration for the command-line tool: JSON or a TOML subset
// (top-level key = value lines with integers, strings, booleans and arrays).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schnizer/serialize.hpp"

namespace schnizer {

enum class LambdaMode { Grid, All, Random, Explicit };

/// Grid: all of Z_l^n for n <= 2, otherwise kGridSample seeded draws.
inline constexpr std::size_t kGridSample = 20;

struct LambdaSelector {
  LambdaMode mode = LambdaMode::Grid;
  std::size_t count = 0;              // Random
  std::vector<WeightVector> weights;  // Explicit
};

struct RunConfig {
  int n = 2;
  int l = 3;
  LambdaSelector lambda;
  std::optional<std::vector<std::string>> module_a;  // per slot; nullopt = distinguished
  std::optional<std::vector<std::string>> module_b;
  std::vector<std::string> spectral{"1"};
  std::vector<std::string> a_plus;   // iso: empty = sweep eps^k
  std::vector<std::string> a_minus;  // iso: empty = {"1"}
  std::vector<Sign> signs{Sign::Plus, Sign::Minus};
  Backend backend = Backend::Exact;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // empty = all applicable
  std::vector<int> indices;         // drinfeld: empty = supp(lambda)
  std::vector<std::string> ops;     // dump: generator names
  bool corrupt = false;             // mutation self-test
  bool strict_gate = false;         // require gcd(l, n + 1) = 1 up front
  bool timing = false;
  std::string out;
  std::string format = "json";

  Json to_json() const;
};

/// Parses the TOML subset into JSON; ConfigError names the offending line.
Json parse_toml_subset(const std::string& text);

/// Overlays the fields present in j onto cfg; ConfigError names the field.
void apply_config_json(RunConfig& cfg, const Json& j);

/// Reads a .json or .toml file (by extension, JSON otherwise).
RunConfig load_config_file(const std::string& path);

/// "1,2,0" -> {1,2,0}; "grid"; "all"; "random:k".
LambdaSelector parse_lambda_selector(const std::string& text);

/// Checks the module preconditions before any computation.
void validate(const RunConfig& cfg, bool needs_affine);

/// The weights selected by cfg, deterministic for a given seed.
std::vector<WeightVector> select_weights(const RunConfig& cfg);

}  // namespace schnizer
