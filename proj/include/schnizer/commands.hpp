#pragma once

// The verify / drinfeld / iso / dump commands behind the command-line tool.

#include <string>
#include <vector>

#include "schnizer/config.hpp"

namespace schnizer {

inline constexpr const char* kToolName = "schnizer";
inline constexpr const char* kToolVersion = "1.0.0";

struct RunReport {
  Json body;
  bool pass = true;
  std::vector<std::string> lines;  // text rendering

  std::string render(const std::string& format) const;
  int exit_code() const { return pass ? 0 : 1; }
};

/// Resolved readings of the closed formulas and the isomorphism criterion.
Json conventions_json();

RunReport cmd_verify(const RunConfig& cfg);
RunReport cmd_drinfeld(const RunConfig& cfg);
RunReport cmd_iso(const RunConfig& cfg);
RunReport cmd_dump(const RunConfig& cfg);

/// Dispatch by name; ConfigError for an unknown command.
RunReport run_command(const std::string& name, const RunConfig& cfg);

}  // namespace schnizer
