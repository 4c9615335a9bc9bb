#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "gomega/limits.hpp"

namespace gomega {

/// Environment variables overriding the default caps.
inline constexpr const char* kEnvMaxVertices = "GOMEGA_MAX_VERTICES";
inline constexpr const char* kEnvMaxDepth = "GOMEGA_MAX_DEPTH";

struct RunConfig {
  Limits limits;
  double membership_tol = 1e-8;
  double eigen_tol = 1e-10;
  /// Pins every kernel to its serial implementation.
  bool reproducible = false;
  std::string output;  // artifact path; empty means standard output
  std::string csv;     // CSV path for reports that have one

  /// Throws InvalidArgument unless caps are positive and tolerances in (0, 1).
  void validate() const;
  /// Applies GOMEGA_MAX_VERTICES / GOMEGA_MAX_DEPTH when set; throws
  /// InvalidArgument on malformed values.
  void apply_environment();
  nlohmann::json to_json() const;
};

/// Exit status contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. Artifacts go to `out` (or the configured output
/// file), diagnostics and the resolved configuration to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gomega
