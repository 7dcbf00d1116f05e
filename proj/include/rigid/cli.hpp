#pragma once

#include "rigid/families.hpp"
#include "rigid/gac.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rigid::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInvalidInput = 2,
  kPreconditionFailure = 3,
};

enum class OutputFormat { json, csv };

struct AnalysisRequest {
  std::optional<FamilySpec> family;
  std::optional<std::filesystem::path> graph_path;
  std::optional<int> d;
  OptimizerConfig optimizer;
  OutputFormat format = OutputFormat::json;
  std::optional<std::filesystem::path> out;

  /// Exactly one input source and d >= 1 when given; throws InvalidInput.
  void validate() const;
};

/// Report for `analyze`. Throws InvalidInput / PreconditionFailure.
nlohmann::json analyze(const AnalysisRequest& request);

/// Inclusive integer range "a..b" or "a..b:step".
struct IntRange {
  int first = 0;
  int last = 0;
  int step = 1;

  static IntRange parse(const std::string& text);
  std::vector<int> values() const;
};

struct SweepRequest {
  std::string kind;  // asymptotic-ratio | ratio | path-cycle | path-diameter
  std::optional<FamilyKind> family;
  int d = 2;
  IntRange n;
  OptimizerConfig optimizer;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// One row per n in request order. Throws InvalidInput on an empty range or
/// an unknown kind.
Table sweep(const SweepRequest& request);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs a named verification suite: spectra, bounds, rigidity or all.
std::vector<CheckResult> verify(const std::string& suite,
                                const OptimizerConfig& optimizer = {});

/// Checks specific to one input graph (bounds and witness chain).
std::vector<CheckResult> verify_graph(const Graph& g, const OptimizerConfig& optimizer = {});

/// Entry point used by tools/rigidity. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigid::cli
