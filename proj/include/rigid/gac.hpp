#pragma once

#include "rigid/exec.hpp"
#include "rigid/families.hpp"
#include "rigid/graph.hpp"
#include "rigid/rigidity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rigid {

/// Settings for the multi-start hill climber behind estimate_gac.
struct OptimizerConfig {
  int restarts = 16;
  int iterations = 400;
  std::uint64_t seed = 0;
  double step_init = 0.25;
  double step_decay = 0.99;
  double injectivity_floor = 1e-6;
  Exec exec = Exec::parallel;
};

/// Best rigidity eigenvalue found by estimate_gac: a certified lower bound on
/// a_d(G), bracketed above by upper_bound.
struct GacEstimate {
  int d = 0;
  double value = 0;
  Realization best_realization{Eigen::MatrixXd::Zero(1, 1)};
  double upper_bound = 0;

  int restarts = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  int best_restart = 0;
  // Best-so-far value after each iteration of the winning restart.
  std::vector<double> trace;
  std::vector<double> restart_values;
  long evaluations = 0;
  long rejected_noninjective = 0;
  // False when the winning restart was still improving by more than
  // 1e-6 relative over its final tenth of iterations.
  bool converged = false;
};

/// One registry entry. Exact values have lower == upper.
struct KnownValue {
  FamilySpec family;
  int d = 0;
  std::optional<double> lower;
  std::optional<double> upper;
  std::string source;

  bool exact() const { return lower && upper && *lower == *upper; }
};

/// lambda_2(L(G)). Requires n >= 2; returns ~0 for disconnected graphs.
double algebraic_connectivity(const Graph& g);

/// lambda_{D(p)+1}(S(G, p)) with D(p) taken from the affine dimension of p.
double realization_objective(const Graph& g, const Realization& p,
                             Exec exec = Exec::serial);

/// Maximizes the rigidity eigenvalue over injective realizations in R^d by
/// multi-start coordinate-wise stochastic hill climbing. Deterministic for a
/// fixed config (including seed) regardless of `config.exec`.
GacEstimate estimate_gac(const Graph& g, int d, const OptimizerConfig& config = {});

/// As above; upper_bound is tightened with known_gac(spec, d) when available.
GacEstimate estimate_gac(const FamilySpec& spec, int d,
                         const OptimizerConfig& config = {});

/// estimate_gac(g, d).value / a_1(g). Throws PreconditionFailure when g is
/// disconnected.
double rigidity_ratio(const Graph& g, int d, const OptimizerConfig& config = {});

std::optional<KnownValue> known_gac(const FamilySpec& spec, int d);

}  // namespace rigid
