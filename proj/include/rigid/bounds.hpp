#pragma once

#include "rigid/gac.hpp"
#include "rigid/graph.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace rigid {

/// Outcome of checking one inequality lhs <= rhs.
///
/// satisfied when slack >= -1e-9 * max(1, |rhs|); `warning` marks a
/// violation that was absorbed by that tolerance.
struct BoundReport {
  std::string theorem;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool satisfied = false;
  bool warning = false;
  std::map<std::string, double> inputs;
};

inline constexpr double kBoundTolerance = 1e-9;

BoundReport check_upper_bound(std::string theorem, double lhs, double rhs,
                              std::map<std::string, double> inputs = {});

/// 12|E| / (kappa Delta (Delta-1)(Delta-2) + 6 Delta^2), an upper bound on
/// a_d(G) for every d. Throws PreconditionFailure when g is disconnected.
double diameter_vc_bound(const Graph& g);

/// Test vector and inequality chain behind diameter_vc_bound.
struct DiameterWitness {
  int a = 0;  // 1-based labels of the lexicographically first diametral pair
  int b = 0;
  int diameter = 0;
  int connectivity = 0;
  std::size_t edges = 0;
  Eigen::VectorXd v;           // v_i = dist(i, a) / Delta
  Eigen::VectorXd v_centered;  // v minus its mean
  double quadratic_form = 0;   // <L v^, v^>
  double edge_bound = 0;       // |E| / Delta^2
  double norm_sq = 0;          // <v^, v^>
  double norm_lower = 0;       // 1/2 + kappa (Delta-1)(Delta-2) / (12 Delta)
  double rayleigh = 0;         // quadratic_form / norm_sq
  double algebraic_connectivity = 0;
  // [0] <Lv^,v^> <= |E|/Delta^2, [1] norm_lower <= <v^,v^>, [2] a_1 <= Rayleigh.
  std::array<BoundReport, 3> links;

  bool holds() const {
    return links[0].satisfied && links[1].satisfied && links[2].satisfied;
  }
};

DiameterWitness diameter_bound_witness(const Graph& g);

/// ceil((n-1)/d): the largest diameter of a generically rigid graph in R^d.
int max_rigid_diameter(int n, int d);

/// Closed-form diameter of P_{n,d}; requires n >= d + 1.
int path_diameter(int n, int d);

/// lambda_2(L(P_{n,d})) <= cycle_a1(2n, d); requires d >= 2, n >= d + 2.
BoundReport path_cycle_bound(int n, int d);

/// cycle_a1(2n, d) / cycle_a1(n, d); requires n >= 2d + 2.
double asymptotic_ratio(int n, int d);

/// rigidity_ratio(g, d) <= 1.
BoundReport ratio_bound_check(const Graph& g, int d, const OptimizerConfig& config = {});

/// a_d(G) <= diameter_vc_bound(G), with lhs the supplied a_d value or estimate.
BoundReport diameter_bound_check(const Graph& g, double gac_value, int d);

/// Delta(G) <= max_rigid_diameter(n, d); vacuous when g is not rigid.
BoundReport rigid_diameter_check(const Graph& g, int d, bool generically_rigid);

/// d <= kappa(G) whenever G is generically rigid in R^d. Requires n >= d + 1.
/// inputs carries "rigid" and "contrapositive" (kappa < d, so not rigid).
BoundReport rigidity_necessity_check(const Graph& g, int d, int trials = 3,
                                     std::uint64_t seed = 0);

}  // namespace rigid
