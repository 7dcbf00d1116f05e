#include "rigid/bounds.hpp"

#include "rigid/error.hpp"
#include "rigid/families.hpp"
#include "rigid/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rigid {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.order() < 2) {
    throw InvalidInput(std::string(what) + ": need at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionFailure(std::string(what) + ": graph is disconnected");
  }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

BoundReport check_upper_bound(std::string theorem, double lhs, double rhs,
                              std::map<std::string, double> inputs) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.satisfied = r.slack >= -kBoundTolerance * std::max(1.0, std::abs(rhs));
  r.warning = r.satisfied && r.slack < 0;
  r.inputs = std::move(inputs);
  return r;
}

double diameter_vc_bound(const Graph& g) {
  require_connected(g, "diameter_vc_bound");
  const double edges = static_cast<double>(g.size());
  const double kappa = vertex_connectivity(g);
  const double delta = diameter(g);
  return 12.0 * edges /
         (kappa * delta * (delta - 1) * (delta - 2) + 6.0 * delta * delta);
}

DiameterWitness diameter_bound_witness(const Graph& g) {
  require_connected(g, "diameter_bound_witness");
  const int n = g.order();
  const auto table = kernels::all_pairs_distances(g, Exec::parallel);

  DiameterWitness w;
  w.diameter = *std::max_element(table.begin(), table.end());
  for (int a = 0; a < n && w.a == 0; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (table[static_cast<std::size_t>(a) * n + b] == w.diameter) {
        w.a = a + 1;
        w.b = b + 1;
        break;
      }
    }
  }
  w.connectivity = vertex_connectivity(g);
  w.edges = g.size();

  const double delta = w.diameter;
  w.v.resize(n);
  for (int i = 0; i < n; ++i) {
    w.v(i) = table[static_cast<std::size_t>(w.a - 1) * n + i] / delta;
  }
  w.v_centered = w.v.array() - w.v.mean();

  const SymmetricMatrix l = laplacian(g);
  w.quadratic_form = w.v_centered.dot(l.matrix() * w.v_centered);
  w.edge_bound = static_cast<double>(w.edges) / (delta * delta);
  w.norm_sq = w.v_centered.squaredNorm();
  w.norm_lower = 0.5 + w.connectivity * (delta - 1) * (delta - 2) / (12.0 * delta);
  w.rayleigh = w.quadratic_form / w.norm_sq;
  w.algebraic_connectivity = sym_eigenvalues(l)(1);

  const std::map<std::string, double> inputs{{"n", n},
                                             {"edges", static_cast<double>(w.edges)},
                                             {"kappa", w.connectivity},
                                             {"diameter", w.diameter},
                                             {"a", w.a},
                                             {"b", w.b}};
  w.links[0] = check_upper_bound("witness_quadratic_form", w.quadratic_form, w.edge_bound, inputs);
  w.links[1] = check_upper_bound("witness_norm", w.norm_lower, w.norm_sq, inputs);
  w.links[2] = check_upper_bound("witness_rayleigh", w.algebraic_connectivity, w.rayleigh, inputs);
  return w;
}

int max_rigid_diameter(int n, int d) {
  if (n < 2 || d < 1) {
    throw InvalidInput("max_rigid_diameter: requires n >= 2 and d >= 1");
  }
  return ceil_div(n - 1, d);
}

int path_diameter(int n, int d) {
  if (d < 1 || n < d + 1) {
    throw InvalidInput("path_diameter(" + std::to_string(n) + ", " + std::to_string(d) +
                       "): requires d >= 1 and n >= d + 1");
  }
  return ceil_div(n - 1, d);
}

BoundReport path_cycle_bound(int n, int d) {
  if (d < 2 || n < d + 2) {
    throw InvalidInput("path_cycle_bound(" + std::to_string(n) + ", " + std::to_string(d) +
                       "): requires d >= 2 and n >= d + 2");
  }
  const double lhs = sym_eigenvalues(laplacian(path_graph(n, d)))(1);
  return check_upper_bound("path_cycle", lhs, cycle_a1(2 * n, d), {{"n", n}, {"d", d}});
}

double asymptotic_ratio(int n, int d) {
  if (d < 1 || n < 2 * d + 2) {
    throw InvalidInput("asymptotic_ratio(" + std::to_string(n) + ", " + std::to_string(d) +
                       "): requires d >= 1 and n >= 2d + 2");
  }
  return cycle_a1(2 * n, d) / cycle_a1(n, d);
}

BoundReport ratio_bound_check(const Graph& g, int d, const OptimizerConfig& config) {
  const double ratio = rigidity_ratio(g, d, config);
  return check_upper_bound("ratio_bound", ratio, 1.0,
                           {{"n", g.order()}, {"d", d}, {"edges", static_cast<double>(g.size())}});
}

BoundReport diameter_bound_check(const Graph& g, double gac_value, int d) {
  const double rhs = diameter_vc_bound(g);
  return check_upper_bound("diameter_vc_bound", gac_value, rhs,
                           {{"n", g.order()},
                            {"d", d},
                            {"edges", static_cast<double>(g.size())},
                            {"kappa", vertex_connectivity(g)},
                            {"diameter", diameter(g)}});
}

BoundReport rigid_diameter_check(const Graph& g, int d, bool generically_rigid) {
  const int delta = diameter(g);
  const int cap = max_rigid_diameter(g.order(), d);
  BoundReport r = check_upper_bound("rigid_max_diameter", delta, cap,
                                    {{"n", g.order()},
                                     {"d", d},
                                     {"diameter", delta},
                                     {"rigid", generically_rigid ? 1.0 : 0.0}});
  if (!generically_rigid) {
    r.satisfied = true;
    r.warning = false;
  }
  return r;
}

BoundReport rigidity_necessity_check(const Graph& g, int d, int trials, std::uint64_t seed) {
  if (d < 1 || g.order() < d + 1) {
    throw InvalidInput("rigidity_necessity_check: requires n >= d + 1");
  }
  const bool rigid = is_generically_rigid(g, d, trials, seed);
  const int kappa = vertex_connectivity(g);
  BoundReport r = check_upper_bound("rigidity_connectivity", d, kappa,
                                    {{"n", g.order()},
                                     {"d", d},
                                     {"kappa", kappa},
                                     {"rigid", rigid ? 1.0 : 0.0},
                                     {"contrapositive", kappa < d ? 1.0 : 0.0}});
  if (!rigid) {
    r.satisfied = true;
    r.warning = false;
  }
  return r;
}

}  // namespace rigid
