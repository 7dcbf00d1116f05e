#include "rigid/bounds.hpp"
#include "rigid/cli.hpp"
#include "rigid/error.hpp"
#include "rigid/io.hpp"

#include <functional>

namespace rigid::cli {

namespace {

using Row = std::vector<std::string>;

std::string num(double x) { return io::format_double(x); }

FamilySpec family_for(FamilyKind kind, int n, int d) {
  switch (kind) {
    case FamilyKind::complete: return FamilySpec::complete(n);
    case FamilyKind::path: return FamilySpec::path(n, d);
    case FamilyKind::cycle: return FamilySpec::cycle(n, d);
    case FamilyKind::star: return FamilySpec::star(n, d);
    case FamilyKind::turan: return FamilySpec::turan(n, d + 1);
  }
  return FamilySpec::complete(n);
}

}  // namespace

Table sweep(const SweepRequest& request) {
  const std::vector<int> ns = request.n.values();
  if (ns.empty()) {
    throw InvalidInput("sweep: empty range for --n");
  }
  const int d = request.d;
  if (d < 1) {
    throw InvalidInput("sweep: --d must be >= 1");
  }

  Table table;
  std::function<Row(int)> make_row;
  if (request.kind == "asymptotic-ratio") {
    table.header = {"n", "d", "a1_cycle_n", "a1_cycle_2n", "ratio"};
    make_row = [d](int n) {
      return Row{std::to_string(n), std::to_string(d), num(cycle_a1(n, d)),
                 num(cycle_a1(2 * n, d)), num(asymptotic_ratio(n, d))};
    };
  } else if (request.kind == "ratio") {
    if (!request.family) {
      throw InvalidInput("sweep ratio: --family is required");
    }
    table.header = {"n", "d", "family", "a1", "gac", "upper_bound", "ratio"};
    const FamilyKind kind = *request.family;
    const OptimizerConfig cfg = request.optimizer;
    make_row = [d, kind, cfg](int n) {
      const FamilySpec spec = family_for(kind, n, d);
      const GacEstimate est = estimate_gac(spec, d, cfg);
      const double a1 = algebraic_connectivity(generate(spec));
      return Row{std::to_string(n), std::to_string(d), spec.to_string(), num(a1),
                 num(est.value), num(est.upper_bound), num(est.value / a1)};
    };
  } else if (request.kind == "path-cycle") {
    table.header = {"n", "d", "lambda2_path", "a1_cycle_2n", "slack", "satisfied"};
    make_row = [d](int n) {
      const BoundReport r = path_cycle_bound(n, d);
      return Row{std::to_string(n), std::to_string(d), num(r.lhs), num(r.rhs), num(r.slack),
                 r.satisfied ? "true" : "false"};
    };
  } else if (request.kind == "path-diameter") {
    table.header = {"n", "d", "diameter", "closed_form", "max_rigid_diameter"};
    make_row = [d](int n) {
      return Row{std::to_string(n), std::to_string(d), std::to_string(diameter(path_graph(n, d))),
                 std::to_string(path_diameter(n, d)), std::to_string(max_rigid_diameter(n, d))};
    };
  } else {
    throw InvalidInput("sweep: unknown kind '" + request.kind +
                       "' (asymptotic-ratio, ratio, path-cycle, path-diameter)");
  }

  // Exceptions may not escape an OpenMP region; collect them per row.
  table.rows.resize(ns.size());
  std::vector<std::string> errors(ns.size());
  const int count = static_cast<int>(ns.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      table.rows[k] = make_row(ns[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw InvalidInput("sweep: " + e);
  }
  return table;
}

}  // namespace rigid::cli
