#include "rigid/bounds.hpp"
#include "rigid/cli.hpp"
#include "rigid/error.hpp"
#include "rigid/io.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace rigid::cli {

namespace {

// Largest |closed form - numeric| over matching sorted spectra.
double spectrum_gap(const SpectralSummary& closed, const SymmetricMatrix& m) {
  const Eigen::VectorXd numeric = sym_eigenvalues(m);
  if (numeric.size() != closed.dimension()) return INFINITY;
  double worst = 0;
  for (int k = 0; k < numeric.size(); ++k) {
    worst = std::max(worst, std::abs(numeric(k) - closed.eigenvalues[k]));
  }
  return worst;
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  // body returns "" on success or a failure description.
  try {
    std::string failure = body();
    return {std::move(name), failure.empty(), std::move(failure)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string fmt(double x) { return io::format_double(x); }

std::vector<CheckResult> spectra_suite() {
  std::vector<CheckResult> out;
  out.push_back(check("star_spectrum matches eigensolver (n <= 60)", [] {
    for (int d = 1; d <= 58; ++d) {
      for (int n = d + 2; n <= 60; ++n) {
        // S_{n,1} is K_{1,n-1}; build it directly since the family needs d >= 2.
        std::vector<LabeledEdge> edges;
        for (int i = 1; i <= d; ++i)
          for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
        const double gap = spectrum_gap(star_spectrum(n, d), laplacian(Graph::build(n, edges)));
        if (gap > 1e-9) return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " gap " + fmt(gap);
      }
    }
    return std::string();
  }));
  out.push_back(check("turan_spectrum matches eigensolver (kr <= 60)", [] {
    for (int k = 2; k <= 30; ++k) {
      for (int r = 2; k * r <= 60; ++r) {
        const double gap = spectrum_gap(turan_spectrum(k, r), laplacian(turan_graph(k, r)));
        if (gap > 1e-9) return "k=" + std::to_string(k) + " r=" + std::to_string(r) + " gap " + fmt(gap);
      }
    }
    return std::string();
  }));
  out.push_back(check("cycle_a1 matches numeric lambda_2 (n <= 200, d <= 5)", [] {
    for (int d = 1; d <= 5; ++d) {
      for (int n = d + 1; n <= 200; ++n) {
        const double numeric = sym_eigenvalues(laplacian(cycle_graph(n, d)))(1);
        const double gap = std::abs(numeric - cycle_a1(n, d));
        if (gap > 1e-9) return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " gap " + fmt(gap);
      }
    }
    return std::string();
  }));
  out.push_back(check("cycle test vector u is an eigenvector of L(C_{n,d})", [] {
    for (int d = 1; d <= 4; ++d) {
      for (int n = 2 * d + 2; n <= 64; ++n) {
        const auto tv = cycle_test_vectors(n);
        const Eigen::VectorXd residual =
            laplacian(cycle_graph(n, d)).matrix() * tv.u - cycle_a1(n, d) * tv.u;
        if (residual.norm() > 1e-10) return "n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
    return std::string();
  }));
  out.push_back(check("A(T_{kr,r}) = 1_{kxk} (x) A(K_r)", [] {
    for (int k = 2; k <= 5; ++k) {
      for (int r = 2; r <= 5; ++r) {
        const Eigen::MatrixXd expect =
            kron(Eigen::MatrixXd::Ones(k, k), adjacency(complete_graph(r)).matrix());
        if ((adjacency(turan_graph(k, r)).matrix() - expect).cwiseAbs().maxCoeff() != 0)
          return "k=" + std::to_string(k) + " r=" + std::to_string(r);
      }
    }
    return std::string();
  }));
  return out;
}

std::vector<CheckResult> bounds_suite() {
  std::vector<CheckResult> out;
  out.push_back(check("diameter(P_{n,d}) = ceil((n-1)/d) = max_rigid_diameter", [] {
    for (int d = 1; d <= 5; ++d) {
      for (int n = d + 1; n <= 60; ++n) {
        const int numeric = diameter(path_graph(n, d));
        if (numeric != path_diameter(n, d) || numeric != max_rigid_diameter(n, d))
          return "n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
    return std::string();
  }));
  out.push_back(check("path-vs-cycle bound (d = 2..4, n <= 40)", [] {
    for (int d = 2; d <= 4; ++d) {
      for (int n = d + 2; n <= 40; ++n) {
        const BoundReport r = path_cycle_bound(n, d);
        if (!r.satisfied) return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " slack " + fmt(r.slack);
      }
    }
    return std::string();
  }));
  out.push_back(check("asymptotic ratio -> 1/4", [] {
    for (int d = 2; d <= 4; ++d) {
      if (std::abs(asymptotic_ratio(500, d) - 0.25) > 1e-3) return "d=" + std::to_string(d);
      double previous = INFINITY;
      for (int n = 16; n <= 512; n *= 2) {
        const double r = asymptotic_ratio(n, d);
        if (!(r < previous) || r < 0.25) return "not decreasing at n=" + std::to_string(n);
        previous = r;
      }
    }
    return std::string();
  }));
  out.push_back(check("diameter bound and witness chain on family instances", [] {
    const std::vector<FamilySpec> specs = {
        FamilySpec::complete(2), FamilySpec::complete(7), FamilySpec::path(9, 1),
        FamilySpec::path(20, 3), FamilySpec::cycle(10, 1), FamilySpec::cycle(25, 2),
        FamilySpec::star(8, 3),  FamilySpec::turan(3, 4)};
    for (const auto& spec : specs) {
      const Graph g = generate(spec);
      const double a1 = algebraic_connectivity(g);
      if (!check_upper_bound("", a1, diameter_vc_bound(g)).satisfied) return spec.to_string();
      if (!diameter_bound_witness(g).holds()) return spec.to_string() + " witness";
    }
    return std::string();
  }));
  out.push_back(check("K_2 attains the diameter bound with equality", [] {
    const Graph k2 = complete_graph(2);
    const double bound = diameter_vc_bound(k2);
    const double a1 = algebraic_connectivity(k2);
    return std::abs(bound - 2) < 1e-12 && std::abs(a1 - 2) < 1e-12 ? std::string()
                                                                     : "bound " + fmt(bound);
  }));
  return out;
}

std::vector<CheckResult> rigidity_suite(const OptimizerConfig& cfg) {
  std::vector<CheckResult> out;
  out.push_back(check("stiffness quadratic form equals edge sum", [] {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 1 + trial % 3;
      const Graph g = path_graph(6 + trial % 5, 2);
      auto prng = stream_rng(trial, 0);
      const Framework f(g, Realization::uniform(g.order(), d, prng));
      Eigen::VectorXd u(d * g.order());
      for (auto& x : u) x = gauss(rng);
      double edge_sum = 0;
      for (const Edge& e : g.edges()) {
        const double t = (u.segment(e.u * d, d) - u.segment(e.v * d, d)).dot(bearing(f, e.u + 1, e.v + 1));
        edge_sum += t * t;
      }
      const double quad = u.dot(stiffness_matrix(f).matrix() * u);
      if (std::abs(quad - edge_sum) > 1e-10 * std::max(1.0, edge_sum)) return "trial " + std::to_string(trial);
    }
    return std::string();
  }));
  out.push_back(check("trivial motions lie in the rigidity-matrix null space", [] {
    for (int d = 1; d <= 4; ++d) {
      const Graph g = path_graph(10, d);
      auto rng = stream_rng(d, 1);
      const Framework f(g, Realization::uniform(10, d, rng));
      const Eigen::MatrixXd r = rigidity_matrix(f);
      const Eigen::MatrixXd t = trivial_motion_basis(f.realization());
      if (t.cols() != trivial_dim(f.realization())) return "basis size, d=" + std::to_string(d);
      if ((r * t).norm() > 1e-9 * std::max(1.0, r.norm())) return "residual, d=" + std::to_string(d);
    }
    return std::string();
  }));
  out.push_back(check("d = 1 stiffness equals the Laplacian", [] {
    const Graph g = cycle_graph(9, 2);
    Eigen::MatrixXd pts(1, 9);
    for (int i = 0; i < 9; ++i) pts(0, i) = std::sin(1.7 * i) + 0.1 * i;
    const Framework f(g, Realization(pts));
    return stiffness_matrix(f).matrix() == laplacian(g).matrix() ? std::string() : "mismatch";
  }));
  out.push_back(check("P_{n,d} generically rigid with rank dn - d(d+1)/2", [] {
    for (int d = 1; d <= 4; ++d) {
      for (int n = d + 1; n <= 30; n += 3) {
        auto rng = stream_rng(n, d);
        const Framework f(path_graph(n, d), Realization::uniform(n, d, rng));
        if (numeric_rank(rigidity_matrix(f)) != d * n - d * (d + 1) / 2)
          return "n=" + std::to_string(n) + " d=" + std::to_string(d);
      }
    }
    return std::string();
  }));
  out.push_back(check("a_d(K_2) = a_1(K_2) = 2", [&cfg] {
    for (int d = 2; d <= 5; ++d) {
      OptimizerConfig quick = cfg;
      quick.restarts = 1;
      quick.iterations = 5;
      const double ratio = rigidity_ratio(complete_graph(2), d, quick);
      if (std::abs(ratio - 1) > 1e-9) return "d=" + std::to_string(d) + " ratio " + fmt(ratio);
    }
    return std::string();
  }));
  return out;
}

}  // namespace

std::vector<CheckResult> verify(const std::string& suite, const OptimizerConfig& optimizer) {
  if (suite == "spectra") return spectra_suite();
  if (suite == "bounds") return bounds_suite();
  if (suite == "rigidity") return rigidity_suite(optimizer);
  if (suite == "all") {
    auto all = spectra_suite();
    for (auto&& part : {bounds_suite(), rigidity_suite(optimizer)}) {
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw InvalidInput("unknown suite '" + suite + "' (spectra, bounds, rigidity, all)");
}

std::vector<CheckResult> verify_graph(const Graph& g, const OptimizerConfig& optimizer) {
  std::vector<CheckResult> out;
  if (g.order() < 2 || !is_connected(g)) {
    throw PreconditionFailure("verify --graph: graph must be connected with n >= 2");
  }
  out.push_back(check("graph: a_1 <= diameter/connectivity bound", [&] {
    const double a1 = algebraic_connectivity(g);
    const BoundReport r = check_upper_bound("", a1, diameter_vc_bound(g));
    return r.satisfied ? std::string() : "slack " + fmt(r.slack);
  }));
  out.push_back(check("graph: witness chain", [&] {
    const auto w = diameter_bound_witness(g);
    for (const auto& link : w.links) {
      if (!link.satisfied) return link.theorem + " slack " + fmt(link.slack);
    }
    return std::string();
  }));
  out.push_back(check("graph: Menger lower bound", [&] {
    const int kappa = vertex_connectivity(g);
    for (int a = 1; a <= g.order(); ++a)
      for (int b = a + 1; b <= g.order(); ++b)
        if (count_disjoint_paths(g, a, b) < kappa) return std::to_string(a) + "-" + std::to_string(b);
    return std::string();
  }));
  out.push_back(check("graph: 2-rigidity ratio <= 1", [&] {
    const BoundReport r = ratio_bound_check(g, 2, optimizer);
    return r.satisfied ? std::string() : "ratio " + fmt(r.lhs);
  }));
  return out;
}

}  // namespace rigid::cli
