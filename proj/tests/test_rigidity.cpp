#include "rigid/error.hpp"
#include "rigid/families.hpp"
#include "rigid/graph.hpp"
#include "rigid/rigidity.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace rigid {
namespace {

Realization equilateral() {
  Eigen::MatrixXd p(2, 3);
  p << 0, 1, 0.5, 0, 0, std::sqrt(3.0) / 2;
  return Realization(p);
}

Realization on_line(int n, int d, std::mt19937_64& rng, Eigen::VectorXd* direction = nullptr) {
  std::normal_distribution<double> g(0, 1);
  Eigen::VectorXd w(d);
  for (int k = 0; k < d; ++k) w[k] = g(rng);
  w.normalize();
  Eigen::VectorXd base(d);
  for (int k = 0; k < d; ++k) base[k] = g(rng);
  Eigen::MatrixXd p(d, n);
  for (int i = 0; i < n; ++i) p.col(i) = base + (i + g(rng) * 0.1) * w;
  if (direction) *direction = w;
  return Realization(p);
}

double edge_sum_form(const Framework& f, const Eigen::VectorXd& u) {
  const int d = f.dim();
  double total = 0;
  for (const auto& e : f.graph().edges()) {
    Eigen::VectorXd diff = f.realization().point(e.u) - f.realization().point(e.v);
    const double len = diff.norm();
    if (len <= kCoincidenceTolerance) continue;
    const double c = (u.segment(d * e.u, d) - u.segment(d * e.v, d)).dot(diff / len);
    total += c * c;
  }
  return total;
}

TEST(Realization, Validation) {
  EXPECT_THROW(Realization(Eigen::MatrixXd(2, 0)), InvalidInput);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(1, 1) = std::nan("");
  EXPECT_THROW(Realization{bad}, InvalidInput);
  EXPECT_THROW(Framework(complete_graph(3), Realization(Eigen::MatrixXd::Zero(2, 2))), InvalidInput);
}

TEST(Realization, StackedRoundTripAndInjectivity) {
  std::mt19937_64 rng(1);
  Realization p = Realization::uniform(5, 3, rng);
  EXPECT_EQ(Realization::from_stacked(p.stacked(), 3).coordinates(), p.coordinates());
  EXPECT_EQ(p.stacked().segment(3, 3), Eigen::VectorXd(p.point(1)));
  EXPECT_TRUE(p.is_injective());
  Eigen::MatrixXd q = p.coordinates();
  q.col(4) = q.col(0);
  EXPECT_FALSE(Realization(q).is_injective());
  EXPECT_EQ(Realization(q).min_pairwise_distance(), 0.0);
}

TEST(Bearing, Examples) {
  Eigen::MatrixXd p(2, 2);
  p << 0, 1, 0, 0;
  Framework f(complete_graph(2), Realization(p));
  Eigen::VectorXd b = bearing(f, 1, 2);
  EXPECT_EQ(b, Eigen::Vector2d(-1, 0));
  EXPECT_EQ(bearing(f, 2, 1), Eigen::Vector2d(1, 0));

  Framework same(complete_graph(2), Realization(Eigen::MatrixXd::Constant(2, 2, 0.3)));
  EXPECT_EQ(bearing(same, 1, 2), Eigen::Vector2d::Zero());
  EXPECT_THROW(bearing(f, 1, 1), InvalidInput);
}

TEST(RigidityMatrix, CompleteTwo) {
  Eigen::MatrixXd p(2, 2);
  p << 0, 1, 0, 0;
  Eigen::MatrixXd r = rigidity_matrix(Framework(complete_graph(2), Realization(p)));
  Eigen::MatrixXd expected(1, 4);
  expected << -1, 0, 1, 0;
  EXPECT_EQ(r, expected);
}

TEST(RigidityMatrix, RowOrderFollowsEdges) {
  std::mt19937_64 rng(2);
  Graph g = path_graph(6, 2);
  Framework f(g, Realization::uniform(6, 2, rng));
  Eigen::MatrixXd r = rigidity_matrix(f);
  ASSERT_EQ(r.rows(), static_cast<Eigen::Index>(g.size()));
  int row = 0;
  for (const auto& e : g.edges()) {
    Eigen::VectorXd b = bearing(f, e.u + 1, e.v + 1);
    EXPECT_LE((r.row(row).segment(2 * e.u, 2).transpose() - b).norm(), 1e-15);
    EXPECT_LE((r.row(row).segment(2 * e.v, 2).transpose() + b).norm(), 1e-15);
    ++row;
  }
}

TEST(Stiffness, CompleteTwoSpectrum) {
  std::mt19937_64 rng(3);
  for (int d = 1; d <= 5; ++d) {
    Framework f(complete_graph(2), Realization::uniform(2, d, rng));
    auto v = testing::jacobi_eigenvalues(stiffness_matrix(f).matrix());
    for (int k = 0; k < 2 * d - 1; ++k) EXPECT_NEAR(v[k], 0.0, 1e-12);
    EXPECT_NEAR(v[2 * d - 1], 2.0, 1e-12);
    Eigen::VectorXd b = bearing(f, 1, 2);
    Eigen::MatrixXd expected = kron(laplacian(complete_graph(2)).matrix(), b * b.transpose());
    EXPECT_LE((stiffness_matrix(f).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Stiffness, TraceCountsNonCoincidentEdges) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(3 + trial % 10, 0.5, rng);
    Eigen::MatrixXd p = Realization::uniform(g.order(), 2, rng).coordinates();
    p.col(1) = p.col(0);  // one coincident pair
    Framework f(g, Realization(p));
    const int coincident = g.adjacent(0, 1) ? 1 : 0;
    EXPECT_NEAR(stiffness_matrix(f).matrix().trace(), 2.0 * (g.size() - coincident), 1e-12);
  }
}

TEST(Stiffness, QuadraticFormIsEdgeSum) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 4;
    Graph g = testing::random_graph(2 + trial % 12, 0.5, rng);
    Framework f(g, Realization::uniform(g.order(), d, rng));
    Eigen::VectorXd u(d * g.order());
    for (auto& x : u) x = gauss(rng);
    const double form = u.dot(stiffness_matrix(f).matrix() * u);
    const double oracle = edge_sum_form(f, u);
    EXPECT_LE(std::abs(form - oracle), 1e-10 * std::max(1.0, std::abs(oracle)));
  }
}

TEST(Stiffness, AugmentedLaplacianDominates) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 3;
    Graph g = testing::random_graph(3 + trial % 10, 0.5, rng);
    Framework f(g, Realization::uniform(g.order(), d, rng));
    Eigen::VectorXd w(d), x(g.order());
    for (auto& c : w) c = gauss(rng);
    w.normalize();
    for (auto& c : x) c = gauss(rng);
    Eigen::VectorXd u = kron(x, w);
    const double s_form = u.dot(stiffness_matrix(f).matrix() * u);
    const double l_form = u.dot(augmented_laplacian(g, w).matrix() * u);
    EXPECT_LE(s_form, l_form + 1e-10 * std::max(1.0, l_form));
  }
}

TEST(Stiffness, AugmentedLaplacianEqualityWhenCollinearAlongW) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 3;
    Graph g = testing::random_graph(3 + trial % 8, 0.6, rng);
    Eigen::VectorXd w;
    Framework f(g, on_line(g.order(), d, rng, &w));
    Eigen::VectorXd x(g.order());
    for (auto& c : x) c = gauss(rng);
    Eigen::VectorXd u = kron(x, w);
    const double s_form = u.dot(stiffness_matrix(f).matrix() * u);
    const double l_form = u.dot(augmented_laplacian(g, w).matrix() * u);
    EXPECT_NEAR(s_form, l_form, 1e-10 * std::max(1.0, l_form));
  }
}

TEST(AugmentedLaplacian, CompleteTwoSpectrumAndValidation) {
  auto v = testing::jacobi_eigenvalues(augmented_laplacian(complete_graph(2), Eigen::Vector2d(1, 0)).matrix());
  EXPECT_NEAR(v[0], 0, 1e-15);
  EXPECT_NEAR(v[1], 0, 1e-15);
  EXPECT_NEAR(v[2], 0, 1e-15);
  EXPECT_NEAR(v[3], 2, 1e-15);
  EXPECT_THROW(augmented_laplacian(complete_graph(2), Eigen::Vector2d(1, 1)), InvalidInput);
}

TEST(Stiffness, ScaleAndTranslationInvariance) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> alpha(0.1, 10);
  std::normal_distribution<double> gauss(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 4;
    Graph g = testing::random_graph(2 + trial % 10, 0.5, rng);
    Realization p = Realization::uniform(g.order(), d, rng);
    Eigen::VectorXd c(d);
    for (auto& x : c) x = gauss(rng);
    Eigen::MatrixXd moved = alpha(rng) * p.coordinates();
    moved.colwise() += c;
    Eigen::MatrixXd s = stiffness_matrix(Framework(g, p)).matrix();
    Eigen::MatrixXd t = stiffness_matrix(Framework(g, Realization(moved))).matrix();
    EXPECT_LE((s - t).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Stiffness, OneDimensionIsLaplacian) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testing::random_graph(2 + trial % 15, 0.4, rng);
    Framework f(g, Realization::uniform(g.order(), 1, rng));
    EXPECT_EQ(stiffness_matrix(f, Exec::serial).matrix(), laplacian(g).matrix());
    EXPECT_EQ(stiffness_matrix(f, Exec::parallel).matrix(), laplacian(g).matrix());
  }
}

TEST(TrivialMotions, BasisSizes) {
  EXPECT_EQ(trivial_motion_basis(Realization(Eigen::MatrixXd::Constant(2, 1, 0.4))).cols(), 2);
  Eigen::MatrixXd k2(3, 2);
  k2 << 0, 1, 0, 2, 0, 3;
  EXPECT_EQ(trivial_motion_basis(Realization(k2)).cols(), 5);
  EXPECT_EQ(trivial_motion_basis(equilateral()).cols(), 3);

  std::mt19937_64 rng(10);
  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 8; ++n) {
      Realization p = Realization::uniform(n, d, rng);
      EXPECT_EQ(trivial_motion_basis(p).cols(), trivial_dim(p)) << n << "," << d;
    }
}

TEST(TrivialMotions, DimensionFormula) {
  std::mt19937_64 rng(11);
  EXPECT_EQ(trivial_dim(Realization::uniform(5, 2, rng)), 3);
  Eigen::MatrixXd collinear(3, 3);
  collinear << 0, 1, 2, 0, 1, 2, 0, 1, 2;
  EXPECT_EQ(trivial_dim(Realization(collinear)), 5);
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(trivial_dim(Realization(Eigen::MatrixXd::Zero(d, 1))), d);
  EXPECT_EQ(trivial_dim(3, 3), 6);
  EXPECT_EQ(trivial_dim(3, 1), 5);
  EXPECT_EQ(trivial_dim(4, 2), 9);
}

TEST(TrivialMotions, OrthonormalAndInKernel) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 4;
    Graph g = testing::random_connected_graph(2 + trial % 10, 0.5, rng);
    Realization p = trial % 5 == 0 ? on_line(g.order(), d, rng) : Realization::uniform(g.order(), d, rng);
    Eigen::MatrixXd t = trivial_motion_basis(p);
    Eigen::MatrixXd r = rigidity_matrix(Framework(g, p));
    EXPECT_LE((t.transpose() * t - Eigen::MatrixXd::Identity(t.cols(), t.cols())).cwiseAbs().maxCoeff(), 1e-10);
    const double rnorm = r.norm();
    for (Eigen::Index k = 0; k < t.cols(); ++k) EXPECT_LE((r * t.col(k)).norm(), 1e-9 * rnorm);
  }
}

TEST(RigidityEigenvalue, Examples) {
  std::mt19937_64 rng(13);
  EXPECT_NEAR(rigidity_eigenvalue(Framework(complete_graph(2), Realization::uniform(2, 3, rng))), 2.0, 1e-12);

  Framework tri(complete_graph(3), equilateral());
  EXPECT_NEAR(rigidity_eigenvalue(tri), 1.5, 1e-12);
  auto v = testing::jacobi_eigenvalues(stiffness_matrix(tri).matrix());
  const double expected[] = {0, 0, 0, 1.5, 1.5, 3};
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(v[k], expected[k], 1e-12);

  Framework flex(path_graph(4, 1), Realization::uniform(4, 2, rng));
  const double lmax = testing::jacobi_eigenvalues(stiffness_matrix(flex).matrix()).back();
  EXPECT_LE(rigidity_eigenvalue(flex), kRankTolerance * lmax);

  EXPECT_THROW(rigidity_eigenvalue(Framework(build_graph(1, {}), Realization(Eigen::MatrixXd::Zero(2, 1)))),
               InvalidInput);
}

TEST(RigidityEigenvalue, OneDimensionIsAlgebraicConnectivity) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_connected_graph(2 + trial % 12, 0.3, rng);
    Framework f(g, Realization::uniform(g.order(), 1, rng));
    EXPECT_NEAR(rigidity_eigenvalue(f), testing::jacobi_eigenvalues(laplacian(g).matrix())[1], 1e-10);
  }
}

TEST(InfinitesimalRigidity, Examples) {
  std::mt19937_64 rng(15);
  EXPECT_TRUE(is_infinitesimally_rigid(Framework(complete_graph(3), equilateral())));
  EXPECT_FALSE(is_infinitesimally_rigid(Framework(path_graph(5, 1), Realization::uniform(5, 2, rng))));
  Eigen::MatrixXd line(2, 4);
  line << 0, 1, 2, 3, 0, 0, 0, 0;
  EXPECT_FALSE(is_infinitesimally_rigid(Framework(complete_graph(4), Realization(line))));
  EXPECT_EQ(numeric_rank(rigidity_matrix(Framework(complete_graph(4), Realization(line)))), 3);
}

TEST(InfinitesimalRigidity, ReportCriteriaAgree) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    Graph g = testing::random_graph(2 + trial % 9, 0.3 + 0.1 * (trial % 6), rng);
    Framework f(g, Realization::uniform(g.order(), d, rng));
    auto rep = analyze_rigidity(f);
    const int target = d * g.order() - rep.trivial_dim;
    EXPECT_TRUE(rep.criteria_agree);
    EXPECT_TRUE(rep.kernel_is_trivial);
    EXPECT_EQ(rep.is_inf_rigid, rep.stiffness_rank == target);
    EXPECT_EQ(rep.is_inf_rigid, rep.rigidity_eigenvalue > kRankTolerance * rep.max_eigenvalue);
    EXPECT_EQ(rep.is_inf_rigid, is_infinitesimally_rigid(f));
    EXPECT_EQ(rep.rigidity_rank, numeric_rank(rigidity_matrix(f)));
  }
}

TEST(GenericRigidity, Examples) {
  for (int d = 1; d <= 5; ++d) EXPECT_TRUE(is_generically_rigid(complete_graph(d + 1), d));
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 30; n += 3) EXPECT_TRUE(is_generically_rigid(path_graph(n, d), d)) << n << "," << d;
  for (int n = 3; n <= 10; ++n) EXPECT_FALSE(is_generically_rigid(path_graph(n, 1), 2));
  EXPECT_FALSE(is_generically_rigid(build_graph(4, {{1, 2}, {3, 4}}), 1));
}

TEST(GenericRigidity, ImpliesConnectivityAtLeastD) {
  std::mt19937_64 rng(17);
  int rigid_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 2 + trial % 2;
    const int n = d + 1 + trial % 6;
    Graph g = testing::random_graph(n, 0.5 + 0.05 * (trial % 8), rng);
    if (is_generically_rigid(g, d)) {
      ++rigid_seen;
      EXPECT_GE(testing::brute_force_connectivity(g), d);
    }
  }
  EXPECT_GT(rigid_seen, 10);
}

TEST(StreamRng, DeterministicAndDistinct) {
  auto a = stream_rng(5, 1), b = stream_rng(5, 1), c = stream_rng(5, 2), e = stream_rng(6, 1);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, e());
}

}  // namespace
}  // namespace rigid
