#pragma once

#include "rigid/exec.hpp"
#include "rigid/graph.hpp"
#include "rigid/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace rigid {

// Points closer than this (absolute) get a zero bearing vector.
inline constexpr double kCoincidenceTolerance = 1e-12;

/// n points in R^d, stored as the columns of a d x n matrix.
class Realization {
 public:
  /// Throws InvalidInput on an empty point set, d < 1 or non-finite coordinates.
  explicit Realization(Eigen::MatrixXd points);

  /// Inverse of stacked(): [p_1; ...; p_n] with blocks of size d.
  static Realization from_stacked(const Eigen::VectorXd& stacked, int d);

  /// Coordinates drawn independently and uniformly from [0, 1].
  static Realization uniform(int n, int d, std::mt19937_64& rng);

  int ambient_dim() const noexcept { return static_cast<int>(points_.rows()); }
  int size() const noexcept { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& coordinates() const noexcept { return points_; }
  auto point(int index) const { return points_.col(index); }
  Eigen::VectorXd stacked() const;

  double min_pairwise_distance() const;
  /// Largest distance of a point from the centroid; 0 for a single point.
  double scale() const;
  /// min pairwise distance > rel_tol * max(scale, 1e-300).
  bool is_injective(double rel_tol = 1e-9) const;

 private:
  Eigen::MatrixXd points_;
};

class Framework {
 public:
  /// Throws InvalidInput when the point count differs from the graph order.
  Framework(Graph graph, Realization realization);

  const Graph& graph() const noexcept { return graph_; }
  const Realization& realization() const noexcept { return realization_; }
  int dim() const noexcept { return realization_.ambient_dim(); }

 private:
  Graph graph_;
  Realization realization_;
};

struct RigidityReport {
  int trivial_dim = 0;             // D(p)
  double rigidity_eigenvalue = 0;  // lambda_{D(p)+1}(S)
  double max_eigenvalue = 0;
  int stiffness_rank = 0;
  int rigidity_rank = 0;
  bool is_inf_rigid = false;       // rank(R) == d n - D(p)
  bool kernel_is_trivial = true;   // lambda_1..lambda_D numerically zero
  bool criteria_agree = true;      // rank(R), rank(S) and eigenvalue tests agree
  double rank_tolerance = kRankTolerance;
  double coincidence_tolerance = kCoincidenceTolerance;
};

/// Unit vector from p_j towards p_i (1-based labels); zero when the points
/// coincide within kCoincidenceTolerance. Throws InvalidInput when i == j.
Eigen::VectorXd bearing(const Framework& f, int i, int j);

/// |E| x dn matrix; the row of edge {i, j}, i < j, holds b_ij^T in block i
/// and -b_ij^T in block j. Rows follow the graph's lexicographic edge order.
Eigen::MatrixXd rigidity_matrix(const Framework& f);

SymmetricMatrix stiffness_matrix(const Framework& f, Exec exec = Exec::parallel);

/// Orthonormal basis (columns) of the trivial-motion space T(p), built from
/// the translations 1_n (x) e_k and rotations (I_n (x) A_kl) p of the
/// centered realization. Has trivial_dim(p) columns up to rank tolerance.
Eigen::MatrixXd trivial_motion_basis(const Realization& p);

/// D = C(d+1, 2) - C(d - dim, 2).
int trivial_dim(int d, int affine_dim);
int trivial_dim(const Realization& p);

/// Requires n >= 2. Eigenvalues 1..D(p) that are not numerically zero are
/// flagged in analyze_rigidity(), not thrown.
double rigidity_eigenvalue(const Framework& f);

RigidityReport analyze_rigidity(const Framework& f);

bool is_infinitesimally_rigid(const Framework& f);

/// Samples `trials` uniform realizations in [0,1]^d (trial t seeded from
/// (seed, t)); true if any gives an infinitesimally rigid framework.
bool is_generically_rigid(const Graph& g, int d, int trials = 3,
                          std::uint64_t seed = 0);

/// L(G) (x) w w^T. Throws InvalidInput unless |w| = 1 within 1e-10.
SymmetricMatrix augmented_laplacian(const Graph& g, const Eigen::VectorXd& w);

/// Deterministic per-stream generator: mixes (seed, stream) with splitmix64.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream);

}  // namespace rigid
