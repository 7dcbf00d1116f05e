#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace rigid {

// Singular values below kRankTolerance * sigma_max are treated as zero.
inline constexpr double kRankTolerance = 1e-9;

// Eigenvalues closer than this are reported as one multiplicity group.
inline constexpr double kClusterTolerance = 1e-7;

/// Dense real symmetric matrix. The constructor replaces the input by
/// (A + A^T) / 2, so the stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  int dimension() const noexcept { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Eigen::MatrixXd m_;
};

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k pairs with values[k]
};

/// Full eigendecomposition, eigenvalues ascending, eigenvectors orthonormal.
/// Throws InvalidInput on non-finite entries.
EigenDecomposition sym_eigen(const SymmetricMatrix& m);

/// Eigenvalues only (ascending); cheaper than sym_eigen.
Eigen::VectorXd sym_eigenvalues(const SymmetricMatrix& m);

/// Number of singular values exceeding tol * sigma_max. Zero for the zero matrix.
int numeric_rank(const Eigen::MatrixXd& m, double tol = kRankTolerance);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Affine dimension of the columns of `points` (d x n): the numeric rank of
/// the centroid-subtracted coordinate matrix.
int affine_dimension(const Eigen::MatrixXd& points, double tol = kRankTolerance);

/// <Mx, x> / <x, x>.
double rayleigh_quotient(const SymmetricMatrix& m, const Eigen::VectorXd& x);

/// Sorted spectrum plus the grouped {mu_k^(m_k)} view.
struct SpectralSummary {
  struct Group {
    double value;
    int multiplicity;
  };

  std::vector<double> eigenvalues;
  std::vector<Group> groups;
  double tolerance = kClusterTolerance;

  /// Groups ascending eigenvalues whose consecutive gaps are within `tol`.
  static SpectralSummary from_values(std::vector<double> values,
                                     double tol = kClusterTolerance);
  /// Expands exact (value, multiplicity) groups into the eigenvalue list.
  static SpectralSummary from_groups(std::vector<Group> groups,
                                     double tol = kClusterTolerance);

  int dimension() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

SpectralSummary spectrum(const SymmetricMatrix& m, double tol = kClusterTolerance);

}  // namespace rigid
