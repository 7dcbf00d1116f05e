#include "rigid/spectral.hpp"

#include "rigid/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace rigid {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + ": matrix has non-finite entries");
  }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInput("SymmetricMatrix: expected a non-empty square matrix, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  m_ = 0.5 * (m + m.transpose());
}

EigenDecomposition sym_eigen(const SymmetricMatrix& m) {
  require_finite(m.matrix(), "sym_eigen");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("sym_eigen: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXd sym_eigenvalues(const SymmetricMatrix& m) {
  require_finite(m.matrix(), "sym_eigenvalues");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("sym_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0)) {
    throw InvalidInput("numeric_rank: tolerance must be positive");
  }
  require_finite(m, "numeric_rank");
  if (m.size() == 0) {
    return 0;
  }
  const Eigen::VectorXd sigma = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) {
    return 0;
  }
  const double cutoff = tol * sigma(0);
  return static_cast<int>((sigma.array() > cutoff).count());
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

int affine_dimension(const Eigen::MatrixXd& points, double tol) {
  if (points.cols() == 0) {
    throw InvalidInput("affine_dimension: empty point list");
  }
  const Eigen::VectorXd centroid = points.rowwise().mean();
  const Eigen::MatrixXd centered = points.colwise() - centroid;
  return numeric_rank(centered, tol);
}

double rayleigh_quotient(const SymmetricMatrix& m, const Eigen::VectorXd& x) {
  return x.dot(m.matrix() * x) / x.squaredNorm();
}

SpectralSummary SpectralSummary::from_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  SpectralSummary s;
  s.tolerance = tol;
  double sum = 0;
  int count = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (count > 0 && values[k] - values[k - 1] > tol) {
      s.groups.push_back({sum / count, count});
      sum = 0;
      count = 0;
    }
    sum += values[k];
    ++count;
  }
  if (count > 0) {
    s.groups.push_back({sum / count, count});
  }
  s.eigenvalues = std::move(values);
  return s;
}

SpectralSummary SpectralSummary::from_groups(std::vector<Group> groups, double tol) {
  std::sort(groups.begin(), groups.end(),
            [](const Group& a, const Group& b) { return a.value < b.value; });
  SpectralSummary s;
  s.tolerance = tol;
  for (const auto& g : groups) {
    if (g.multiplicity <= 0) {
      continue;
    }
    if (!s.groups.empty() && std::abs(s.groups.back().value - g.value) <= tol) {
      s.groups.back().multiplicity += g.multiplicity;
    } else {
      s.groups.push_back(g);
    }
    s.eigenvalues.insert(s.eigenvalues.end(), g.multiplicity, g.value);
  }
  return s;
}

SpectralSummary spectrum(const SymmetricMatrix& m, double tol) {
  const Eigen::VectorXd values = sym_eigenvalues(m);
  return SpectralSummary::from_values({values.begin(), values.end()}, tol);
}

}  // namespace rigid
