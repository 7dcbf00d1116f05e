#include "rigid/rigidity.hpp"

#include "rigid/error.hpp"
#include "rigid/kernels.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rigid {

namespace {

int choose2(int a) { return a < 2 ? 0 : a * (a - 1) / 2; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int label_to_index(const Framework& f, int label) {
  if (label < 1 || label > f.graph().order()) {
    throw InvalidInput("vertex " + std::to_string(label) + " outside 1.." +
                       std::to_string(f.graph().order()));
  }
  return label - 1;
}

}  // namespace

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1)));
}

Realization::Realization(Eigen::MatrixXd points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw InvalidInput("realization needs d >= 1 and at least one point");
  }
  if (!points_.allFinite()) {
    throw InvalidInput("realization has non-finite coordinates");
  }
}

Realization Realization::from_stacked(const Eigen::VectorXd& stacked, int d) {
  if (d < 1 || stacked.size() == 0 || stacked.size() % d != 0) {
    throw InvalidInput("stacked realization length " + std::to_string(stacked.size()) +
                       " is not a positive multiple of d = " + std::to_string(d));
  }
  const Eigen::Index n = stacked.size() / d;
  return Realization(Eigen::Map<const Eigen::MatrixXd>(stacked.data(), d, n));
}

Realization Realization::uniform(int n, int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  Eigen::MatrixXd pts(d, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      pts(k, i) = coord(rng);
    }
  }
  return Realization(std::move(pts));
}

Eigen::VectorXd Realization::stacked() const {
  return Eigen::Map<const Eigen::VectorXd>(points_.data(), points_.size());
}

double Realization::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      best = std::min(best, (points_.col(i) - points_.col(j)).norm());
    }
  }
  return best;
}

double Realization::scale() const {
  const Eigen::VectorXd centroid = points_.rowwise().mean();
  return (points_.colwise() - centroid).colwise().norm().maxCoeff();
}

bool Realization::is_injective(double rel_tol) const {
  if (size() < 2) {
    return true;
  }
  return min_pairwise_distance() > rel_tol * std::max(scale(), 1e-300);
}

Framework::Framework(Graph graph, Realization realization)
    : graph_(std::move(graph)), realization_(std::move(realization)) {
  if (graph_.order() != realization_.size()) {
    throw InvalidInput("framework: graph has " + std::to_string(graph_.order()) +
                       " vertices but realization has " +
                       std::to_string(realization_.size()) + " points");
  }
}

Eigen::VectorXd bearing(const Framework& f, int i, int j) {
  if (i == j) {
    throw InvalidInput("bearing: endpoints must differ, got " + std::to_string(i) + " twice");
  }
  const auto& p = f.realization();
  Eigen::VectorXd diff = p.point(label_to_index(f, i)) - p.point(label_to_index(f, j));
  const double len = diff.norm();
  if (len <= kCoincidenceTolerance) {
    return Eigen::VectorXd::Zero(f.dim());
  }
  return diff / len;
}

Eigen::MatrixXd rigidity_matrix(const Framework& f) {
  const int d = f.dim();
  const Graph& g = f.graph();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.size()), d * g.order());
  Eigen::Index row = 0;
  for (const Edge& e : g.edges()) {
    const Eigen::VectorXd b = bearing(f, e.u + 1, e.v + 1);
    r.block(row, e.u * d, 1, d) = b.transpose();
    r.block(row, e.v * d, 1, d) = -b.transpose();
    ++row;
  }
  return r;
}

SymmetricMatrix stiffness_matrix(const Framework& f, Exec exec) {
  return SymmetricMatrix(
      kernels::assemble_stiffness(f.graph(), f.realization().coordinates(), exec));
}

int trivial_dim(int d, int affine_dim) {
  return choose2(d + 1) - choose2(d - affine_dim);
}

int trivial_dim(const Realization& p) {
  return trivial_dim(p.ambient_dim(), affine_dimension(p.coordinates()));
}

Eigen::MatrixXd trivial_motion_basis(const Realization& p) {
  const int d = p.ambient_dim();
  const int n = p.size();
  const Eigen::VectorXd centroid = p.coordinates().rowwise().mean();
  const Eigen::MatrixXd centered = p.coordinates().colwise() - centroid;

  Eigen::MatrixXd span = Eigen::MatrixXd::Zero(d * n, choose2(d + 1));
  int col = 0;
  for (int k = 0; k < d; ++k, ++col) {
    for (int i = 0; i < n; ++i) span(i * d + k, col) = 1.0;
  }
  // A_kl = e_k e_l^T - e_l e_k^T maps x to x_l e_k - x_k e_l.
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l, ++col) {
      for (int i = 0; i < n; ++i) {
        span(i * d + k, col) = centered(l, i);
        span(i * d + l, col) = -centered(k, i);
      }
    }
  }
  for (int c = 0; c < span.cols(); ++c) {
    const double norm = span.col(c).norm();
    if (norm > 0) span.col(c) /= norm;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeThinU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > kRankTolerance * sigma(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

double rigidity_eigenvalue(const Framework& f) {
  return analyze_rigidity(f).rigidity_eigenvalue;
}

RigidityReport analyze_rigidity(const Framework& f) {
  const int n = f.graph().order();
  if (n < 2) {
    throw InvalidInput("rigidity analysis needs at least 2 vertices");
  }
  const int dn = f.dim() * n;
  RigidityReport report;
  report.trivial_dim = trivial_dim(f.realization());

  const Eigen::VectorXd ev = sym_eigenvalues(stiffness_matrix(f));
  report.max_eigenvalue = std::max(ev(dn - 1), 0.0);
  const double cutoff = kRankTolerance * report.max_eigenvalue;
  report.rigidity_eigenvalue = report.trivial_dim < dn ? ev(report.trivial_dim) : 0.0;
  report.stiffness_rank = static_cast<int>((ev.array().abs() > cutoff).count());
  for (int k = 0; k < report.trivial_dim; ++k) {
    if (std::abs(ev(k)) > cutoff) report.kernel_is_trivial = false;
  }

  report.rigidity_rank = numeric_rank(rigidity_matrix(f));
  const int full = dn - report.trivial_dim;
  report.is_inf_rigid = report.rigidity_rank == full;
  const bool by_stiffness_rank = report.stiffness_rank == full;
  const bool by_eigenvalue = report.rigidity_eigenvalue > cutoff;
  report.criteria_agree =
      by_stiffness_rank == report.is_inf_rigid && by_eigenvalue == report.is_inf_rigid;
  return report;
}

bool is_infinitesimally_rigid(const Framework& f) {
  const int dn = f.dim() * f.graph().order();
  return numeric_rank(rigidity_matrix(f)) == dn - trivial_dim(f.realization());
}

bool is_generically_rigid(const Graph& g, int d, int trials, std::uint64_t seed) {
  if (d < 1 || trials < 1) {
    throw InvalidInput("is_generically_rigid: requires d >= 1 and trials >= 1");
  }
  for (int t = 0; t < trials; ++t) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
    if (is_infinitesimally_rigid(Framework(g, Realization::uniform(g.order(), d, rng)))) {
      return true;
    }
  }
  return false;
}

SymmetricMatrix augmented_laplacian(const Graph& g, const Eigen::VectorXd& w) {
  if (std::abs(w.norm() - 1.0) > 1e-10) {
    throw InvalidInput("augmented_laplacian: direction must be a unit vector (norm " +
                       std::to_string(w.norm()) + ")");
  }
  return SymmetricMatrix(kron(laplacian(g).matrix(), w * w.transpose()));
}

}  // namespace rigid
