#include "rigid/kernels.hpp"

#include "vertex_flow.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rigid::kernels {

namespace {

// Bearing of p_i relative to p_j, zero for coincident points.
Eigen::VectorXd unit_difference(const Eigen::MatrixXd& points, int i, int j) {
  Eigen::VectorXd diff = points.col(i) - points.col(j);
  const double len = diff.norm();
  if (len <= 1e-12) {
    return Eigen::VectorXd::Zero(points.rows());
  }
  return diff / len;
}

}  // namespace

std::vector<int> all_pairs_distances(const Graph& g, Exec exec) {
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * n, kUnreachable);
  auto fill_row = [&](int s) {
    const auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(s) * n);
  };
  if (exec == Exec::serial) {
    for (int s = 0; s < n; ++s) {
      fill_row(s);
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
      fill_row(s);
    }
  }
  return table;
}

Eigen::MatrixXd assemble_stiffness(const Graph& g, const Eigen::MatrixXd& points,
                                   Exec exec) {
  const int d = static_cast<int>(points.rows());
  const int n = g.order();
  if (exec == Exec::serial) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.size()), d * n);
    Eigen::Index row = 0;
    for (const Edge& e : g.edges()) {
      const Eigen::VectorXd b = unit_difference(points, e.u, e.v);
      r.block(row, e.u * d, 1, d) = b.transpose();
      r.block(row, e.v * d, 1, d) = -b.transpose();
      ++row;
    }
    return r.transpose() * r;
  }

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d * n, d * n);
  // Each iteration writes only the block row of vertex i.
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors(i)) {
      const Eigen::VectorXd b = unit_difference(points, i, j);
      const Eigen::MatrixXd outer = b * b.transpose();
      s.block(i * d, i * d, d, d) += outer;
      s.block(i * d, j * d, d, d) = -outer;
    }
  }
  return s;
}

int min_pairwise_vertex_cut(const Graph& g, Exec exec) {
  const int n = g.order();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) {
        pairs.emplace_back(a, b);
      }
    }
  }
  int best = n - 1;
  const int count = static_cast<int>(pairs.size());
  if (exec == Exec::serial) {
    for (const auto& [a, b] : pairs) {
      best = std::min(best, detail::vertex_disjoint_paths(g, a, b, false));
    }
    return best;
  }
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int k = 0; k < count; ++k) {
    best = std::min(best, detail::vertex_disjoint_paths(g, pairs[k].first,
                                                        pairs[k].second, false, best));
  }
  return best;
}

}  // namespace rigid::kernels
