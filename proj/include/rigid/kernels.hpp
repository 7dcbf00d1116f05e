#pragma once

// Data-parallel kernels. Every kernel takes an Exec selector: Exec::parallel
// runs the OpenMP implementation, Exec::serial the straightforward reference
// it is tested against.

#include "rigid/exec.hpp"
#include "rigid/graph.hpp"

#include <Eigen/Dense>

#include <vector>

namespace rigid::kernels {

/// n*n row-major distance table (kUnreachable between components).
/// Parallel path: one BFS per source, sources split across threads.
std::vector<int> all_pairs_distances(const Graph& g, Exec exec);

/// Stiffness matrix R^T R for the realization `points` (d x n).
/// Serial path forms the rigidity matrix and multiplies; the parallel path
/// assembles d x d blocks row-by-row, one vertex per iteration, with no
/// shared writes.
Eigen::MatrixXd assemble_stiffness(const Graph& g, const Eigen::MatrixXd& points,
                                   Exec exec);

/// Minimum over non-adjacent vertex pairs of the pairwise vertex-disjoint
/// path count. Returns n - 1 when every pair is adjacent.
int min_pairwise_vertex_cut(const Graph& g, Exec exec);

}  // namespace rigid::kernels
