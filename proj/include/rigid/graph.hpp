#pragma once

#include "rigid/exec.hpp"
#include "rigid/spectral.hpp"

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace rigid {

// Distance between vertices in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Internal edge record: 0-based vertex indices with u < v.
struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using LabeledEdge = std::pair<int, int>;

/// Finite undirected simple graph on vertices labeled 1..n.
///
/// Immutable after construction. Edges are kept in lexicographic order, which
/// fixes the row order of rigidity matrices. Functions in this library that
/// take vertex arguments use the 1-based labels; `Edge` and `neighbors()` use
/// 0-based indices.
class Graph {
 public:
  /// Validates and normalizes a labeled edge list: pairs become (min, max),
  /// duplicates collapse. Throws InvalidInput naming the offending pair on a
  /// loop or an out-of-range endpoint, and on n < 1.
  static Graph build(int n, std::span<const LabeledEdge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int index) const { return adjacency_[index]; }
  int degree(int index) const { return static_cast<int>(adjacency_[index].size()); }
  bool adjacent(int a_index, int b_index) const;

  std::vector<LabeledEdge> labeled_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

inline Graph build_graph(int n, std::span<const LabeledEdge> edges) {
  return Graph::build(n, edges);
}
inline Graph build_graph(int n, std::initializer_list<LabeledEdge> edges) {
  return Graph::build(n, std::span<const LabeledEdge>(edges.begin(), edges.size()));
}

SymmetricMatrix laplacian(const Graph& g);
SymmetricMatrix adjacency(const Graph& g);

/// BFS distances from a 0-based source index; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, int source_index);

/// Shortest-path length between 1-based labels i and j, or kUnreachable.
int distance(const Graph& g, int i, int j);

bool is_connected(const Graph& g);

/// Largest pairwise distance. Throws PreconditionFailure ("infinite diameter")
/// when g is disconnected, InvalidInput when n < 2.
int diameter(const Graph& g, Exec exec = Exec::parallel);

/// kappa(G): minimum over non-adjacent pairs of the number of internally
/// vertex-disjoint paths. n - 1 for complete graphs, 0 when disconnected.
int vertex_connectivity(const Graph& g, Exec exec = Exec::parallel);

/// Maximum number of internally vertex-disjoint paths between 1-based labels
/// a and b. A direct edge a-b counts as one path.
int count_disjoint_paths(const Graph& g, int a, int b);

}  // namespace rigid
