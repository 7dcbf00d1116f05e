#include "rigid/graph.hpp"

#include "rigid/error.hpp"
#include "rigid/kernels.hpp"
#include "vertex_flow.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace rigid {

namespace {

std::string pair_text(const LabeledEdge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

int label_to_index(const Graph& g, int label, const char* what) {
  if (label < 1 || label > g.order()) {
    throw InvalidInput(std::string(what) + ": vertex " + std::to_string(label) +
                       " outside 1.." + std::to_string(g.order()));
  }
  return label - 1;
}

}  // namespace

Graph Graph::build(int n, std::span<const LabeledEdge> edges) {
  if (n < 1) {
    throw InvalidInput("graph order must be positive, got " + std::to_string(n));
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n) {
      throw InvalidInput("edge " + pair_text(e) + " has an endpoint outside 1.." +
                         std::to_string(n));
    }
    if (e.first == e.second) {
      throw InvalidInput("edge " + pair_text(e) + " is a loop");
    }
    normalized.push_back({std::min(e.first, e.second) - 1, std::max(e.first, e.second) - 1});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return Graph(n, std::move(normalized));
}

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n)) {
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }
}

bool Graph::adjacent(int a_index, int b_index) const {
  const auto& list = adjacency_[a_index];
  return std::binary_search(list.begin(), list.end(), b_index);
}

std::vector<LabeledEdge> Graph::labeled_edges() const {
  std::vector<LabeledEdge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    out.emplace_back(e.u + 1, e.v + 1);
  }
  return out;
}

SymmetricMatrix laplacian(const Graph& g) {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = -1;
    l(e.v, e.u) = -1;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
  }
  return SymmetricMatrix(std::move(l));
}

SymmetricMatrix adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return SymmetricMatrix(std::move(a));
}

std::vector<int> bfs_distances(const Graph& g, int source_index) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
  std::queue<int> frontier;
  dist[source_index] = 0;
  frontier.push(source_index);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, int i, int j) {
  const int a = label_to_index(g, i, "distance");
  const int b = label_to_index(g, j, "distance");
  return bfs_distances(g, a)[b];
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x == kUnreachable; });
}

int diameter(const Graph& g, Exec exec) {
  if (g.order() < 2) {
    throw InvalidInput("diameter: need at least 2 vertices");
  }
  if (!is_connected(g)) {
    throw PreconditionFailure("diameter: graph is disconnected (infinite diameter)");
  }
  const auto table = kernels::all_pairs_distances(g, exec);
  return *std::max_element(table.begin(), table.end());
}

int vertex_connectivity(const Graph& g, Exec exec) {
  if (g.order() < 2) {
    throw InvalidInput("vertex_connectivity: need at least 2 vertices");
  }
  if (!is_connected(g)) {
    return 0;
  }
  return kernels::min_pairwise_vertex_cut(g, exec);
}

int count_disjoint_paths(const Graph& g, int a, int b) {
  const int s = label_to_index(g, a, "count_disjoint_paths");
  const int t = label_to_index(g, b, "count_disjoint_paths");
  if (s == t) {
    throw InvalidInput("count_disjoint_paths: endpoints must differ, got " +
                       std::to_string(a) + " twice");
  }
  if (g.adjacent(s, t)) {
    return 1 + detail::vertex_disjoint_paths(g, s, t, /*skip_direct_edge=*/true);
  }
  return detail::vertex_disjoint_paths(g, s, t, /*skip_direct_edge=*/false);
}

}  // namespace rigid
