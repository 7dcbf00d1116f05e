#include "vertex_flow.hpp"

#include <queue>
#include <vector>

namespace rigid::detail {

namespace {

// Residual network over split vertices: node 2v is v_in, 2v+1 is v_out.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t, bool skip_direct_edge)
      : head_(2 * g.order(), -1) {
    const int big = g.order();
    for (int v = 0; v < g.order(); ++v) {
      add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    }
    for (const Edge& e : g.edges()) {
      const bool direct = (e.u == s && e.v == t) || (e.u == t && e.v == s);
      if (skip_direct_edge && direct) {
        continue;
      }
      add_arc(2 * e.u + 1, 2 * e.v, big);
      add_arc(2 * e.v + 1, 2 * e.u, big);
    }
  }

  // Pushes one unit along a shortest augmenting path; false if none exists.
  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> frontier;
    frontier.push(source);
    seen[source] = 1;
    while (!frontier.empty() && !seen[sink]) {
      const int x = frontier.front();
      frontier.pop();
      for (int a = head_[x]; a != -1; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          via[to_[a]] = a;
          frontier.push(to_[a]);
        }
      }
    }
    if (!seen[sink]) {
      return false;
    }
    for (int x = sink; x != source;) {
      const int a = via[x];
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
      x = to_[a ^ 1];
    }
    return true;
  }

 private:
  void add_arc(int from, int to, int cap) {
    push(from, to, cap);
    push(to, from, 0);
  }
  void push(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

}  // namespace

int vertex_disjoint_paths(const Graph& g, int s, int t, bool skip_direct_edge,
                          int limit) {
  SplitNetwork net(g, s, t, skip_direct_edge);
  int flow = 0;
  while ((limit < 0 || flow < limit) && net.augment(2 * s + 1, 2 * t)) {
    ++flow;
  }
  return flow;
}

}  // namespace rigid::detail
