#ifndef RELBAT_MINCUT_HPP
#define RELBAT_MINCUT_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "relbat/graph.hpp"

namespace relbat {

// Working multigraph for the labeling pipeline. Nodes are merged into super
// nodes by contraction; arcs keep their original indices. Parallel arcs stay,
// self-loops are kept but excluded from cuts.
class Multigraph {
 public:
  explicit Multigraph(const Network& net)
      : parent_(static_cast<std::size_t>(net.node_count()) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
    ends_.reserve(net.arc_count());
    for (const Arc& a : net.arcs()) ends_.emplace_back(a.u, a.v);
  }

  // Representative (smallest original node id) of the super node holding
  // `node`.
  int super_of(int node) const {
    auto id = static_cast<std::size_t>(node);
    while (parent_[id] != static_cast<int>(id))
      id = static_cast<std::size_t>(parent_[id]);
    return static_cast<int>(id);
  }

  int live_node_count() const {
    int count = 0;
    for (std::size_t i = 1; i < parent_.size(); ++i)
      if (parent_[i] == static_cast<int>(i)) ++count;
    return count;
  }

  std::pair<int, int> arc_endpoints(int arc) const {
    auto [u, v] = ends_.at(static_cast<std::size_t>(arc));
    return {super_of(u), super_of(v)};
  }

  bool is_self_loop(int arc) const {
    auto [u, v] = arc_endpoints(arc);
    return u == v;
  }

  // Merge the endpoints of `arc`. The smaller representative survives.
  void contract(int arc) {
    auto [u, v] = arc_endpoints(arc);
    if (u == v) return;
    if (u > v) std::swap(u, v);
    parent_[static_cast<std::size_t>(v)] = u;
  }

  // Canonical minimum s-t cut by unit-capacity augmenting paths: the arcs
  // crossing the set of super nodes reachable from s in the final residual
  // graph. Arc indices ascending. Deterministic for a fixed graph state.
  std::vector<int> min_st_cut(int s, int t) const {
    s = super_of(s);
    t = super_of(t);
    if (s == t)
      throw std::invalid_argument("min_st_cut: s and t are the same super node");

    struct Edge {
      int arc;
      int a;
      int b;
      int flow = 0;  // -1, 0, +1 relative to a -> b
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      auto [a, b] = arc_endpoints(static_cast<int>(i));
      if (a == b) continue;
      edges.push_back({static_cast<int>(i), a, b, 0});
    }

    // adjacency: node -> (neighbor, edge index), sorted for determinism
    std::vector<std::vector<std::pair<int, int>>> adj(parent_.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[static_cast<std::size_t>(edges[e].a)].emplace_back(edges[e].b,
                                                             static_cast<int>(e));
      adj[static_cast<std::size_t>(edges[e].b)].emplace_back(edges[e].a,
                                                             static_cast<int>(e));
    }
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());

    auto residual = [&](const Edge& e, int from) {
      return from == e.a ? 1 - e.flow : 1 + e.flow;
    };

    std::vector<int> parent_edge(parent_.size());
    std::vector<int> parent_node(parent_.size());
    std::vector<char> vis(parent_.size());
    auto bfs_reach = [&](bool stop_at_t) {
      std::fill(vis.begin(), vis.end(), 0);
      std::vector<int> queue{s};
      vis[static_cast<std::size_t>(s)] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        if (stop_at_t && x == t) return true;
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
          if (vis[static_cast<std::size_t>(y)]) continue;
          if (residual(edges[static_cast<std::size_t>(e)], x) <= 0) continue;
          vis[static_cast<std::size_t>(y)] = 1;
          parent_edge[static_cast<std::size_t>(y)] = e;
          parent_node[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
      return vis[static_cast<std::size_t>(t)] != 0;
    };

    while (bfs_reach(true)) {
      for (int x = t; x != s; x = parent_node[static_cast<std::size_t>(x)]) {
        Edge& e = edges[static_cast<std::size_t>(
            parent_edge[static_cast<std::size_t>(x)])];
        e.flow += parent_node[static_cast<std::size_t>(x)] == e.a ? 1 : -1;
      }
    }

    bfs_reach(false);  // final residual reachability from s
    std::vector<int> cut;
    for (const Edge& e : edges) {
      bool ra = vis[static_cast<std::size_t>(e.a)] != 0;
      bool rb = vis[static_cast<std::size_t>(e.b)] != 0;
      if (ra != rb) cut.push_back(e.arc);
    }
    std::sort(cut.begin(), cut.end());
    return cut;
  }

 private:
  std::vector<int> parent_;                  // union-find, path to smaller id
  std::vector<std::pair<int, int>> ends_;    // original endpoints per arc
};

}  // namespace relbat

#endif  // RELBAT_MINCUT_HPP
