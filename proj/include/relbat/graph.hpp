#ifndef RELBAT_GRAPH_HPP
#define RELBAT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relbat/bits.hpp"

namespace relbat {

// Malformed input: unreadable file, bad token, wrong line shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid network: self-loop, parallel arc, bad range,
// disconnected graph.
class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request outside configured limits (enumeration cap, generator sizes,
// inconsistent options).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  int u = 0;  // 1-based, u < v
  int v = 0;
  double p = 0.0;  // probability the arc functions
};

// Subset of arc indices 0..m-1 as a packed bitmask.
class ArcSubset {
 public:
  ArcSubset() = default;
  explicit ArcSubset(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  static ArcSubset all(std::size_t universe) {
    ArcSubset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  void set(std::size_t i) {
    check(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    check(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    check(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

 private:
  void check(std::size_t i) const {
    if (i >= universe_) throw std::out_of_range("arc index out of range");
  }

  std::vector<std::uint64_t> words_;
  std::size_t universe_ = 0;
};

/// Undirected binary-state network. Source is node 1, sink is node n.
/// Immutable after construction; all queries are const.
class Network {
 public:
  Network(int node_count, std::vector<Arc> arcs)
      : node_count_(node_count), arcs_(std::move(arcs)) {
    validate();
    build_adjacency();
  }

  int node_count() const { return node_count_; }
  int source() const { return 1; }
  int sink() const { return node_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_.at(i); }

  // (neighbor, arc index) pairs, sorted ascending for deterministic BFS.
  const std::vector<std::pair<int, int>>& incident(int node) const {
    return adj_.at(static_cast<std::size_t>(node));
  }

 private:
  void validate() const {
    if (node_count_ < 2) throw NetworkError("network needs at least 2 nodes");
    std::vector<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (a.u == a.v)
        throw NetworkError("arc " + std::to_string(i + 1) + " is a self-loop");
      if (a.u < 1 || a.v < 1 || a.u > node_count_ || a.v > node_count_)
        throw NetworkError("arc " + std::to_string(i + 1) +
                           " references a node outside 1.." +
                           std::to_string(node_count_));
      if (a.u >= a.v)
        throw NetworkError("arc " + std::to_string(i + 1) +
                           " endpoints must satisfy u < v");
      if (a.p < 0.0 || a.p > 1.0)
        throw NetworkError("arc " + std::to_string(i + 1) +
                           " probability outside [0,1]");
      seen.emplace_back(a.u, a.v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw NetworkError("parallel arcs are not allowed");
    if (!whole_graph_connected())
      throw NetworkError("network is not connected");
  }

  bool whole_graph_connected() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count_) + 1);
    for (const Arc& a : arcs_) {
      adj[static_cast<std::size_t>(a.u)].push_back(a.v);
      adj[static_cast<std::size_t>(a.v)].push_back(a.u);
    }
    std::vector<char> vis(static_cast<std::size_t>(node_count_) + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)])
        if (!vis[static_cast<std::size_t>(y)]) {
          vis[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == node_count_;
  }

  void build_adjacency() {
    adj_.assign(static_cast<std::size_t>(node_count_) + 1, {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      adj_[static_cast<std::size_t>(arcs_[i].u)].emplace_back(arcs_[i].v,
                                                              static_cast<int>(i));
      adj_[static_cast<std::size_t>(arcs_[i].v)].emplace_back(arcs_[i].u,
                                                              static_cast<int>(i));
    }
    for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
  }

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// True iff source and sink lie in one component of the subgraph restricted
/// to arcs in `up`. Breadth-first, O(n + m).
inline bool st_connected(const Network& net, const ArcSubset& up) {
  if (net.source() == net.sink()) return true;
  std::vector<char> vis(static_cast<std::size_t>(net.node_count()) + 1, 0);
  std::vector<int> queue{net.source()};
  vis[static_cast<std::size_t>(net.source())] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (auto [y, arc] : net.incident(x)) {
      if (!up.test(static_cast<std::size_t>(arc))) continue;
      if (vis[static_cast<std::size_t>(y)]) continue;
      if (y == net.sink()) return true;
      vis[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  return false;
}

struct DirectedArc {
  int tail = 0;
  int head = 0;
  int source_arc = 0;  // index of the undirected arc this copy came from
  double p = 0.0;
};

/// Directed expansion of an undirected network: each arc is replaced by two
/// opposite directed copies, except that copies entering the source or
/// leaving the sink are dropped. Arcs are ordered by (tail, head).
class DirectedNetwork {
 public:
  DirectedNetwork(int node_count, int source, int sink,
                  std::vector<DirectedArc> arcs)
      : node_count_(node_count),
        source_(source),
        sink_(sink),
        arcs_(std::move(arcs)) {
    out_.assign(static_cast<std::size_t>(node_count_) + 1, {});
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      out_[static_cast<std::size_t>(arcs_[i].tail)].emplace_back(
          arcs_[i].head, static_cast<int>(i));
    for (auto& lst : out_) std::sort(lst.begin(), lst.end());
  }

  int node_count() const { return node_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<DirectedArc>& arcs() const { return arcs_; }
  const std::vector<std::pair<int, int>>& outgoing(int node) const {
    return out_.at(static_cast<std::size_t>(node));
  }

 private:
  int node_count_;
  int source_;
  int sink_;
  std::vector<DirectedArc> arcs_;
  std::vector<std::vector<std::pair<int, int>>> out_;
};

inline DirectedNetwork directed_expansion(const Network& net) {
  std::vector<DirectedArc> darcs;
  darcs.reserve(2 * net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arc(i);
    auto keep = [&](int tail, int head) {
      return tail != net.sink() && head != net.source();
    };
    if (keep(a.u, a.v))
      darcs.push_back({a.u, a.v, static_cast<int>(i), a.p});
    if (keep(a.v, a.u))
      darcs.push_back({a.v, a.u, static_cast<int>(i), a.p});
  }
  std::sort(darcs.begin(), darcs.end(), [](const DirectedArc& x, const DirectedArc& y) {
    return std::pair{x.tail, x.head} < std::pair{y.tail, y.head};
  });
  return DirectedNetwork(net.node_count(), net.source(), net.sink(),
                         std::move(darcs));
}

inline bool st_connected_directed(const DirectedNetwork& dnet,
                                  const ArcSubset& up) {
  if (dnet.source() == dnet.sink()) return true;
  std::vector<char> vis(static_cast<std::size_t>(dnet.node_count()) + 1, 0);
  std::vector<int> queue{dnet.source()};
  vis[static_cast<std::size_t>(dnet.source())] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (auto [y, arc] : dnet.outgoing(x)) {
      if (!up.test(static_cast<std::size_t>(arc))) continue;
      if (vis[static_cast<std::size_t>(y)]) continue;
      if (y == dnet.sink()) return true;
      vis[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  return false;
}

}  // namespace relbat

#endif  // RELBAT_GRAPH_HPP
