#ifndef RELBAT_LABELING_HPP
#define RELBAT_LABELING_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "relbat/graph.hpp"
#include "relbat/mincut.hpp"

namespace relbat {

/// Assignment of coordinate positions to arcs: order[i] is the arc index
/// carrying label i+1. Always a permutation of 0..m-1.
struct Labeling {
  std::vector<int> order;

  std::size_t size() const { return order.size(); }
  int arc_at(std::size_t position) const { return order.at(position); }

  bool operator==(const Labeling& other) const { return order == other.order; }
};

inline Labeling identity_labeling(const Network& net) {
  Labeling lab;
  lab.order.resize(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i)
    lab.order[i] = static_cast<int>(i);
  return lab;
}

// Minimum-cuts-first labeling. Keeps a working multigraph; each round labels
// the unlabeled arcs of the canonical s-t min cut, then contracts the cut arc
// that received the highest label, until source and sink merge or every arc
// is labeled. Leftovers get labels in (min endpoint, max endpoint) order.
inline Labeling label_arcs_mincut(const Network& net) {
  const std::size_t m = net.arc_count();
  Multigraph g(net);
  std::vector<char> labeled(m, 0);
  Labeling lab;
  lab.order.reserve(m);

  auto endpoint_order = [&](int a, int b) {
    const Arc& x = net.arc(static_cast<std::size_t>(a));
    const Arc& y = net.arc(static_cast<std::size_t>(b));
    return std::pair{x.u, x.v} < std::pair{y.u, y.v};
  };

  while (lab.order.size() < m &&
         g.super_of(net.source()) != g.super_of(net.sink())) {
    std::vector<int> cut = g.min_st_cut(net.source(), net.sink());
    std::vector<int> fresh;
    for (int a : cut)
      if (!labeled[static_cast<std::size_t>(a)]) fresh.push_back(a);
    std::sort(fresh.begin(), fresh.end(), endpoint_order);
    for (int a : fresh) {
      labeled[static_cast<std::size_t>(a)] = 1;
      lab.order.push_back(a);
    }
    if (lab.order.size() == m) break;
    // contract the arc holding the highest label within this cut; with fresh
    // labels present that is the last freshly labeled arc
    int pick = fresh.empty() ? cut.back() : fresh.back();
    if (fresh.empty()) {
      // all cut arcs already labeled: take the one labeled latest
      int best_pos = -1;
      for (int a : cut) {
        auto it = std::find(lab.order.begin(), lab.order.end(), a);
        int pos = static_cast<int>(it - lab.order.begin());
        if (pos > best_pos) {
          best_pos = pos;
          pick = a;
        }
      }
    }
    g.contract(pick);
  }

  std::vector<int> leftovers;
  for (std::size_t i = 0; i < m; ++i)
    if (!labeled[i]) leftovers.push_back(static_cast<int>(i));
  std::sort(leftovers.begin(), leftovers.end(), endpoint_order);
  lab.order.insert(lab.order.end(), leftovers.begin(), leftovers.end());
  return lab;
}

// Labeling file: one arc per line as "u v", '#' starts a comment line.
inline Labeling parse_labeling(const std::string& text, const Network& net) {
  std::map<std::pair<int, int>, int> arc_index;
  for (std::size_t i = 0; i < net.arc_count(); ++i)
    arc_index[{net.arc(i).u, net.arc(i).v}] = static_cast<int>(i);

  Labeling lab;
  std::vector<char> used(net.arc_count(), 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int u = 0, v = 0;
    std::istringstream fs(first);
    std::string extra;
    if (!(fs >> u) || !(ls >> v) || (ls >> extra))
      throw ParseError("labeling line " + std::to_string(line_no) +
                       ": expected \"u v\"");
    if (u > v) std::swap(u, v);
    auto it = arc_index.find({u, v});
    if (it == arc_index.end())
      throw ParseError("labeling line " + std::to_string(line_no) + ": arc " +
                       std::to_string(u) + "-" + std::to_string(v) +
                       " is not in the network");
    if (used[static_cast<std::size_t>(it->second)])
      throw ParseError("labeling line " + std::to_string(line_no) + ": arc " +
                       std::to_string(u) + "-" + std::to_string(v) +
                       " listed twice");
    used[static_cast<std::size_t>(it->second)] = 1;
    lab.order.push_back(it->second);
  }
  if (lab.order.size() != net.arc_count())
    throw ParseError("labeling lists " + std::to_string(lab.order.size()) +
                     " arcs, network has " + std::to_string(net.arc_count()));
  return lab;
}

inline std::string labeling_to_text(const Network& net, const Labeling& lab) {
  std::string out;
  for (int a : lab.order) {
    const Arc& arc = net.arc(static_cast<std::size_t>(a));
    out += std::to_string(arc.u) + " " + std::to_string(arc.v) + "\n";
  }
  return out;
}

enum class PrefixStatus { Connected, Disconnected, Undetermined };

/// Two-sided verdict for a prefix under a labeling. Connected means the up
/// arcs already contain a source-sink path (every extension is connected);
/// Disconnected means the down arcs cut source from sink even with all later
/// arcs functioning (every extension is disconnected).
inline PrefixStatus prefix_status(const Network& net, const Labeling& lab,
                                  const Prefix& p) {
  const std::size_t m = net.arc_count();
  if (p.size() > m) throw std::invalid_argument("prefix longer than arc count");
  ArcSubset up(m);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i]) up.set(static_cast<std::size_t>(lab.arc_at(i)));
  if (st_connected(net, up)) return PrefixStatus::Connected;
  ArcSubset up_or_free = ArcSubset::all(m);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i]) up_or_free.reset(static_cast<std::size_t>(lab.arc_at(i)));
  if (!st_connected(net, up_or_free)) return PrefixStatus::Disconnected;
  return PrefixStatus::Undetermined;
}

}  // namespace relbat

#endif  // RELBAT_LABELING_HPP
