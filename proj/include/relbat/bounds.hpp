#ifndef RELBAT_BOUNDS_HPP
#define RELBAT_BOUNDS_HPP

#include "relbat/bits.hpp"
#include "relbat/graph.hpp"
#include "relbat/labeling.hpp"
#include "relbat/probability.hpp"

namespace relbat {

/// First connected vector: the minimum-value connected state vector under the
/// labeling. Every vector of smaller value is disconnected.
///
/// Greedy construction: scan positions in label order, tentatively set each
/// bit to 0, and force it to 1 exactly when the down arcs so far plus the
/// current arc cut source from sink (no connected completion would exist).
inline StateVector find_first_connected(const Network& net,
                                        const Labeling& lab) {
  const std::size_t m = net.arc_count();
  StateVector x(m, 0);
  ArcSubset rest = ArcSubset::all(m);  // everything except DOWN and candidate
  for (std::size_t i = 0; i < m; ++i) {
    auto arc = static_cast<std::size_t>(lab.arc_at(i));
    rest.reset(arc);
    if (!st_connected(net, rest)) {
      x[i] = 1;
      rest.set(arc);
    }
  }
  return x;
}

/// Last disconnected vector: the maximum-value disconnected state vector.
/// Every vector of larger value is connected.
///
/// Greedy mirror image: tentatively set each bit to 1, force it to 0 exactly
/// when the up arcs so far plus the current arc contain a source-sink path
/// (no disconnected completion would exist).
inline StateVector find_last_disconnected(const Network& net,
                                          const Labeling& lab) {
  const std::size_t m = net.arc_count();
  StateVector x(m, 1);
  ArcSubset up(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto arc = static_cast<std::size_t>(lab.arc_at(i));
    up.set(arc);
    if (st_connected(net, up)) {
      x[i] = 0;
      up.reset(arc);
    }
  }
  return x;
}

// Exact mass of { X : value(X) < value(x_fc) } as a closed-form sum: for the
// i-th 1 at position f_i, the prefix x_fc(1:f_i-1)+[0] covers one disjoint
// block of skipped vectors.
inline double prob_skipped_before(const Network& net, const Labeling& lab,
                                  const StateVector& x_fc) {
  double sum = 0.0;
  Prefix s;
  for (std::size_t i = 0; i < x_fc.size(); ++i) {
    if (!x_fc[i]) continue;
    s.assign(x_fc.begin(), x_fc.begin() + static_cast<std::ptrdiff_t>(i));
    s.push_back(0);
    sum += prefix_prob(net, lab, s);
  }
  return sum;
}

// Exact mass of { X : value(X) > value(x_ld) }: blocks hang off each 0 of
// x_ld, with the position flipped to 1.
inline double prob_skipped_after(const Network& net, const Labeling& lab,
                                 const StateVector& x_ld) {
  double sum = 0.0;
  Prefix s;
  for (std::size_t i = 0; i < x_ld.size(); ++i) {
    if (x_ld[i]) continue;
    s.assign(x_ld.begin(), x_ld.begin() + static_cast<std::ptrdiff_t>(i));
    s.push_back(1);
    sum += prefix_prob(net, lab, s);
  }
  return sum;
}

}  // namespace relbat

#endif  // RELBAT_BOUNDS_HPP
