#ifndef RELBAT_ENGINE_HPP
#define RELBAT_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "relbat/bits.hpp"
#include "relbat/bounds.hpp"
#include "relbat/graph.hpp"
#include "relbat/labeling.hpp"
#include "relbat/probability.hpp"

namespace relbat {

inline constexpr std::size_t kDefaultEnumCap = 24;

// Index arithmetic uses 64-bit vector values (index = value + 1).
inline constexpr std::size_t kMaxIndexableArcs = 62;

/// One resolved prefix: the block of full vectors extending `bits`, covering
/// 1-based vector indices first_index..last_index.
struct ResolvedPrefix {
  BitSeq bits;
  PrefixStatus status = PrefixStatus::Undetermined;
  double prob = 0.0;
  std::uint64_t first_index = 0;
  std::uint64_t last_index = 0;
};

struct SolveCounters {
  std::uint64_t full_vectors_covered = 0;
  std::uint64_t prefixes_resolved = 0;
  std::uint64_t connectivity_checks = 0;
};

struct SolveReport {
  std::string method;
  double reliability = 0.0;
  double u_mass = 0.0;  // disconnected mass
  BitSeq x_fc;          // bound vectors, when the method computes them
  BitSeq x_ld;
  double pre_mass = 0.0;
  double post_mass = 0.0;
  std::vector<ResolvedPrefix> trace;
  SolveCounters counters;
  double elapsed_ms = 0.0;
};

enum class SumMode { DisconnectedSum, ConnectedSum };

/// Successor in enumeration order: numeric value +1, last coordinate least
/// significant. Empty result on overflow (input was vector one).
inline std::optional<StateVector> bat_successor(const StateVector& x) {
  StateVector next = x;
  if (!seq_increment(next)) return std::nullopt;
  return next;
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline void require_cap(std::size_t bits, std::size_t cap, const char* what) {
  if (bits > cap)
    throw InfeasibleError(std::string(what) + " needs 2^" +
                          std::to_string(bits) +
                          " vectors, above the enumeration cap of 2^" +
                          std::to_string(cap) +
                          " (raise the cap to allow this)");
}

}  // namespace detail

/// Exhaustive reference sum over all 2^m state vectors. The verification
/// oracle for every other method.
inline SolveReport brute_force_reliability(const Network& net,
                                           const Labeling& lab,
                                           std::size_t cap = kDefaultEnumCap) {
  const std::size_t m = net.arc_count();
  detail::require_cap(m, std::min(cap, kMaxIndexableArcs), "oracle");
  detail::Stopwatch timer;
  SolveReport rep;
  rep.method = "oracle";
  const std::uint64_t total = std::uint64_t{1} << m;
  double conn = 0.0, disc = 0.0;
  ArcSubset up(m);
  for (std::uint64_t v = 0; v < total; ++v) {
    double prob = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      auto arc = static_cast<std::size_t>(lab.arc_at(i));
      bool bit = (v >> (m - 1 - i)) & 1u;
      if (bit)
        up.set(arc);
      else
        up.reset(arc);
      prob *= bit ? net.arc(arc).p : 1.0 - net.arc(arc).p;
    }
    ++rep.counters.connectivity_checks;
    if (st_connected(net, up))
      conn += prob;
    else
      disc += prob;
  }
  rep.reliability = conn;
  rep.u_mass = disc;
  rep.counters.full_vectors_covered = total;
  rep.counters.prefixes_resolved = total;
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

/// Classic enumeration over undirected state vectors, vector zero to vector
/// one. The trace lists every full vector.
inline SolveReport classic_bat_undirected(const Network& net,
                                          const Labeling& lab,
                                          std::size_t cap = kDefaultEnumCap) {
  const std::size_t m = net.arc_count();
  detail::require_cap(m, std::min(cap, kMaxIndexableArcs), "undirected enumeration");
  detail::Stopwatch timer;
  SolveReport rep;
  rep.method = "classic-undirected";
  StateVector x(m, 0);
  double conn = 0.0, disc = 0.0;
  std::uint64_t index = 1;
  ArcSubset up(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      auto arc = static_cast<std::size_t>(lab.arc_at(i));
      if (x[i])
        up.set(arc);
      else
        up.reset(arc);
    }
    ++rep.counters.connectivity_checks;
    bool ok = st_connected(net, up);
    double prob = vector_prob(net, lab, x);
    if (ok)
      conn += prob;
    else
      disc += prob;
    rep.trace.push_back({x,
                         ok ? PrefixStatus::Connected
                            : PrefixStatus::Disconnected,
                         prob, index, index});
    if (!seq_increment(x)) break;
    ++index;
  }
  rep.reliability = conn;
  rep.u_mass = disc;
  rep.counters.full_vectors_covered = std::uint64_t{1} << m;
  rep.counters.prefixes_resolved = rep.counters.full_vectors_covered;
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

/// Classic enumeration over the directed expansion. Coordinates follow the
/// expansion's (tail, head) arc order; both copies of an undirected arc
/// inherit its probability. Records the first connected and last
/// disconnected vectors in x_fc / x_ld.
inline SolveReport classic_bat_directed(const Network& net,
                                        std::size_t cap = kDefaultEnumCap) {
  DirectedNetwork dnet = directed_expansion(net);
  const std::size_t ms = dnet.arc_count();
  detail::require_cap(ms, std::min(cap, kMaxIndexableArcs), "directed enumeration");
  detail::Stopwatch timer;
  SolveReport rep;
  rep.method = "classic-directed";
  StateVector x(ms, 0);
  double conn = 0.0, disc = 0.0;
  std::uint64_t index = 1;
  ArcSubset up(ms);
  while (true) {
    double prob = 1.0;
    for (std::size_t i = 0; i < ms; ++i) {
      if (x[i])
        up.set(i);
      else
        up.reset(i);
      prob *= x[i] ? dnet.arcs()[i].p : 1.0 - dnet.arcs()[i].p;
    }
    ++rep.counters.connectivity_checks;
    bool ok = st_connected_directed(dnet, up);
    if (ok) {
      conn += prob;
      if (rep.x_fc.empty()) rep.x_fc = x;
    } else {
      disc += prob;
      rep.x_ld = x;
    }
    rep.trace.push_back({x,
                         ok ? PrefixStatus::Connected
                            : PrefixStatus::Disconnected,
                         prob, index, index});
    if (!seq_increment(x)) break;
    ++index;
  }
  rep.reliability = conn;
  rep.u_mass = disc;
  rep.counters.full_vectors_covered = std::uint64_t{1} << ms;
  rep.counters.prefixes_resolved = rep.counters.full_vectors_covered;
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

namespace detail {

// Prefix status over the first k coordinates of `bits` (zero-extended if k
// exceeds its length), counting connectivity traversals.
inline PrefixStatus prefix_status_counted(const Network& net,
                                          const Labeling& lab,
                                          const BitSeq& bits, std::size_t k,
                                          std::uint64_t& checks) {
  const std::size_t m = net.arc_count();
  ArcSubset up(m);
  for (std::size_t i = 0; i < k && i < bits.size(); ++i)
    if (bits[i]) up.set(static_cast<std::size_t>(lab.arc_at(i)));
  ++checks;
  if (st_connected(net, up)) return PrefixStatus::Connected;
  ArcSubset up_or_free = ArcSubset::all(m);
  for (std::size_t i = 0; i < k; ++i)
    if (i >= bits.size() || !bits[i])
      up_or_free.reset(static_cast<std::size_t>(lab.arc_at(i)));
  ++checks;
  if (!st_connected(net, up_or_free)) return PrefixStatus::Disconnected;
  return PrefixStatus::Undetermined;
}

}  // namespace detail

/// Bounded enumeration between the first connected and last disconnected
/// vectors. Skipped regions outside [X_FC, X_LD] are charged in closed form;
/// inside, each step resolves the shortest determinate prefix and jumps over
/// its whole block.
inline SolveReport bounded_bat(const Network& net, const Labeling& lab,
                               SumMode mode = SumMode::DisconnectedSum) {
  const std::size_t m = net.arc_count();
  if (m > kMaxIndexableArcs)
    throw InfeasibleError("bounded solve supports at most " +
                          std::to_string(kMaxIndexableArcs) + " arcs");
  detail::Stopwatch timer;
  SolveReport rep;
  rep.method = "bounded";
  rep.x_fc = find_first_connected(net, lab);
  rep.x_ld = find_last_disconnected(net, lab);
  rep.pre_mass = prob_skipped_before(net, lab, rep.x_fc);
  rep.post_mass = prob_skipped_after(net, lab, rep.x_ld);
  const std::uint64_t v_fc = seq_value(rep.x_fc);
  const std::uint64_t v_ld = seq_value(rep.x_ld);

  double conn = 0.0, disc = 0.0;
  if (v_fc <= v_ld) {
    // X_FC itself resolves first, at full length.
    double p_fc = vector_prob(net, lab, rep.x_fc);
    conn += p_fc;
    rep.trace.push_back(
        {rep.x_fc, PrefixStatus::Connected, p_fc, v_fc + 1, v_fc + 1});

    BitSeq cur = rep.x_fc;
    while (true) {
      auto carry = seq_increment(cur);
      if (!carry) break;  // ran past vector one; halt check already implied
      std::uint64_t value = seq_value(cur) << (m - cur.size());
      if (value > v_ld) break;
      // Coordinates below the carry position kept their bits and stayed
      // undetermined when the previous prefix was resolved, so the scan can
      // start at the carry. It also guarantees each block starts at `value`.
      for (std::size_t k = *carry; k <= m; ++k) {
        BitSeq prefix(cur.begin(),
                      cur.begin() + static_cast<std::ptrdiff_t>(
                                        std::min(k, cur.size())));
        prefix.resize(k, 0);
        PrefixStatus st = detail::prefix_status_counted(
            net, lab, prefix, k, rep.counters.connectivity_checks);
        if (st == PrefixStatus::Undetermined) continue;
        double prob = prefix_prob(net, lab, prefix);
        if (st == PrefixStatus::Connected)
          conn += prob;
        else
          disc += prob;
        std::uint64_t block = std::uint64_t{1} << (m - k);
        rep.trace.push_back({prefix, st, prob, value + 1, value + block});
        cur = std::move(prefix);
        break;
      }
    }
  }

  rep.u_mass = rep.pre_mass + disc;
  rep.reliability = mode == SumMode::DisconnectedSum
                        ? 1.0 - rep.u_mass
                        : conn + rep.post_mass;
  rep.counters.full_vectors_covered = std::uint64_t{1} << m;
  rep.counters.prefixes_resolved = rep.trace.size();
  rep.elapsed_ms = timer.elapsed_ms();
  return rep;
}

/// Deterministic random connected simple network: a random spanning tree plus
/// random extra edges, probabilities uniform in [p_lo, p_hi].
inline Network gen_random_network(int n, int m, std::uint64_t seed,
                                  double p_lo, double p_hi) {
  if (n < 2) throw InfeasibleError("generator needs at least 2 nodes");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges)
    throw InfeasibleError("arc count " + std::to_string(m) +
                          " infeasible for " + std::to_string(n) +
                          " nodes (need " + std::to_string(n - 1) + ".." +
                          std::to_string(max_edges) + ")");
  if (p_lo < 0.0 || p_hi > 1.0 || p_lo > p_hi)
    throw InfeasibleError("probability range must satisfy 0 <= lo <= hi <= 1");

  std::mt19937_64 rng(seed);
  auto bounded = [&](std::size_t k) {
    return static_cast<std::size_t>(rng() % k);
  };

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[bounded(i)]);

  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int a, int b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (std::size_t i = 1; i < perm.size(); ++i)
    add_edge(perm[i], perm[bounded(i)]);

  std::vector<std::pair<int, int>> spare;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (std::find(edges.begin(), edges.end(), std::pair{u, v}) == edges.end())
        spare.emplace_back(u, v);
  for (std::size_t i = spare.size(); i > 1; --i)
    std::swap(spare[i - 1], spare[bounded(i)]);
  for (std::size_t i = 0; edges.size() < static_cast<std::size_t>(m); ++i)
    edges.push_back(spare[i]);

  std::sort(edges.begin(), edges.end());
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (auto [u, v] : edges) {
    double unit = static_cast<double>(rng() >> 11) *
                  (1.0 / 9007199254740992.0);  // 53-bit mantissa
    arcs.push_back({u, v, p_lo + (p_hi - p_lo) * unit});
  }
  return Network(n, std::move(arcs));
}

}  // namespace relbat

#endif  // RELBAT_ENGINE_HPP
