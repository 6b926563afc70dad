#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace relbat;
using namespace testsupport;

namespace {

void check_trace_tiling(const SolveReport& rep, std::size_t m) {
  std::uint64_t v_fc = seq_value(rep.x_fc);
  std::uint64_t v_ld = seq_value(rep.x_ld);
  if (v_ld < v_fc) {
    EXPECT_TRUE(rep.trace.empty());
    EXPECT_EQ(v_fc, v_ld + 1);  // regions stay adjacent in the degenerate case
    return;
  }
  std::uint64_t expect_next = v_fc + 1;
  for (const ResolvedPrefix& r : rep.trace) {
    EXPECT_EQ(r.first_index, expect_next);
    ASSERT_GE(r.last_index, r.first_index);
    EXPECT_EQ(r.last_index - r.first_index + 1,
              std::uint64_t{1} << (m - r.bits.size()));
    expect_next = r.last_index + 1;
  }
  EXPECT_EQ(expect_next, v_ld + 2);  // last block ends exactly at index(x_ld)
}

TEST(PropertySuite, BoundedMatchesOracleEverywhere) {
  for (const SuiteParams& sp : suite_params(60, 1000)) {
    Network net = gen_random_network(sp.n, sp.m, sp.seed, 0.05, 0.95);
    double reference = oracle_reliability(net);
    for (Labeling lab : {identity_labeling(net), label_arcs_mincut(net)}) {
      SolveReport disc = bounded_bat(net, lab, SumMode::DisconnectedSum);
      SolveReport conn = bounded_bat(net, lab, SumMode::ConnectedSum);
      EXPECT_NEAR(disc.reliability, reference, 1e-12) << "seed " << sp.seed;
      EXPECT_NEAR(conn.reliability, disc.reliability, 1e-12)
          << "seed " << sp.seed;

      double total = disc.pre_mass + disc.post_mass;
      for (const ResolvedPrefix& r : disc.trace) total += r.prob;
      EXPECT_NEAR(total, 1.0, 1e-12) << "seed " << sp.seed;

      check_trace_tiling(disc, net.arc_count());

      SolveReport oracle = brute_force_reliability(net, lab);
      EXPECT_NEAR(oracle.reliability, reference, 1e-12) << "seed " << sp.seed;
      EXPECT_LE(disc.counters.prefixes_resolved,
                oracle.counters.full_vectors_covered);
    }
  }
}

// Enumerating the directed expansion with independent per-copy states yields
// the same connected mass as the undirected enumeration.
TEST(PropertySuite, DirectedAndUndirectedMassesAgree) {
  int checked = 0;
  for (const SuiteParams& sp : suite_params(60, 9090)) {
    if (sp.m > 8) continue;
    Network net = gen_random_network(sp.n, sp.m, sp.seed, 0.05, 0.95);
    if (directed_expansion(net).arc_count() > 14) continue;
    ++checked;
    double undirected = classic_bat_undirected(net, identity_labeling(net)).reliability;
    double directed = classic_bat_directed(net).reliability;
    EXPECT_NEAR(directed, undirected, 1e-12) << "seed " << sp.seed;
  }
  EXPECT_GE(checked, 15);
}

TEST(PropertySuite, ClassicUndirectedMatchesOracle) {
  for (const SuiteParams& sp : suite_params(25, 7700)) {
    Network net = gen_random_network(sp.n, std::min(sp.m, 10), sp.seed, 0.05, 0.95);
    Labeling lab = label_arcs_mincut(net);
    double classic = classic_bat_undirected(net, lab).reliability;
    EXPECT_NEAR(classic, oracle_reliability(net), 1e-12) << "seed " << sp.seed;
  }
}

TEST(PropertySuite, DeterministicProbabilitiesAtTheEdges) {
  // p = 1 and p = 0 are legal arc probabilities
  Network sure = make_single_edge(1.0);
  EXPECT_DOUBLE_EQ(bounded_bat(sure, identity_labeling(sure)).reliability, 1.0);
  Network broken = make_single_edge(0.0);
  EXPECT_DOUBLE_EQ(bounded_bat(broken, identity_labeling(broken)).reliability,
                   0.0);

  Network mixed(3, {{1, 2, 1.0}, {1, 3, 0.0}, {2, 3, 0.5}});
  EXPECT_NEAR(bounded_bat(mixed, identity_labeling(mixed)).reliability, 0.5,
              1e-15);
  EXPECT_NEAR(oracle_reliability(mixed), 0.5, 1e-15);
}

}  // namespace
