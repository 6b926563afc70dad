#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace relbat;
using namespace testsupport;

namespace {

TEST(BatSuccessor, UpdatesAndOverflow) {
  EXPECT_EQ(seq_to_string(*bat_successor(seq_from_string("100"))), "101");
  EXPECT_EQ(seq_to_string(*bat_successor(seq_from_string("101"))), "110");
  EXPECT_FALSE(bat_successor(seq_from_string("111")).has_value());
}

TEST(BatSuccessor, VisitsAllVectorsInOrder) {
  StateVector x(5, 0);
  std::uint64_t expected = 0;
  while (true) {
    EXPECT_EQ(seq_value(x), expected);
    auto next = bat_successor(x);
    if (!next) break;
    x = *next;
    ++expected;
  }
  EXPECT_EQ(expected, 31u);
}

TEST(BruteForce, SingleEdgeAndFig5) {
  Network single = make_single_edge(0.37);
  SolveReport rep = brute_force_reliability(single, identity_labeling(single));
  EXPECT_NEAR(rep.reliability, 0.37, 1e-15);
  EXPECT_EQ(rep.counters.full_vectors_covered, 2u);

  Network fig5 = make_fig5();
  SolveReport r5 = brute_force_reliability(fig5, identity_labeling(fig5));
  EXPECT_NEAR(r5.reliability, 0.9078784, 1e-12);
  EXPECT_NEAR(r5.reliability + r5.u_mass, 1.0, 1e-12);
  EXPECT_EQ(r5.counters.full_vectors_covered, 128u);
  EXPECT_TRUE(r5.trace.empty());
}

TEST(BruteForce, CapEnforced) {
  Network fig5 = make_fig5();
  EXPECT_THROW(brute_force_reliability(fig5, identity_labeling(fig5), 5),
               InfeasibleError);
}

TEST(ClassicUndirected, Fig5Enumeration) {
  Network net = make_fig5();
  SolveReport rep = classic_bat_undirected(net, identity_labeling(net));
  EXPECT_NEAR(rep.reliability, 0.9078784, 1e-12);
  ASSERT_EQ(rep.trace.size(), 128u);
  EXPECT_EQ(rep.counters.prefixes_resolved, 128u);

  // spot checks against the enumeration table
  EXPECT_EQ(seq_to_string(rep.trace[0].bits), "0000000");
  EXPECT_EQ(rep.trace[0].status, PrefixStatus::Disconnected);
  EXPECT_NEAR(rep.trace[0].prob * 1e7, 128.0, 1e-6);

  EXPECT_EQ(seq_to_string(rep.trace[74].bits), "1001010");
  EXPECT_EQ(rep.trace[74].status, PrefixStatus::Connected);
  EXPECT_NEAR(rep.trace[74].prob * 1e7, 8192.0, 1e-6);
  EXPECT_EQ(rep.trace[74].first_index, 75u);

  EXPECT_EQ(seq_to_string(rep.trace[127].bits), "1111111");
  EXPECT_EQ(rep.trace[127].status, PrefixStatus::Connected);
  EXPECT_NEAR(rep.trace[127].prob * 1e7, 2097152.0, 1e-5);
}

// Independent recount of connected directed vectors by transitive closure,
// for pinning the connected count below.
std::size_t closure_connected_count(const DirectedNetwork& dnet) {
  const std::size_t ms = dnet.arc_count();
  const int n = dnet.node_count();
  std::size_t count = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << ms); ++v) {
    std::vector<std::vector<char>> reach(
        static_cast<std::size_t>(n) + 1,
        std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
      reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (std::size_t i = 0; i < ms; ++i)
      if ((v >> (ms - 1 - i)) & 1u)
        reach[static_cast<std::size_t>(dnet.arcs()[i].tail)]
             [static_cast<std::size_t>(dnet.arcs()[i].head)] = 1;
    for (int k = 1; k <= n; ++k)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] &&
              reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
            reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    if (reach[static_cast<std::size_t>(dnet.source())]
             [static_cast<std::size_t>(dnet.sink())])
      ++count;
  }
  return count;
}

TEST(ClassicDirected, Fig5Enumeration) {
  Network net = make_fig5();
  SolveReport rep = classic_bat_directed(net);
  EXPECT_EQ(rep.counters.full_vectors_covered, 1024u);
  ASSERT_EQ(rep.trace.size(), 1024u);

  std::size_t connected = 0;
  std::uint64_t first_connected = 0, last_disconnected = 0;
  for (const ResolvedPrefix& r : rep.trace) {
    if (r.status == PrefixStatus::Connected) {
      ++connected;
      if (first_connected == 0) first_connected = r.first_index;
    } else {
      last_disconnected = r.first_index;
    }
  }
  // 472 connected vectors, cross-checked by the closure recount; the bound
  // indices 265 and 1015 pin the same enumeration
  EXPECT_EQ(connected, closure_connected_count(directed_expansion(net)));
  EXPECT_EQ(connected, 472u);
  EXPECT_EQ(first_connected, 265u);
  EXPECT_EQ(last_disconnected, 1015u);
  EXPECT_EQ(seq_to_string(rep.x_fc), "0100001000");
  EXPECT_EQ(seq_to_string(rep.x_ld), "1111110110");
  EXPECT_NEAR(rep.reliability, 0.9078784, 1e-12);
}

TEST(ClassicDirected, SingleEdge) {
  SolveReport rep = classic_bat_directed(make_single_edge(0.37));
  EXPECT_EQ(rep.trace.size(), 2u);
  EXPECT_EQ(rep.x_fc, seq_from_string("1"));
  EXPECT_NEAR(rep.reliability, 0.37, 1e-15);
}

struct GoldenRow {
  const char* bits;
  char status;  // 'Y' connected, 'N' disconnected
  long long pr_e7;
  std::uint64_t i1;
  std::uint64_t i2;
};

// Hand-derived segmentation of the bounded run on the reference network:
// each row is the shortest determinate prefix at its position. Two-vector
// blocks at 73-74 and 91-92 resolve as single six-bit prefixes.
const GoldenRow kFig5Trace[] = {
    {"0101011", 'Y', 32768, 44, 44},   {"01011", 'Y', 204800, 45, 48},
    {"011", 'Y', 1280000, 49, 64},     {"1000", 'N', 64000, 65, 72},
    {"100100", 'N', 10240, 73, 74},    {"100101", 'Y', 40960, 75, 76},
    {"1001100", 'N', 8192, 77, 77},    {"1001101", 'Y', 32768, 78, 78},
    {"100111", 'Y', 163840, 79, 80},   {"1010000", 'N', 2048, 81, 81},
    {"1010001", 'Y', 8192, 82, 82},    {"1010010", 'N', 8192, 83, 83},
    {"1010011", 'Y', 32768, 84, 84},   {"1010100", 'N', 8192, 85, 85},
    {"1010101", 'Y', 32768, 86, 86},   {"101011", 'Y', 163840, 87, 88},
    {"1011000", 'N', 8192, 89, 89},    {"1011001", 'Y', 32768, 90, 90},
    {"101101", 'Y', 163840, 91, 92},   {"1011100", 'N', 32768, 93, 93},
    {"1011101", 'Y', 131072, 94, 94},  {"101111", 'Y', 655360, 95, 96},
    {"1100", 'N', 256000, 97, 104},    {"110100", 'N', 40960, 105, 106},
};

TEST(Bounded, Fig5GoldenTrace) {
  Network net = make_fig5();
  SolveReport rep = bounded_bat(net, identity_labeling(net));

  EXPECT_EQ(seq_to_string(rep.x_fc), "0101011");
  EXPECT_EQ(seq_to_string(rep.x_ld), "1101001");
  EXPECT_NEAR(rep.pre_mass, 0.0482432, 1e-12);
  EXPECT_NEAR(rep.post_mass, 0.610304, 1e-12);
  EXPECT_NEAR(rep.reliability, 0.9078784, 1e-12);
  EXPECT_NEAR(rep.u_mass, 0.0921216, 1e-12);

  ASSERT_EQ(rep.trace.size(), std::size(kFig5Trace));
  double running_u = rep.pre_mass;
  bool saw_first_checkpoint = false;
  for (std::size_t i = 0; i < rep.trace.size(); ++i) {
    const GoldenRow& want = kFig5Trace[i];
    const ResolvedPrefix& got = rep.trace[i];
    EXPECT_EQ(seq_to_string(got.bits), want.bits) << "row " << i + 1;
    EXPECT_EQ(got.status == PrefixStatus::Connected, want.status == 'Y')
        << "row " << i + 1;
    EXPECT_NEAR(got.prob * 1e7, static_cast<double>(want.pr_e7), 1e-5)
        << "row " << i + 1;
    EXPECT_EQ(got.first_index, want.i1) << "row " << i + 1;
    EXPECT_EQ(got.last_index, want.i2) << "row " << i + 1;
    if (got.status == PrefixStatus::Disconnected) {
      running_u += got.prob;
      if (std::fabs(running_u - 0.0546432) < 1e-12) saw_first_checkpoint = true;
    }
  }
  EXPECT_TRUE(saw_first_checkpoint) << "running U never hit 0.0546432";
  EXPECT_NEAR(running_u, rep.u_mass, 1e-15);
  EXPECT_EQ(rep.counters.prefixes_resolved, 24u);
  EXPECT_EQ(rep.counters.full_vectors_covered, 128u);
}

TEST(Bounded, ModesAgreeOnFig5) {
  Network net = make_fig5();
  Labeling lab = identity_labeling(net);
  SolveReport disc = bounded_bat(net, lab, SumMode::DisconnectedSum);
  SolveReport conn = bounded_bat(net, lab, SumMode::ConnectedSum);
  EXPECT_NEAR(disc.reliability, conn.reliability, 1e-12);
  ASSERT_EQ(disc.trace.size(), conn.trace.size());
  for (std::size_t i = 0; i < disc.trace.size(); ++i)
    EXPECT_EQ(disc.trace[i].bits, conn.trace[i].bits);
}

TEST(Bounded, PartitionOfUnityOnFig5) {
  Network net = make_fig5();
  SolveReport rep = bounded_bat(net, identity_labeling(net));
  double total = rep.pre_mass + rep.post_mass;
  for (const ResolvedPrefix& r : rep.trace) total += r.prob;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

// value(x_ld) < value(x_fc): the pre and post regions already tile the whole
// space, the loop never runs, and R comes from the closed forms alone.
TEST(Bounded, DegenerateSeriesPathHaltsBeforeResolving) {
  double p = 0.6;
  Network series = make_series_path(p);
  Labeling lab = identity_labeling(series);
  for (SumMode mode : {SumMode::DisconnectedSum, SumMode::ConnectedSum}) {
    SolveReport rep = bounded_bat(series, lab, mode);
    EXPECT_TRUE(rep.trace.empty());
    EXPECT_NEAR(rep.reliability, p * p, 1e-15);
    EXPECT_NEAR(rep.pre_mass, (1 - p) + p * (1 - p), 1e-15);
    EXPECT_NEAR(rep.pre_mass + rep.post_mass, 1.0, 1e-15);
    EXPECT_EQ(rep.counters.prefixes_resolved, 0u);
  }
}

TEST(Bounded, SingleEdgeIsDegenerate) {
  Network single = make_single_edge(0.37);
  SolveReport rep = bounded_bat(single, identity_labeling(single));
  EXPECT_TRUE(rep.trace.empty());
  EXPECT_NEAR(rep.reliability, 0.37, 1e-15);
}

TEST(Bounded, RejectsNetworksBeyondIndexRange) {
  // 64-bit vector indices cap the solvable coordinate count at 62
  Network big = gen_random_network(12, 63, 1, 0.5, 0.5);
  EXPECT_THROW(bounded_bat(big, identity_labeling(big)), InfeasibleError);
}

TEST(Engine, MethodsAgreeOnFig5) {
  Network net = make_fig5();
  Labeling lab = identity_labeling(net);
  double r_bound = bounded_bat(net, lab).reliability;
  double r_classic = classic_bat_undirected(net, lab).reliability;
  double r_directed = classic_bat_directed(net).reliability;
  double r_oracle = brute_force_reliability(net, lab).reliability;
  EXPECT_NEAR(r_bound, r_oracle, 1e-12);
  EXPECT_NEAR(r_classic, r_oracle, 1e-12);
  EXPECT_NEAR(r_directed, r_oracle, 1e-12);
}

TEST(GenRandomNetwork, DeterministicAndValid) {
  Network a = gen_random_network(6, 9, 42, 0.05, 0.95);
  Network b = gen_random_network(6, 9, 42, 0.05, 0.95);
  ASSERT_EQ(a.arc_count(), b.arc_count());
  for (std::size_t i = 0; i < a.arc_count(); ++i) {
    EXPECT_EQ(a.arc(i).u, b.arc(i).u);
    EXPECT_EQ(a.arc(i).v, b.arc(i).v);
    EXPECT_DOUBLE_EQ(a.arc(i).p, b.arc(i).p);
    EXPECT_GE(a.arc(i).p, 0.05);
    EXPECT_LE(a.arc(i).p, 0.95);
  }
  Network c = gen_random_network(6, 9, 43, 0.05, 0.95);
  bool same = true;
  for (std::size_t i = 0; i < a.arc_count() && same; ++i)
    same = a.arc(i).u == c.arc(i).u && a.arc(i).v == c.arc(i).v &&
           a.arc(i).p == c.arc(i).p;
  EXPECT_FALSE(same) << "different seeds should not collide here";
}

TEST(GenRandomNetwork, ShapesAndErrors) {
  Network single = gen_random_network(2, 1, 7, 0.5, 0.5);
  EXPECT_EQ(single.arc_count(), 1u);
  EXPECT_EQ(single.arc(0).u, 1);
  EXPECT_EQ(single.arc(0).v, 2);

  EXPECT_NO_THROW(gen_random_network(5, 7, 7, 0.05, 0.95));
  EXPECT_THROW(gen_random_network(3, 4, 0, 0.5, 0.5), InfeasibleError);
  EXPECT_THROW(gen_random_network(3, 1, 0, 0.5, 0.5), InfeasibleError);
  EXPECT_THROW(gen_random_network(1, 0, 0, 0.5, 0.5), InfeasibleError);
  EXPECT_THROW(gen_random_network(3, 3, 0, 0.6, 0.4), InfeasibleError);
}

TEST(ReportJson, StableFieldNames) {
  Network net = make_fig5();
  SolveReport rep = bounded_bat(net, identity_labeling(net));
  nlohmann::json j = report_to_json(rep);
  for (const char* key :
       {"method", "reliability", "u_mass", "x_fc", "x_ld", "pre_mass",
        "post_mass", "trace", "counters", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["method"], "bounded");
  EXPECT_EQ(j["x_fc"], "0101011");
  ASSERT_FALSE(j["trace"].empty());
  for (const char* key :
       {"bits", "status", "prob", "first_index", "last_index"})
    EXPECT_TRUE(j["trace"][0].contains(key)) << key;
  EXPECT_EQ(j["trace"][0]["status"], "connected");
  for (const char* key :
       {"full_vectors_covered", "prefixes_resolved", "connectivity_checks"})
    EXPECT_TRUE(j["counters"].contains(key)) << key;
}

}  // namespace
