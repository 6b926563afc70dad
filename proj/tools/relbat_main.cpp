// relbat: exact two-terminal reliability of binary-state networks.
//
// Subcommands: solve, compare, bounds, label, trace, gen.
// Exit codes: 0 success, 1 cross-method disagreement, 2 parse error,
// 3 invalid network, 4 infeasible configuration.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relbat/relbat.hpp"

namespace {

using namespace relbat;

constexpr double kAgreementTol = 1e-12;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InfeasibleError("cannot write file: " + path);
  out << text;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("RELBAT_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0')
      throw InfeasibleError("RELBAT_CAP must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultEnumCap;
}

Network load_network(const std::string& path) {
  return parse_network(read_file(path));
}

Labeling load_labeling(const std::string& spec, const Network& net) {
  if (spec == "mincut") return label_arcs_mincut(net);
  if (spec == "identity") return identity_labeling(net);
  if (spec.rfind("file:", 0) == 0)
    return parse_labeling(read_file(spec.substr(5)), net);
  throw InfeasibleError("labeling must be mincut, identity, or file:PATH");
}

SumMode parse_mode(const std::string& mode) {
  if (mode == "disconnected-sum") return SumMode::DisconnectedSum;
  if (mode == "connected-sum") return SumMode::ConnectedSum;
  throw InfeasibleError("mode must be disconnected-sum or connected-sum");
}

void warn_if_large(const Network& net) {
  if (net.arc_count() > 30)
    std::cerr << "warning: " << net.arc_count()
              << " arcs; the bounded solve may still enumerate a large "
                 "vector range\n";
}

SolveReport run_method(const std::string& method, const Network& net,
                       const Labeling& lab, SumMode mode, std::size_t cap) {
  if (method == "bounded") {
    warn_if_large(net);
    return bounded_bat(net, lab, mode);
  }
  if (method == "classic-undirected") return classic_bat_undirected(net, lab, cap);
  if (method == "classic-directed") return classic_bat_directed(net, cap);
  if (method == "oracle") return brute_force_reliability(net, lab, cap);
  throw InfeasibleError("unknown method: " + method);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Pr x 10^7 column: exact integer when the scaled probability is integral,
// otherwise a plain float.
std::string pr_e7(double prob) {
  double v = prob * 1e7;
  double r = std::round(v);
  if (std::fabs(v - r) <= 1e-9 * std::max(1.0, std::fabs(v)))
    return std::to_string(static_cast<long long>(r));
  return fmt17(v);
}

int cmd_solve(const std::string& input, const std::string& labeling,
              const std::string& method, const std::string& mode,
              const std::string& output, bool timing) {
  Network net = load_network(input);
  Labeling lab = load_labeling(labeling, net);
  SolveReport rep = run_method(method, net, lab, parse_mode(mode),
                               enumeration_cap());
  if (!timing) rep.elapsed_ms = 0.0;
  write_output(output, report_to_json(rep).dump(2) + "\n");
  return 0;
}

int cmd_compare(const std::string& input, const std::string& labeling,
                const std::string& mode) {
  Network net = load_network(input);
  Labeling lab = load_labeling(labeling, net);
  const std::size_t cap = enumeration_cap();

  std::vector<SolveReport> reports;
  reports.push_back(bounded_bat(net, lab, parse_mode(mode)));
  if (net.arc_count() <= cap) {
    reports.push_back(classic_bat_undirected(net, lab, cap));
    reports.push_back(brute_force_reliability(net, lab, cap));
  }
  if (directed_expansion(net).arc_count() <= cap)
    reports.push_back(classic_bat_directed(net, cap));

  std::printf("%-20s %-22s %12s %12s\n", "method", "reliability", "resolved",
              "elapsed_ms");
  for (const SolveReport& r : reports)
    std::printf("%-20s %-22s %12llu %12.3f\n", r.method.c_str(),
                fmt17(r.reliability).c_str(),
                static_cast<unsigned long long>(r.counters.prefixes_resolved),
                r.elapsed_ms);

  double max_delta = 0.0;
  for (std::size_t i = 1; i < reports.size(); ++i)
    max_delta = std::max(max_delta, std::fabs(reports[i].reliability -
                                              reports[0].reliability));
  bool agree = max_delta <= kAgreementTol;
  std::printf("max |dR| = %s (tolerance %g): %s\n", fmt17(max_delta).c_str(),
              kAgreementTol, agree ? "agree" : "DISAGREE");
  return agree ? 0 : 1;
}

int cmd_bounds(const std::string& input, const std::string& labeling) {
  Network net = load_network(input);
  Labeling lab = load_labeling(labeling, net);
  StateVector x_fc = find_first_connected(net, lab);
  StateVector x_ld = find_last_disconnected(net, lab);
  std::printf("x_fc %s %llu\n", seq_to_string(x_fc).c_str(),
              static_cast<unsigned long long>(seq_value(x_fc)));
  std::printf("x_ld %s %llu\n", seq_to_string(x_ld).c_str(),
              static_cast<unsigned long long>(seq_value(x_ld)));
  std::printf("pre_mass %s\n",
              fmt17(prob_skipped_before(net, lab, x_fc)).c_str());
  std::printf("post_mass %s\n",
              fmt17(prob_skipped_after(net, lab, x_ld)).c_str());
  return 0;
}

int cmd_label(const std::string& input, const std::string& labeling,
              const std::string& output) {
  Network net = load_network(input);
  Labeling lab = load_labeling(labeling, net);
  write_output(output, labeling_to_text(net, lab));
  return 0;
}

int cmd_trace(const std::string& input, const std::string& labeling,
              const std::string& mode) {
  Network net = load_network(input);
  Labeling lab = load_labeling(labeling, net);
  SolveReport rep = bounded_bat(net, lab, parse_mode(mode));

  int bits_width = static_cast<int>(std::max<std::size_t>(net.arc_count(), 4));
  std::printf("%4s  %-*s %2s %12s %10s %10s\n", "i", bits_width, "bits", "C",
              "pr_e7", "i_1", "i_2");
  std::uint64_t v_fc = seq_value(rep.x_fc);
  std::uint64_t v_ld = seq_value(rep.x_ld);
  std::uint64_t total = std::uint64_t{1} << net.arc_count();
  std::printf("%4s  %-*s %2s %12s %10llu %10llu\n", "-", bits_width, "-", "N",
              pr_e7(rep.pre_mass).c_str(), 1ull,
              static_cast<unsigned long long>(v_fc));
  for (std::size_t i = 0; i < rep.trace.size(); ++i) {
    const ResolvedPrefix& r = rep.trace[i];
    std::printf("%4zu  %-*s %2s %12s %10llu %10llu\n", i + 1, bits_width,
                seq_to_string(r.bits).c_str(),
                r.status == PrefixStatus::Connected ? "Y" : "N",
                pr_e7(r.prob).c_str(),
                static_cast<unsigned long long>(r.first_index),
                static_cast<unsigned long long>(r.last_index));
  }
  std::printf("%4s  %-*s %2s %12s %10llu %10llu\n", "-", bits_width, "-", "Y",
              pr_e7(rep.post_mass).c_str(),
              static_cast<unsigned long long>(v_ld + 2),
              static_cast<unsigned long long>(total));
  return 0;
}

int cmd_gen(int nodes, int arcs, std::uint64_t seed, double p_lo, double p_hi,
            const std::string& output) {
  Network net = gen_random_network(nodes, arcs, seed, p_lo, p_hi);
  write_output(output, network_to_text(net));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-terminal reliability of binary-state networks"};
  app.require_subcommand(1);

  std::string input, output;
  std::string labeling = "mincut";
  std::string method = "bounded";
  std::string mode = "disconnected-sum";
  bool timing = false;
  int nodes = 0, arcs = 0;
  std::uint64_t seed = 0;
  double p_lo = 0.5, p_hi = 0.5;

  auto add_labeling = [&](CLI::App* cmd) {
    cmd->add_option("--labeling", labeling,
                    "Arc labeling: mincut, identity, or file:PATH");
  };

  CLI::App* solve = app.add_subcommand("solve", "Compute reliability, emit a JSON report");
  solve->add_option("input", input, "network file")->required();
  solve->add_option("--method", method,
                    "bounded, classic-undirected, classic-directed, oracle");
  add_labeling(solve);
  solve->add_option("--mode", mode, "disconnected-sum or connected-sum");
  solve->add_option("--output,-o", output, "write report here instead of stdout");
  solve->add_flag("--timing", timing, "report measured elapsed_ms");

  CLI::App* compare = app.add_subcommand("compare", "Run all methods within caps and check agreement");
  compare->add_option("input", input, "network file")->required();
  add_labeling(compare);
  compare->add_option("--mode", mode, "bounded accumulation mode");

  CLI::App* bounds = app.add_subcommand("bounds", "Print bound vectors and skipped masses");
  bounds->add_option("input", input, "network file")->required();
  add_labeling(bounds);

  CLI::App* label = app.add_subcommand("label", "Print the arc labeling");
  label->add_option("input", input, "network file")->required();
  add_labeling(label);
  label->add_option("--output,-o", output, "write labeling here");

  CLI::App* trace = app.add_subcommand("trace", "Print the resolved-prefix table of the bounded solve");
  trace->add_option("input", input, "network file")->required();
  add_labeling(trace);
  trace->add_option("--mode", mode, "bounded accumulation mode");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random connected network");
  gen->add_option("--nodes,-n", nodes, "node count")->required();
  gen->add_option("--arcs,-m", arcs, "arc count")->required();
  gen->add_option("--seed,-s", seed, "RNG seed");
  gen->add_option("--p-lo", p_lo, "probability range low end");
  gen->add_option("--p-hi", p_hi, "probability range high end");
  gen->add_option("--output,-o", output, "write network here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (solve->parsed())
      return cmd_solve(input, labeling, method, mode, output, timing);
    if (compare->parsed()) return cmd_compare(input, labeling, mode);
    if (bounds->parsed()) return cmd_bounds(input, labeling);
    if (label->parsed()) return cmd_label(input, labeling, output);
    if (trace->parsed()) return cmd_trace(input, labeling, mode);
    if (gen->parsed()) return cmd_gen(nodes, arcs, seed, p_lo, p_hi, output);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const NetworkError& e) {
    std::cerr << "invalid network: " << e.what() << "\n";
    return 3;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
