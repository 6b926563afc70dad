#ifndef RELBAT_REPORT_JSON_HPP
#define RELBAT_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "relbat/engine.hpp"

namespace relbat {

inline const char* status_name(PrefixStatus st) {
  switch (st) {
    case PrefixStatus::Connected:
      return "connected";
    case PrefixStatus::Disconnected:
      return "disconnected";
    default:
      return "undetermined";
  }
}

// Stable machine-readable report. Field names are part of the interface.
inline nlohmann::json report_to_json(const SolveReport& rep) {
  nlohmann::json trace = nlohmann::json::array();
  for (const ResolvedPrefix& r : rep.trace) {
    trace.push_back({{"bits", seq_to_string(r.bits)},
                     {"status", status_name(r.status)},
                     {"prob", r.prob},
                     {"first_index", r.first_index},
                     {"last_index", r.last_index}});
  }
  return nlohmann::json{
      {"method", rep.method},
      {"reliability", rep.reliability},
      {"u_mass", rep.u_mass},
      {"x_fc", seq_to_string(rep.x_fc)},
      {"x_ld", seq_to_string(rep.x_ld)},
      {"pre_mass", rep.pre_mass},
      {"post_mass", rep.post_mass},
      {"trace", std::move(trace)},
      {"counters",
       {{"full_vectors_covered", rep.counters.full_vectors_covered},
        {"prefixes_resolved", rep.counters.prefixes_resolved},
        {"connectivity_checks", rep.counters.connectivity_checks}}},
      {"elapsed_ms", rep.elapsed_ms}};
}

}  // namespace relbat

#endif  // RELBAT_REPORT_JSON_HPP
