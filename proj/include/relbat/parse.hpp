#ifndef RELBAT_PARSE_HPP
#define RELBAT_PARSE_HPP

#include <cctype>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relbat/graph.hpp"

namespace relbat {

namespace detail {

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

inline Network parse_network_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("nodes") || !j["nodes"].is_number_integer())
    throw ParseError("JSON field \"nodes\" missing or not an integer");
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw ParseError("JSON field \"arcs\" missing or not an array");
  int n = 0;
  std::vector<Arc> arcs;
  try {
    n = j["nodes"].get<int>();
    if (j.contains("source") && j["source"].get<int>() != 1)
      throw NetworkError("source must be node 1");
    if (j.contains("sink") && j["sink"].get<int>() != n)
      throw NetworkError("sink must be node n");
    for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
      const auto& ja = j["arcs"][i];
      if (!ja.is_object() || !ja.contains("u") || !ja.contains("v") ||
          !ja.contains("p"))
        throw ParseError("arc entry " + std::to_string(i + 1) +
                         " needs fields u, v, p");
      Arc a;
      a.u = ja["u"].get<int>();
      a.v = ja["v"].get<int>();
      a.p = ja["p"].get<double>();
      if (a.u > a.v) std::swap(a.u, a.v);
      arcs.push_back(a);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON field: ") + e.what());
  }
  return Network(n, std::move(arcs));
}

inline Network parse_network_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_data_line = [&](std::istringstream& ls) {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t i = 0;
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i == line.size() || line[i] == '#') continue;
      ls.clear();
      ls.str(line);
      return true;
    }
    return false;
  };

  std::istringstream ls;
  if (!next_data_line(ls)) throw ParseError("empty network file");
  int n = 0, m = 0, s = 0, t = 0;
  std::string extra;
  if (!(ls >> n >> m >> s >> t) || (ls >> extra))
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected header \"n m s t\"");
  if (m < 0) throw ParseError("line " + std::to_string(line_no) +
                              ": negative arc count");
  if (s != 1) throw NetworkError("source must be node 1");
  if (t != n) throw NetworkError("sink must be node n");

  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    if (!next_data_line(ls))
      throw ParseError("expected " + std::to_string(m) + " arc lines, found " +
                       std::to_string(i));
    Arc a;
    if (!(ls >> a.u >> a.v >> a.p) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected arc \"u v p\"");
    if (a.u > a.v) std::swap(a.u, a.v);
    arcs.push_back(a);
  }
  if (next_data_line(ls))
    throw ParseError("line " + std::to_string(line_no) +
                     ": trailing content after " + std::to_string(m) +
                     " arcs");
  return Network(n, std::move(arcs));
}

}  // namespace detail

/// Parse a network document. Text format: header "n m s t" (s must be 1, t
/// must be n), then m lines "u v p"; '#' starts a comment line. A document
/// whose first character is '{' is parsed as the JSON alternative.
inline Network parse_network(const std::string& text) {
  if (detail::looks_like_json(text)) return detail::parse_network_json(text);
  return detail::parse_network_text(text);
}

inline std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  return buf;
}

inline std::string network_to_text(const Network& net) {
  std::string out = std::to_string(net.node_count()) + " " +
                    std::to_string(net.arc_count()) + " 1 " +
                    std::to_string(net.sink()) + "\n";
  for (const Arc& a : net.arcs())
    out += std::to_string(a.u) + " " + std::to_string(a.v) + " " +
           format_probability(a.p) + "\n";
  return out;
}

}  // namespace relbat

#endif  // RELBAT_PARSE_HPP
