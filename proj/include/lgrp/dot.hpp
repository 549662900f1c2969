#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lgrp/lattice.hpp"
#include "lgrp/lsubset.hpp"

namespace lgrp::dot {

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

/// Hasse diagram: one node per element in declaration order, an edge a -> b
/// whenever b covers a.
inline std::string lattice_to_dot(const FiniteLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  for (const auto& name : l.names()) out << "  " << quote(name) << ";\n";
  for (const auto& [a, b] : l.covering_pairs_by_name()) out << "  " << quote(a) << " -> " << quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

/// Level subgroups mu_a for a in Im mu, with an edge a -> b when b sits
/// directly above a among the attained values.
inline std::string levels_to_dot(const LSubset& mu) {
  const auto& l = mu.lattice();
  const auto& g = mu.group();
  const auto image = image_set(mu);
  auto label = [&](Value a) {
    std::string s = l.name(a) + ": {";
    bool first = true;
    for (Element x : level_subset(mu, a)) {
      s += (first ? "" : ", ") + g.name(x);
      first = false;
    }
    return s + "}";
  };
  std::ostringstream out;
  out << "digraph levels {\n";
  for (Value a : image) out << "  " << quote(label(a)) << ";\n";
  for (Value a : image)
    for (Value b : image) {
      if (!l.lt(a, b)) continue;
      bool direct = true;
      for (Value c : image) direct = direct && !(l.lt(a, c) && l.lt(c, b));
      if (direct) out << "  " << quote(label(a)) << " -> " << quote(label(b)) << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace lgrp::dot
