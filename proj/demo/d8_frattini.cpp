// Maximal and Frattini L-subgroups of a D8 L-group over a five element chain.
#include <iostream>
#include <string>
#include <vector>

#include "lgrp/lgrp.hpp"

using namespace lgrp;

namespace {

void show(const std::string& label, const LSubset& mu) {
  std::cout << label << ":";
  for (Element x = 0; x < mu.size(); ++x) std::cout << " " << mu.group().name(x) << "=" << mu.lattice().name(mu(x));
  std::cout << "\n";
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

}  // namespace

int main() {
  auto g = make_group(builtin_group("D8"));
  auto l = make_lattice(FiniteLattice::chain({"0", "a", "b", "c", "1"}));
  const ElementSet center{0b101};          // e, r2
  const ElementSet klein{0b1010101};       // e, r2, s, sr2

  std::vector<Value> values(g->order());
  for (Element x = 0; x < g->order(); ++x)
    values[x] = x == g->identity() ? l->value("1")
                : center.contains(x) ? l->value("c")
                : klein.contains(x)  ? l->value("b")
                                     : l->value("a");
  const LSubset mu(g, l, values);
  show("mu", mu);

  const LSubgroupUniverse universe(mu);
  std::cout << "|L(mu)| = " << universe.members().size() << "\n";
  const auto report = frattini(universe);
  for (std::size_t i = 0; i < report.maximals.size(); ++i) {
    show("maximal " + std::to_string(i + 1), report.maximals[i]);
    std::cout << "  tip: " << to_string(tip_relation(report.maximals[i], mu)) << "\n";
  }
  show("phi", report.phi);
  show("lambda", report.lambda);

  const auto cmp = frattini_level_compare(universe, l->value("b"));
  std::cout << "level b: classical " << braces(g->names_of(cmp.classical)) << ", of phi "
            << braces(g->names_of(cmp.phi_level)) << "\n";

  std::cout << "\n" << dot::levels_to_dot(report.phi);
  return 0;
}
