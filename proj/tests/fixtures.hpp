#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lgrp/lgrp.hpp"

namespace fixtures {

using namespace lgrp;

inline LatticePtr chain5() { return make_lattice(FiniteLattice::chain({"0", "a", "b", "c", "1"})); }

inline LSubset build(const GroupPtr& g, const LatticePtr& l, const std::function<std::string(const std::string&)>& f) {
  std::vector<Value> values;
  for (Element x = 0; x < g->order(); ++x) values.push_back(l->value(f(g->name(x))));
  return LSubset(g, l, std::move(values));
}

inline bool in(const std::string& x, std::initializer_list<const char*> set) {
  for (const char* s : set)
    if (x == s) return true;
  return false;
}

struct D8Chain {
  GroupPtr g = make_group(builtin_group("D8"));
  LatticePtr l = chain5();

  static bool center(const std::string& x) { return in(x, {"e", "r2"}); }
  static bool klein(const std::string& x) { return in(x, {"e", "r2", "s", "sr2"}); }

  LSubset mu() const {
    return build(g, l, [](const std::string& x) { return x == "e" ? "1" : center(x) ? "c" : klein(x) ? "b" : "a"; });
  }
  LSubset eta1() const {
    return build(g, l, [](const std::string& x) { return x == "e" ? "1" : klein(x) ? "b" : "a"; });
  }
  LSubset eta2() const {
    return build(g, l, [](const std::string& x) { return x == "e" ? "1" : center(x) ? "c" : "a"; });
  }
  LSubset eta3() const {
    return build(g, l, [](const std::string& x) { return x == "e" ? "1" : center(x) ? "c" : klein(x) ? "b" : "0"; });
  }
  LSubset eta4() const {
    return build(g, l, [](const std::string& x) { return center(x) ? "c" : klein(x) ? "b" : "a"; });
  }
  LSubset phi() const {
    return build(g, l, [](const std::string& x) { return x == "e" ? "c" : center(x) ? "b" : klein(x) ? "a" : "0"; });
  }
  LPoint point(const char* x, const char* a) const { return {g->element(x), l->value(a)}; }
};

struct Q8Chain {
  GroupPtr g = make_group(builtin_group("Q8"));
  LatticePtr l = chain5();

  static bool center(const std::string& x) { return in(x, {"1", "-1"}); }
  static bool h(const std::string& x) { return in(x, {"1", "-1", "i", "-i"}); }

  // maximal instance
  LSubset mu() const {
    return build(g, l, [](const std::string& x) { return center(x) ? "1" : h(x) ? "b" : "a"; });
  }
  LSubset eta() const {
    return build(g, l, [](const std::string& x) { return x == "1" ? "1" : center(x) ? "c" : h(x) ? "b" : "a"; });
  }

  // instance where the level pattern holds but eta is not maximal
  LSubset converse_mu() const {
    return build(g, l, [](const std::string& x) { return center(x) ? "1" : h(x) ? "c" : "a"; });
  }
  LSubset converse_eta() const {
    return build(g, l, [](const std::string& x) { return center(x) ? "1" : "a"; });
  }
  LSubset converse_theta() const {
    return build(g, l, [](const std::string& x) { return center(x) ? "1" : h(x) ? "b" : "a"; });
  }
};

}  // namespace fixtures
