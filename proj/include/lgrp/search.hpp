#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "lgrp/group.hpp"
#include "lgrp/lattice.hpp"

namespace lgrp::detail {

/// Depth-first search over maps nu: G -> L with nu(x) drawn from
/// candidates[x], visiting exactly those maps that satisfy
/// nu(xy) >= nu(x) ^ nu(y) and nu(x^-1) = nu(x). Elements are fixed one
/// inverse class at a time (identity first) and every product relation is
/// checked as soon as all three of its elements are fixed.
///
/// `visit` receives the complete value vector and returns false to stop.
template <typename Visit>
class LSubgroupSearch {
 public:
  LSubgroupSearch(const FiniteGroup& group, const FiniteLattice& lattice,
                  const std::vector<std::vector<Value>>& candidates, Visit& visit)
      : g_(group), l_(lattice), visit_(visit), values_(group.order()) {
    std::vector<bool> seen(g_.order(), false);
    auto add_class = [&](Element x) {
      if (seen[x]) return;
      const Element xi = g_.inverse(x);
      seen[x] = seen[xi] = true;
      Class c{x, xi, {}};
      for (Value v : candidates.at(x))
        if (xi == x || contains(candidates.at(xi), v)) c.options.push_back(v);
      classes_.push_back(std::move(c));
    };
    add_class(g_.identity());
    for (Element x = 0; x < g_.order(); ++x) add_class(x);
  }

  /// Returns false when the visitor stopped the search early.
  bool run() { return descend(0); }

 private:
  struct Class {
    Element rep;
    Element inv;
    std::vector<Value> options;
  };

  static bool contains(const std::vector<Value>& list, Value v) {
    for (Value w : list)
      if (w == v) return true;
    return false;
  }

  bool descend(std::size_t k) {
    if (k == classes_.size()) return visit_(std::span<const Value>(values_));
    const Class& c = classes_[k];
    for (Value v : c.options) {
      values_[c.rep] = v;
      values_[c.inv] = v;
      assigned_.insert(c.rep);
      assigned_.insert(c.inv);
      const bool ok = consistent(c.rep) && (c.inv == c.rep || consistent(c.inv));
      bool keep_going = true;
      if (ok) keep_going = descend(k + 1);
      assigned_.erase(c.rep);
      assigned_.erase(c.inv);
      if (!keep_going) return false;
    }
    return true;
  }

  bool consistent(Element z) const {
    const Value vz = values_[z];
    for (Element y : assigned_) {
      const Value vy = values_[y];
      const Value low = l_.meet(vz, vy);
      const Element zy = g_.mul(z, y);
      if (assigned_.contains(zy) && !l_.leq(low, values_[zy])) return false;
      const Element yz = g_.mul(y, z);
      if (assigned_.contains(yz) && !l_.leq(low, values_[yz])) return false;
      const Element w = g_.mul(g_.inverse(y), z);  // y * w = z
      if (assigned_.contains(w) && !l_.leq(l_.meet(vy, values_[w]), vz)) return false;
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteLattice& l_;
  Visit& visit_;
  std::vector<Value> values_;
  ElementSet assigned_;
  std::vector<Class> classes_;
};

template <typename Visit>
bool for_each_lsubgroup(const FiniteGroup& group, const FiniteLattice& lattice,
                        const std::vector<std::vector<Value>>& candidates, Visit&& visit) {
  LSubgroupSearch<std::remove_reference_t<Visit>> search(group, lattice, candidates, visit);
  return search.run();
}

/// Product of the candidate-list sizes, saturating at the max of uint64.
inline std::uint64_t candidate_count(const std::vector<std::vector<Value>>& candidates) {
  std::uint64_t total = 1;
  for (const auto& list : candidates) {
    const std::uint64_t k = list.size();
    if (k == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

}  // namespace lgrp::detail
