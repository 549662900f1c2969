#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"

namespace lgrp {

/// Handle to an element of a FiniteLattice. Only equality is defined on the
/// handle itself; order queries go through the lattice.
struct Value {
  std::uint16_t index = 0;

  friend bool operator==(Value, Value) = default;
};

/// Orders values by their position in the lattice's element list. This is a
/// canonical order for sorting, unrelated to the lattice order.
struct ValueIndexLess {
  bool operator()(Value a, Value b) const noexcept { return a.index < b.index; }
};

/// A finite bounded lattice with materialized order, join and meet tables.
/// Immutable once constructed.
class FiniteLattice {
 public:
  using ElementPair = std::pair<std::string, std::string>;

  /// Builds a lattice from element names and generating pairs `left <= right`.
  /// The order is the reflexive-transitive closure of the pairs. Throws
  /// NotAPoset or NotALattice; non-distributive lattices are accepted and
  /// tagged (see is_distributive()).
  static FiniteLattice validate(std::vector<std::string> elements,
                                const std::vector<ElementPair>& declared_pairs) {
    if (elements.empty()) throw Error(ErrorKind::EmptyInput, "lattice has no elements");
    if (elements.size() > 255) throw Error(ErrorKind::NotALattice, "lattice too large (max 255 elements)");

    FiniteLattice lattice;
    lattice.names_ = std::move(elements);
    const std::size_t n = lattice.names_.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = lattice.index_.emplace(lattice.names_[i], static_cast<std::uint16_t>(i));
      if (!inserted) throw Error(ErrorKind::DuplicateElement, "duplicate lattice element '" + lattice.names_[i] + "'");
    }

    lattice.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) lattice.leq_[i * n + i] = 1;
    for (const auto& [lo, hi] : declared_pairs) {
      const Value a = lattice.value(lo);
      const Value b = lattice.value(hi);
      lattice.leq_[a.index * n + b.index] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lattice.leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (lattice.leq_[k * n + j]) lattice.leq_[i * n + j] = 1;

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (lattice.leq_[i * n + j] && lattice.leq_[j * n + i])
          throw Error(ErrorKind::NotAPoset, "'" + lattice.names_[i] + "' and '" + lattice.names_[j] +
                                                "' are mutually below each other");

    lattice.join_.assign(n * n, 0);
    lattice.meet_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const auto lub = lattice.extremal_bound(i, j, /*upper=*/true);
        const auto glb = lattice.extremal_bound(i, j, /*upper=*/false);
        if (!lub || !glb)
          throw Error(ErrorKind::NotALattice, "pair ('" + lattice.names_[i] + "', '" + lattice.names_[j] +
                                                  "') lacks a unique " + (lub ? "greatest lower" : "least upper") +
                                                  " bound");
        lattice.join_[i * n + j] = lattice.join_[j * n + i] = *lub;
        lattice.meet_[i * n + j] = lattice.meet_[j * n + i] = *glb;
      }
    }

    std::uint16_t top = 0;
    std::uint16_t bottom = 0;
    for (std::size_t i = 1; i < n; ++i) {
      top = lattice.join_[top * n + i];
      bottom = lattice.meet_[bottom * n + i];
    }
    lattice.top_ = Value{top};
    lattice.bottom_ = Value{bottom};

    lattice.distributive_ = true;
    lattice.chain_ = true;
    for (std::size_t a = 0; a < n && lattice.distributive_; ++a)
      for (std::size_t b = 0; b < n && lattice.distributive_; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const auto lhs = lattice.meet_[a * n + lattice.join_[b * n + c]];
          const auto rhs = lattice.join_[lattice.meet_[a * n + b] * n + lattice.meet_[a * n + c]];
          if (lhs != rhs) {
            lattice.distributive_ = false;
            break;
          }
        }
    for (std::size_t i = 0; i < n && lattice.chain_; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!lattice.leq_[i * n + j] && !lattice.leq_[j * n + i]) {
          lattice.chain_ = false;
          break;
        }
    return lattice;
  }

  /// Chain listed bottom to top.
  static FiniteLattice chain(std::vector<std::string> bottom_to_top) {
    std::vector<ElementPair> pairs;
    for (std::size_t i = 1; i < bottom_to_top.size(); ++i) pairs.emplace_back(bottom_to_top[i - 1], bottom_to_top[i]);
    return validate(std::move(bottom_to_top), pairs);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  const std::string& name(Value v) const {
    check(v);
    return names_[v.index];
  }

  std::optional<Value> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return Value{it->second};
  }

  Value value(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not a lattice element");
  }

  Value value_at(std::size_t index) const {
    if (index >= size()) throw Error(ErrorKind::UnknownElement, "lattice index out of range");
    return Value{static_cast<std::uint16_t>(index)};
  }

  /// All elements in declaration order.
  std::vector<Value> values() const {
    std::vector<Value> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Value{static_cast<std::uint16_t>(i)};
    return out;
  }

  Value top() const noexcept { return top_; }
  Value bottom() const noexcept { return bottom_; }

  bool leq(Value a, Value b) const {
    check(a);
    check(b);
    return leq_[a.index * size() + b.index] != 0;
  }
  bool lt(Value a, Value b) const { return a != b && leq(a, b); }
  bool comparable(Value a, Value b) const { return leq(a, b) || leq(b, a); }

  Value join(Value a, Value b) const {
    check(a);
    check(b);
    return Value{join_[a.index * size() + b.index]};
  }
  Value meet(Value a, Value b) const {
    check(a);
    check(b);
    return Value{meet_[a.index * size() + b.index]};
  }
  Value join(std::string_view a, std::string_view b) const { return join(value(a), value(b)); }
  Value meet(std::string_view a, std::string_view b) const { return meet(value(a), value(b)); }

  /// Join of a set; the empty join is bottom.
  Value join_set(std::span<const Value> s) const {
    Value acc = bottom_;
    for (Value v : s) acc = join(acc, v);
    return acc;
  }
  /// Meet of a set; the empty meet is top.
  Value meet_set(std::span<const Value> s) const {
    Value acc = top_;
    for (Value v : s) acc = meet(acc, v);
    return acc;
  }

  bool is_distributive() const noexcept { return distributive_; }
  bool is_chain() const noexcept { return chain_; }
  /// Every non-empty subset of a finite chain contains its supremum.
  bool is_upper_well_ordered() const noexcept { return chain_; }

  /// `b` covers `a`: a < b with nothing strictly between.
  bool is_cover(Value b, Value a) const {
    if (!lt(a, b)) return false;
    for (std::size_t c = 0; c < size(); ++c) {
      const Value mid{static_cast<std::uint16_t>(c)};
      if (lt(a, mid) && lt(mid, b)) return false;
    }
    return true;
  }

  std::vector<Value> covers_of(Value a) const {
    std::vector<Value> out;
    for (Value b : values())
      if (is_cover(b, a)) out.push_back(b);
    return out;
  }

  /// Covering pairs (a, b) with b covering a, ordered by (a, b) index.
  std::vector<std::pair<Value, Value>> covering_pairs() const {
    std::vector<std::pair<Value, Value>> out;
    for (Value a : values())
      for (Value b : covers_of(a)) out.emplace_back(a, b);
    return out;
  }

  /// {x : x <= a}, in declaration order.
  std::vector<Value> down_set(Value a) const {
    std::vector<Value> out;
    for (Value x : values())
      if (leq(x, a)) out.push_back(x);
    return out;
  }
  /// {x : x >= a}, in declaration order.
  std::vector<Value> up_set(Value a) const {
    std::vector<Value> out;
    for (Value x : values())
      if (leq(a, x)) out.push_back(x);
    return out;
  }

  /// A supstar subset is a non-empty X in which every non-empty subset A
  /// contains its own supremum (sup A is an element of A). For finite X this
  /// holds iff join(x, y) is x or y for every pair, i.e. X is a chain.
  bool is_supstar_subset(std::span<const Value> subset) const {
    if (subset.empty()) throw Error(ErrorKind::EmptySubset, "supstar test needs a non-empty subset");
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        const Value sup = join(subset[i], subset[j]);
        if (sup != subset[i] && sup != subset[j]) return false;
      }
    return true;
  }

  /// Declared pairs reproducing this lattice (its covering pairs, by name).
  std::vector<ElementPair> covering_pairs_by_name() const {
    std::vector<ElementPair> out;
    for (auto [a, b] : covering_pairs()) out.emplace_back(names_[a.index], names_[b.index]);
    return out;
  }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.names_ == y.names_ && x.leq_ == y.leq_;
  }

 private:
  FiniteLattice() = default;

  void check(Value v) const {
    if (v.index >= names_.size()) throw Error(ErrorKind::UnknownElement, "lattice value out of range");
  }

  std::optional<std::uint16_t> extremal_bound(std::size_t i, std::size_t j, bool upper) const {
    const std::size_t n = size();
    auto related = [&](std::size_t lo, std::size_t hi) { return leq_[lo * n + hi] != 0; };
    std::vector<std::size_t> bounds;
    for (std::size_t k = 0; k < n; ++k) {
      const bool ok = upper ? (related(i, k) && related(j, k)) : (related(k, i) && related(k, j));
      if (ok) bounds.push_back(k);
    }
    for (std::size_t cand : bounds) {
      const bool extremal = std::all_of(bounds.begin(), bounds.end(), [&](std::size_t other) {
        return upper ? related(cand, other) : related(other, cand);
      });
      if (extremal) return static_cast<std::uint16_t>(cand);
    }
    return std::nullopt;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint16_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  Value top_{};
  Value bottom_{};
  bool distributive_ = false;
  bool chain_ = false;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr make_lattice(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

/// Operations on L-subgroups only accept distributive lattices.
inline void require_distributive(const FiniteLattice& lattice) {
  if (!lattice.is_distributive())
    throw Error(ErrorKind::NonDistributiveLattice, "operation requires a distributive lattice");
}

/// Chain of n elements named 0, a, b, ..., 1 (bottom to top). A 1-element
/// chain is {0}; chains longer than 28 fall back to numbered names.
inline FiniteLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyInput, "chain needs at least one element");
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) names.emplace_back("0");
    else if (i + 1 == n) names.emplace_back("1");
    else if (n <= 28) names.emplace_back(1, static_cast<char>('a' + (i - 1)));
    else names.emplace_back("t" + std::to_string(i));
  }
  return FiniteLattice::chain(std::move(names));
}

/// Product of two chains of lengths m and n, elements named "i.j".
inline FiniteLattice product_of_chains(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::EmptyInput, "chain factors must be non-empty");
  std::vector<std::string> names;
  std::vector<FiniteLattice::ElementPair> pairs;
  auto label = [](std::size_t i, std::size_t j) { return std::to_string(i) + "." + std::to_string(j); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      names.push_back(label(i, j));
      if (i + 1 < m) pairs.emplace_back(label(i, j), label(i + 1, j));
      if (j + 1 < n) pairs.emplace_back(label(i, j), label(i, j + 1));
    }
  return FiniteLattice::validate(std::move(names), pairs);
}

/// Divisors of n ordered by divisibility.
inline FiniteLattice divisor_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyInput, "divisor lattice needs n >= 1");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<std::string> names;
  std::vector<FiniteLattice::ElementPair> pairs;
  for (std::size_t a : divisors) {
    names.push_back(std::to_string(a));
    for (std::size_t b : divisors)
      if (a != b && b % a == 0) pairs.emplace_back(std::to_string(a), std::to_string(b));
  }
  return FiniteLattice::validate(std::move(names), pairs);
}

}  // namespace lgrp
