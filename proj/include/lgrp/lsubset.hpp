#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/group.hpp"
#include "lgrp/lattice.hpp"

namespace lgrp {

/// A total map from the elements of a finite group into a finite lattice.
class LSubset {
 public:
  LSubset(GroupPtr group, LatticePtr lattice, std::vector<Value> values)
      : group_(std::move(group)), lattice_(std::move(lattice)), values_(std::move(values)) {
    if (!group_ || !lattice_) throw Error(ErrorKind::MismatchedCarriers, "L-subset needs a group and a lattice");
    if (values_.size() != group_->order())
      throw Error(ErrorKind::CrossValidation, "L-subset must assign a value to every group element");
    for (Value v : values_)
      if (v.index >= lattice_->size()) throw Error(ErrorKind::UnknownElement, "L-subset value outside the lattice");
  }

  static LSubset constant(GroupPtr group, LatticePtr lattice, Value v) {
    const std::size_t n = group ? group->order() : 0;
    return LSubset(std::move(group), std::move(lattice), std::vector<Value>(n, v));
  }

  /// Characteristic function: top on `support`, bottom elsewhere.
  static LSubset characteristic(GroupPtr group, LatticePtr lattice, ElementSet support) {
    std::vector<Value> values(group->order(), lattice->bottom());
    for (Element x : support) values.at(x) = lattice->top();
    return LSubset(std::move(group), std::move(lattice), std::move(values));
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

  Value operator()(Element x) const { return values_.at(x); }
  std::span<const Value> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  LSubset with_value(Element x, Value v) const {
    auto values = values_;
    values.at(x) = v;
    return LSubset(group_, lattice_, std::move(values));
  }

  bool same_carriers(const LSubset& other) const {
    return (group_ == other.group_ || *group_ == *other.group_) &&
           (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
  }

  friend bool operator==(const LSubset& a, const LSubset& b) {
    return a.values_ == b.values_ && a.same_carriers(b);
  }

 private:
  GroupPtr group_;
  LatticePtr lattice_;
  std::vector<Value> values_;
};

/// Lexicographic order on value indices, element by element.
inline bool canonical_less(const LSubset& a, const LSubset& b) {
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end(),
                                      ValueIndexLess{});
}

inline void require_same_carriers(const LSubset& a, const LSubset& b) {
  if (!a.same_carriers(b)) throw Error(ErrorKind::MismatchedCarriers, "L-subsets live on different carriers");
}

/// The L-point (singleton) a_x: `height` at `point`, bottom elsewhere.
struct LPoint {
  Element point = 0;
  Value height{};

  friend bool operator==(const LPoint&, const LPoint&) = default;
};

inline LSubset to_lsubset(const LPoint& p, GroupPtr group, LatticePtr lattice) {
  std::vector<Value> values(group->order(), lattice->bottom());
  values.at(p.point) = p.height;
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

/// mu_a = {x : mu(x) >= a}
inline ElementSet level_subset(const LSubset& mu, Value a) {
  ElementSet out;
  const auto& lattice = mu.lattice();
  for (Element x = 0; x < mu.size(); ++x)
    if (lattice.leq(a, mu(x))) out.insert(x);
  return out;
}

inline Value tip(const LSubset& mu) { return mu.lattice().join_set(mu.values()); }
inline Value tail(const LSubset& mu) { return mu.lattice().meet_set(mu.values()); }

/// Attained values, in lattice declaration order.
inline std::vector<Value> image_set(const LSubset& mu) {
  std::vector<Value> out(mu.values().begin(), mu.values().end());
  std::sort(out.begin(), out.end(), ValueIndexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_constant(const LSubset& mu) {
  return std::adjacent_find(mu.values().begin(), mu.values().end(), [](Value a, Value b) { return a != b; }) ==
         mu.values().end();
}

/// `inner` is contained in `outer`: inner(x) <= outer(x) for every x.
inline bool contains(const LSubset& outer, const LSubset& inner) {
  require_same_carriers(outer, inner);
  const auto& lattice = outer.lattice();
  for (Element x = 0; x < outer.size(); ++x)
    if (!lattice.leq(inner(x), outer(x))) return false;
  return true;
}

inline bool properly_contains(const LSubset& outer, const LSubset& inner) {
  return contains(outer, inner) && !(outer == inner);
}

namespace detail {

template <typename Combine>
LSubset pointwise(std::span<const LSubset> family, Combine combine) {
  if (family.empty()) throw Error(ErrorKind::EmptySubset, "family of L-subsets must be non-empty");
  std::vector<Value> values(family.front().values().begin(), family.front().values().end());
  for (const auto& member : family.subspan(1)) {
    require_same_carriers(family.front(), member);
    for (std::size_t x = 0; x < values.size(); ++x) values[x] = combine(values[x], member(x));
  }
  return LSubset(family.front().group_ptr(), family.front().lattice_ptr(), std::move(values));
}

}  // namespace detail

/// Pointwise join of a non-empty family.
inline LSubset union_of(std::span<const LSubset> family) {
  if (family.empty()) throw Error(ErrorKind::EmptySubset, "family of L-subsets must be non-empty");
  const auto& lattice = family.front().lattice();
  return detail::pointwise(family, [&](Value a, Value b) { return lattice.join(a, b); });
}

/// Pointwise meet of a non-empty family.
inline LSubset intersection_of(std::span<const LSubset> family) {
  if (family.empty()) throw Error(ErrorKind::EmptySubset, "family of L-subsets must be non-empty");
  const auto& lattice = family.front().lattice();
  return detail::pointwise(family, [&](Value a, Value b) { return lattice.meet(a, b); });
}

inline LSubset join(const LSubset& a, const LSubset& b) {
  const LSubset pair[] = {a, b};
  return union_of(pair);
}

inline LSubset meet(const LSubset& a, const LSubset& b) {
  const LSubset pair[] = {a, b};
  return intersection_of(pair);
}

/// (mu o eta)(x) = join over x = yz of mu(y) meet eta(z).
inline LSubset set_product(const LSubset& mu, const LSubset& eta) {
  require_same_carriers(mu, eta);
  const auto& g = mu.group();
  const auto& lattice = mu.lattice();
  std::vector<Value> values(g.order(), lattice.bottom());
  for (Element y = 0; y < g.order(); ++y)
    for (Element z = 0; z < g.order(); ++z) {
      Value& slot = values[g.mul(y, z)];
      slot = lattice.join(slot, lattice.meet(mu(y), eta(z)));
    }
  return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(values));
}

/// eta union a_x: joins the height into eta at the point only.
inline LSubset adjoin_lpoint(const LSubset& eta, const LPoint& p) {
  if (p.point >= eta.size()) throw Error(ErrorKind::UnknownElement, "L-point outside the group");
  return eta.with_value(p.point, eta.lattice().join(eta(p.point), p.height));
}

/// a_x is an L-point of mu iff mu(x) >= a.
inline bool lpoint_in(const LPoint& p, const LSubset& mu) {
  if (p.point >= mu.size()) throw Error(ErrorKind::UnknownElement, "L-point outside the group");
  return mu.lattice().leq(p.height, mu(p.point));
}

}  // namespace lgrp
