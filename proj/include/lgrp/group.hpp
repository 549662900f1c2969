#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"

namespace lgrp {

/// Index of a group element in its group's element list.
using Element = std::size_t;

inline constexpr std::size_t kMaxGroupOrder = 64;

/// A set of group elements stored as a 64-bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static ElementSet single(Element x) { return ElementSet(std::uint64_t{1} << x); }
  static ElementSet first_n(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(Element x) const noexcept { return (bits_ >> x) & 1U; }
  void insert(Element x) noexcept { bits_ |= std::uint64_t{1} << x; }
  void erase(Element x) noexcept { bits_ &= ~(std::uint64_t{1} << x); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool is_proper_subset_of(ElementSet other) const noexcept { return is_subset_of(other) && bits_ != other.bits_; }

  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend bool operator==(ElementSet, ElementSet) = default;

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// A finite group given by its Cayley table. Immutable once validated; the
/// full subgroup list is computed at construction.
class FiniteGroup {
 public:
  /// Validates a table given by element names. Row i, column j holds the
  /// product of elements i and j.
  static FiniteGroup validate(std::vector<std::string> elements,
                              const std::vector<std::vector<std::string>>& table) {
    if (elements.empty()) throw Error(ErrorKind::EmptyInput, "group has no elements");
    if (elements.size() > kMaxGroupOrder)
      throw Error(ErrorKind::GroupTooLarge, "groups are limited to " + std::to_string(kMaxGroupOrder) + " elements");
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (!index.emplace(elements[i], i).second)
        throw Error(ErrorKind::DuplicateElement, "duplicate group element '" + elements[i] + "'");
    const std::size_t n = elements.size();
    if (table.size() != n) throw Error(ErrorKind::NotClosed, "table must have one row per element");
    std::vector<std::vector<Element>> idx(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw Error(ErrorKind::NotClosed, "table row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(table[i][j]);
        if (it == index.end())
          throw Error(ErrorKind::NotClosed, "product '" + table[i][j] + "' is not a group element");
        idx[i][j] = it->second;
      }
    }
    return from_indices(std::move(elements), idx);
  }

  static FiniteGroup from_indices(std::vector<std::string> elements, const std::vector<std::vector<Element>>& table) {
    const std::size_t n = elements.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "group has no elements");
    if (n > kMaxGroupOrder)
      throw Error(ErrorKind::GroupTooLarge, "groups are limited to " + std::to_string(kMaxGroupOrder) + " elements");
    FiniteGroup g;
    g.names_ = std::move(elements);
    for (std::size_t i = 0; i < n; ++i)
      if (!g.index_.emplace(g.names_[i], i).second)
        throw Error(ErrorKind::DuplicateElement, "duplicate group element '" + g.names_[i] + "'");
    if (table.size() != n) throw Error(ErrorKind::NotClosed, "table must have one row per element");
    g.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw Error(ErrorKind::NotClosed, "table row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) throw Error(ErrorKind::NotClosed, "table entry out of range");
        g.table_[i * n + j] = static_cast<std::uint8_t>(table[i][j]);
      }
    }

    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
      if (ok) identity = e;
    }
    if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");
    g.identity_ = *identity;

    g.inverse_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      std::optional<Element> inv;
      for (Element y = 0; y < n && !inv; ++y)
        if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) inv = y;
      if (!inv) throw Error(ErrorKind::NoInverse, "'" + g.names_[x] + "' has no two-sided inverse");
      g.inverse_[x] = static_cast<std::uint8_t>(*inv);
    }

    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
            throw Error(ErrorKind::NotAssociative,
                        "(" + g.names_[x] + "*" + g.names_[y] + ")*" + g.names_[z] + " != " + g.names_[x] + "*(" +
                            g.names_[y] + "*" + g.names_[z] + ")");

    g.enumerate_subgroups();
    return g;
  }

  std::size_t order() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element x) const { return names_.at(x); }

  std::optional<Element> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element element(std::string_view name) const {
    if (auto x = find(name)) return *x;
    throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not a group element");
  }

  Element identity() const noexcept { return identity_; }
  Element mul(Element x, Element y) const { return table_[x * order() + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  /// g x g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverse(g)); }

  ElementSet all() const { return ElementSet::first_n(order()); }
  ElementSet trivial() const { return ElementSet::single(identity_); }

  bool contains_all(ElementSet s) const { return s.is_subset_of(all()); }

  bool is_subgroup(ElementSet s) const {
    if (!contains_all(s) || !s.contains(identity_)) return false;
    for (Element x : s) {
      if (!s.contains(inverse(x))) return false;
      for (Element y : s)
        if (!s.contains(mul(x, y))) return false;
    }
    return true;
  }

  /// All subgroups ordered by (size, mask).
  const std::vector<ElementSet>& subgroups() const noexcept { return subgroups_; }

  /// Smallest subgroup containing `s`; the closure of the empty set is {e}.
  /// Uses the precomputed subgroup list: the first superset in size order is
  /// the intersection of all of them.
  ElementSet closure(ElementSet s) const {
    for (ElementSet h : subgroups_)
      if (s.is_subset_of(h)) return h;
    throw Error(ErrorKind::UnknownElement, "set contains elements outside the group");
  }

  /// Closure by repeated multiplication, independent of the subgroup list.
  ElementSet closure_by_products(ElementSet s) const {
    if (!contains_all(s)) throw Error(ErrorKind::UnknownElement, "set contains elements outside the group");
    ElementSet acc = s | trivial();
    for (;;) {
      ElementSet next = acc;
      for (Element x : acc)
        for (Element y : acc) next.insert(mul(x, y));
      if (next == acc) return acc;
      acc = next;
    }
  }

  std::vector<std::string> names_of(ElementSet s) const {
    std::vector<std::string> out;
    for (Element x : s) out.push_back(names_[x]);
    return out;
  }

  ElementSet set_of(const std::vector<std::string>& names) const {
    ElementSet s;
    for (const auto& n : names) s.insert(element(n));
    return s;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  void enumerate_subgroups() {
    // Every subgroup is reached from {e} by adjoining one element at a time.
    std::vector<ElementSet> found{trivial()};
    for (std::size_t i = 0; i < found.size(); ++i) {
      const ElementSet h = found[i];
      for (Element g = 0; g < order(); ++g) {
        if (h.contains(g)) continue;
        ElementSet with = h;
        with.insert(g);
        const ElementSet k = closure_by_products(with);
        if (std::find(found.begin(), found.end(), k) == found.end()) found.push_back(k);
      }
    }
    std::sort(found.begin(), found.end(), [](ElementSet a, ElementSet b) {
      return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    subgroups_ = std::move(found);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inverse_;
  Element identity_ = 0;
  std::vector<ElementSet> subgroups_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

namespace detail {

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0 || n > kMaxGroupOrder) throw Error(ErrorKind::UnknownBuiltin, "cyclic order out of range");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_indices(std::move(names), t);
}

// Elements s^f r^k, listed e, r, r2, r3, s, sr, sr2, sr3.
inline FiniteGroup dihedral8() {
  std::vector<std::string> names{"e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"};
  auto code = [](int f, int k) { return static_cast<Element>(f * 4 + k); };
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int f1 = 0; f1 < 2; ++f1)
    for (int k1 = 0; k1 < 4; ++k1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int k2 = 0; k2 < 4; ++k2) {
          // r^k s = s r^-k
          const int k = ((f2 ? -k1 : k1) + k2 + 8) % 4;
          t[code(f1, k1)][code(f2, k2)] = code((f1 + f2) % 2, k);
        }
  return FiniteGroup::from_indices(std::move(names), t);
}

// Quaternion units with sign, listed 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion8() {
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit products: unit index 0=1, 1=i, 2=j, 3=k -> (sign, unit)
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto code = [](int sign, int unit) { return static_cast<Element>(unit * 2 + (sign < 0 ? 1 : 0)); };
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int u1 = 0; u1 < 4; ++u1)
    for (int s1 : {1, -1})
      for (int u2 = 0; u2 < 4; ++u2)
        for (int s2 : {1, -1}) {
          const auto [s, u] = units[u1][u2];
          t[code(s1, u1)][code(s2, u2)] = code(s * s1 * s2, u);
        }
  return FiniteGroup::from_indices(std::move(names), t);
}

inline FiniteGroup klein4() {
  std::vector<std::string> names{"e", "a", "b", "c"};
  std::vector<std::vector<Element>> t(4, std::vector<Element>(4));
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::from_indices(std::move(names), t);
}

}  // namespace detail

/// Named groups: Q8, D8, V4 and Cn (n >= 1), e.g. "C6".
inline FiniteGroup builtin_group(std::string_view name) {
  if (name == "Q8") return detail::quaternion8();
  if (name == "D8") return detail::dihedral8();
  if (name == "V4") return detail::klein4();
  if (name.size() >= 2 && name[0] == 'C') {
    std::size_t n = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw Error(ErrorKind::UnknownBuiltin, "unknown builtin group '" + std::string(name) + "'");
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > kMaxGroupOrder) break;
    }
    if (n >= 1 && n <= kMaxGroupOrder) return detail::cyclic_group(n);
  }
  throw Error(ErrorKind::UnknownBuiltin, "unknown builtin group '" + std::string(name) + "'");
}

/// Smallest subgroup of G containing s (the closure of the empty set is {e}).
inline ElementSet subgroup_closure(const FiniteGroup& g, ElementSet s) { return g.closure(s); }

inline std::vector<ElementSet> all_subgroups(const FiniteGroup& g) { return g.subgroups(); }

inline void require_subgroup(const FiniteGroup& g, ElementSet h) {
  if (!g.is_subgroup(h)) throw Error(ErrorKind::NotASubgroup, "set is not a subgroup");
}

/// Proper subgroups of H not contained in a larger proper subgroup of H.
inline std::vector<ElementSet> maximal_subgroups_of(const FiniteGroup& g, ElementSet h) {
  require_subgroup(g, h);
  std::vector<ElementSet> proper;
  for (ElementSet k : g.subgroups())
    if (k.is_proper_subset_of(h)) proper.push_back(k);
  std::vector<ElementSet> out;
  for (ElementSet k : proper) {
    const bool dominated = std::any_of(proper.begin(), proper.end(),
                                       [&](ElementSet other) { return k.is_proper_subset_of(other); });
    if (!dominated) out.push_back(k);
  }
  return out;
}

/// N is normal in H: h N h^-1 = N for all h in H.
inline bool is_normal_subgroup(const FiniteGroup& g, ElementSet n, ElementSet h) {
  require_subgroup(g, n);
  require_subgroup(g, h);
  if (!n.is_subset_of(h)) throw Error(ErrorKind::NotASubgroup, "N is not contained in H");
  for (Element y : h)
    for (Element x : n)
      if (!n.contains(g.conjugate(y, x))) return false;
  return true;
}

/// Intersection of the maximal subgroups of H; H itself when it has none.
inline ElementSet frattini_classical(const FiniteGroup& g, ElementSet h) {
  const auto maximals = maximal_subgroups_of(g, h);
  if (maximals.empty()) return h;
  ElementSet acc = h;
  for (ElementSet m : maximals) acc = acc & m;
  return acc;
}

}  // namespace lgrp
