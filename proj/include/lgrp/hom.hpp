#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/group.hpp"
#include "lgrp/lsubset.hpp"

namespace lgrp {

/// A validated homomorphism between finite groups.
class GroupHom {
 public:
  /// `map[x]` is the image of source element x. Throws NotAHomomorphism.
  static GroupHom validate(GroupPtr source, GroupPtr target, std::vector<Element> map) {
    if (!source || !target) throw Error(ErrorKind::NotAHomomorphism, "missing source or target group");
    if (map.size() != source->order()) throw Error(ErrorKind::NotAHomomorphism, "map must be total on the source");
    for (Element y : map)
      if (y >= target->order()) throw Error(ErrorKind::NotAHomomorphism, "image outside the target group");
    for (Element x = 0; x < source->order(); ++x)
      for (Element y = 0; y < source->order(); ++y)
        if (map[source->mul(x, y)] != target->mul(map[x], map[y]))
          throw Error(ErrorKind::NotAHomomorphism, "f(" + source->name(x) + "*" + source->name(y) +
                                                       ") != f(" + source->name(x) + ")f(" + source->name(y) + ")");
    GroupHom f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.map_ = std::move(map);
    ElementSet image;
    for (Element y : f.map_) image.insert(y);
    f.surjective_ = image.size() == f.target_->order();
    f.injective_ = image.size() == f.source_->order();
    return f;
  }

  /// Extends an assignment on generators multiplicatively. The generators
  /// must generate the source; the extension is then validated.
  static GroupHom from_generators(GroupPtr source, GroupPtr target,
                                  const std::vector<std::pair<Element, Element>>& generators) {
    const std::size_t n = source->order();
    constexpr Element unset = std::numeric_limits<Element>::max();
    std::vector<Element> map(n, unset);
    map[source->identity()] = target->identity();
    for (bool grew = true; grew;) {
      grew = false;
      for (Element x = 0; x < n; ++x) {
        if (map[x] == unset) continue;
        for (auto [gen, image] : generators) {
          const Element xy = source->mul(x, gen);
          const Element fxy = target->mul(map[x], image);
          if (map[xy] == unset) {
            map[xy] = fxy;
            grew = true;
          } else if (map[xy] != fxy) {
            throw Error(ErrorKind::NotAHomomorphism, "generator images violate a relation at " + source->name(xy));
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x)
      if (map[x] == unset) throw Error(ErrorKind::NotAHomomorphism, "given elements do not generate the source");
    return validate(std::move(source), std::move(target), std::move(map));
  }

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& source_ptr() const noexcept { return source_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  Element operator()(Element x) const { return map_.at(x); }
  const std::vector<Element>& map() const noexcept { return map_; }
  bool injective() const noexcept { return injective_; }
  bool surjective() const noexcept { return surjective_; }
  bool is_isomorphism() const noexcept { return injective_ && surjective_; }

 private:
  GroupHom() = default;

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> map_;
  bool injective_ = false;
  bool surjective_ = false;
};

inline GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Element> map(g->order());
  for (Element x = 0; x < map.size(); ++x) map[x] = x;
  return GroupHom::validate(g, g, std::move(map));
}

/// x -> g x g^-1
inline GroupHom inner_automorphism(const GroupPtr& group, Element g) {
  std::vector<Element> map(group->order());
  for (Element x = 0; x < map.size(); ++x) map[x] = group->conjugate(g, x);
  return GroupHom::validate(group, group, std::move(map));
}

inline void require_isomorphism(const GroupHom& f) {
  if (!f.is_isomorphism()) throw Error(ErrorKind::NotAnIsomorphism, "homomorphism is not bijective");
}

/// f(mu)(y) = join of mu(x) over the fibre f^-1(y); bottom on empty fibres.
inline LSubset pushforward(const GroupHom& f, const LSubset& mu) {
  if (!(mu.group_ptr() == f.source_ptr() || mu.group() == f.source()))
    throw Error(ErrorKind::MismatchedCarriers, "L-subset is not on the source group");
  const auto& lattice = mu.lattice();
  std::vector<Value> values(f.target().order(), lattice.bottom());
  for (Element x = 0; x < mu.size(); ++x) values[f(x)] = lattice.join(values[f(x)], mu(x));
  return LSubset(f.target_ptr(), mu.lattice_ptr(), std::move(values));
}

/// f^-1(nu)(x) = nu(f(x)).
inline LSubset pullback(const GroupHom& f, const LSubset& nu) {
  if (!(nu.group_ptr() == f.target_ptr() || nu.group() == f.target()))
    throw Error(ErrorKind::MismatchedCarriers, "L-subset is not on the target group");
  std::vector<Value> values(f.source().order());
  for (Element x = 0; x < values.size(); ++x) values[x] = nu(f(x));
  return LSubset(f.source_ptr(), nu.lattice_ptr(), std::move(values));
}

}  // namespace lgrp
