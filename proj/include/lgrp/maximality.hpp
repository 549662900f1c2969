#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/hom.hpp"
#include "lgrp/lsubgroup.hpp"
#include "lgrp/lsubset.hpp"
#include "lgrp/search.hpp"

namespace lgrp {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Size of the raw search space for L-subgroups of mu: the product over
/// group elements of |{a : a <= mu(x)}|.
inline std::uint64_t candidate_space(const LSubset& mu) {
  std::vector<std::vector<Value>> candidates(mu.size());
  for (Element x = 0; x < mu.size(); ++x) candidates[x] = mu.lattice().down_set(mu(x));
  return detail::candidate_count(candidates);
}

/// All L-subgroups nu of G with nu contained in mu, in canonical order.
/// With `only_proper`, constants and mu itself are dropped.
inline std::vector<LSubset> enumerate_lsubgroups(const LSubset& mu, bool only_proper,
                                                 std::uint64_t budget = kDefaultBudget) {
  const auto& l = mu.lattice();
  const auto& g = mu.group();
  require_distributive(l);
  std::vector<std::vector<Value>> candidates(g.order());
  for (Element x = 0; x < g.order(); ++x) candidates[x] = l.down_set(mu(x));
  const std::uint64_t space = detail::candidate_count(candidates);
  if (space > budget)
    throw Error(ErrorKind::InstanceTooLarge,
                std::to_string(space) + " candidates exceed the budget of " + std::to_string(budget));

  std::vector<LSubset> out;
  detail::for_each_lsubgroup(g, l, candidates, [&](std::span<const Value> nu) {
    LSubset candidate(mu.group_ptr(), mu.lattice_ptr(), std::vector<Value>(nu.begin(), nu.end()));
    if (!only_proper || (!is_constant(candidate) && !(candidate == mu))) out.push_back(std::move(candidate));
    return true;
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// mu together with the complete list L(mu) of its L-subgroups. Built once
/// and shared by the maximality and Frattini computations.
class LSubgroupUniverse {
 public:
  explicit LSubgroupUniverse(LSubset mu, std::uint64_t budget = kDefaultBudget) : mu_(std::move(mu)) {
    if (!is_lsubgroup(mu_)) throw Error(ErrorKind::NotAnLSubgroup, "parent must be an L-subgroup of G");
    members_ = enumerate_lsubgroups(mu_, /*only_proper=*/false, budget);
  }

  const LSubset& parent() const noexcept { return mu_; }
  const std::vector<LSubset>& members() const noexcept { return members_; }

  bool is_member(const LSubset& eta) const {
    return std::binary_search(members_.begin(), members_.end(), eta, canonical_less) && eta.same_carriers(mu_);
  }

 private:
  LSubset mu_;
  std::vector<LSubset> members_;
};

enum class MaximalityStrategy { Definition, LPoint, Both };

enum class MaximalityReason {
  Maximal,
  NotProper,
  IntermediateExists,      // Definition: some theta sits strictly between
  LPointDoesNotGenerate,   // LPoint: <eta, a_x> != mu for some a_x in mu \ eta
};

inline const char* to_string(MaximalityReason r) {
  switch (r) {
    case MaximalityReason::Maximal: return "Maximal";
    case MaximalityReason::NotProper: return "NotProper";
    case MaximalityReason::IntermediateExists: return "IntermediateExists";
    case MaximalityReason::LPointDoesNotGenerate: return "LPointDoesNotGenerate";
  }
  return "Unknown";
}

/// Result of a maximality test. False verdicts carry a witness: the first
/// intermediate theta (Definition) and/or the first failing L-point (LPoint).
struct MaximalityVerdict {
  bool maximal = false;
  MaximalityReason reason = MaximalityReason::NotProper;
  std::optional<LSubset> between;
  std::optional<LPoint> point;
};

namespace detail {

inline MaximalityVerdict maximal_by_definition(const LSubset& eta, const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  for (const LSubset& theta : universe.members()) {
    if (theta == eta || theta == mu) continue;
    if (contains(theta, eta) && contains(mu, theta))
      return {false, MaximalityReason::IntermediateExists, theta, std::nullopt};
  }
  return {true, MaximalityReason::Maximal, std::nullopt, std::nullopt};
}

// The L-points tested are a_x with a <= mu(x) and a not <= eta(x).
inline MaximalityVerdict maximal_by_lpoints(const LSubset& eta, const LSubset& mu) {
  const auto& l = mu.lattice();
  for (Element x = 0; x < mu.size(); ++x)
    for (Value a : l.down_set(mu(x))) {
      if (l.leq(a, eta(x))) continue;
      const LPoint p{x, a};
      if (!(generate_with(eta, p) == mu)) return {false, MaximalityReason::LPointDoesNotGenerate, std::nullopt, p};
    }
  return {true, MaximalityReason::Maximal, std::nullopt, std::nullopt};
}

inline MaximalityVerdict combine(MaximalityVerdict by_definition, MaximalityVerdict by_points) {
  if (by_definition.maximal != by_points.maximal)
    throw std::logic_error("definition and L-point maximality tests disagree");
  by_definition.point = by_points.point;
  return by_definition;
}

}  // namespace detail

/// Maximality of eta in the parent of `universe`.
inline MaximalityVerdict is_maximal(const LSubset& eta, const LSubgroupUniverse& universe,
                                    MaximalityStrategy strategy = MaximalityStrategy::Both) {
  const LSubset& mu = universe.parent();
  if (!is_proper(eta, mu)) return {};
  switch (strategy) {
    case MaximalityStrategy::Definition: return detail::maximal_by_definition(eta, universe);
    case MaximalityStrategy::LPoint: return detail::maximal_by_lpoints(eta, mu);
    case MaximalityStrategy::Both:
      return detail::combine(detail::maximal_by_definition(eta, universe), detail::maximal_by_lpoints(eta, mu));
  }
  return {};
}

/// Maximality of eta in mu. The Definition strategy enumerates L(mu) and can
/// throw InstanceTooLarge; the LPoint strategy never enumerates.
inline MaximalityVerdict is_maximal(const LSubset& eta, const LSubset& mu,
                                    MaximalityStrategy strategy = MaximalityStrategy::Both,
                                    std::uint64_t budget = kDefaultBudget) {
  require_same_carriers(eta, mu);
  if (!is_proper(eta, mu)) return {};
  if (strategy == MaximalityStrategy::LPoint) return detail::maximal_by_lpoints(eta, mu);
  return is_maximal(eta, LSubgroupUniverse(mu, budget), strategy);
}

/// Every maximal L-subgroup of the parent, in canonical order.
inline std::vector<LSubset> maximal_lsubgroups(const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  const auto& members = universe.members();
  std::vector<LSubset> out;
  for (const LSubset& eta : members) {
    if (is_constant(eta) || eta == mu) continue;
    const bool blocked = std::any_of(members.begin(), members.end(), [&](const LSubset& theta) {
      return !(theta == eta) && !(theta == mu) && contains(theta, eta);
    });
    if (!blocked) out.push_back(eta);
  }
  return out;
}

inline std::vector<LSubset> maximal_lsubgroups(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return maximal_lsubgroups(LSubgroupUniverse(mu, budget));
}

enum class TipRelation { Equal, MuCoversEta, Violation };

inline const char* to_string(TipRelation r) {
  switch (r) {
    case TipRelation::Equal: return "Equal";
    case TipRelation::MuCoversEta: return "MuCoversEta";
    case TipRelation::Violation: return "Violation";
  }
  return "Unknown";
}

/// For a maximal eta, either eta(e) = mu(e) or mu(e) covers eta(e).
inline TipRelation tip_relation(const LSubset& eta, const LSubset& mu) {
  if (!is_maximal(eta, mu, MaximalityStrategy::LPoint).maximal)
    throw Error(ErrorKind::NotMaximal, "tip relation needs a maximal L-subgroup");
  const auto& l = mu.lattice();
  const Element e = mu.group().identity();
  if (eta(e) == mu(e)) return TipRelation::Equal;
  if (l.is_cover(mu(e), eta(e))) return TipRelation::MuCoversEta;
  return TipRelation::Violation;
}

enum class LevelRelation {
  Equal,
  ProperSubgroup,          // eta_a strictly inside mu_a (eta_a may be empty)
  ProperMaximalSubgroup,   // eta_a is a maximal subgroup of mu_a
};

inline const char* to_string(LevelRelation r) {
  switch (r) {
    case LevelRelation::Equal: return "Equal";
    case LevelRelation::ProperSubgroup: return "ProperSubgroup";
    case LevelRelation::ProperMaximalSubgroup: return "ProperMaximalSubgroup";
  }
  return "Unknown";
}

struct LevelEntry {
  Value level;
  LevelRelation relation;
  ElementSet eta_level;
  ElementSet mu_level;
};

/// eta_a versus mu_a for every a in Im mu union Im eta.
struct LevelProfile {
  std::vector<LevelEntry> witness_levels;
  std::optional<Value> unique_defect_level;

  std::size_t defect_count() const {
    return static_cast<std::size_t>(std::count_if(witness_levels.begin(), witness_levels.end(),
                                                  [](const LevelEntry& e) { return e.relation != LevelRelation::Equal; }));
  }
};

namespace detail {

inline LevelRelation relate_levels(const FiniteGroup& g, ElementSet eta_level, ElementSet mu_level) {
  if (eta_level == mu_level) return LevelRelation::Equal;
  if (!eta_level.empty() && g.is_subgroup(eta_level) && g.is_subgroup(mu_level)) {
    const auto maximals = maximal_subgroups_of(g, mu_level);
    if (std::find(maximals.begin(), maximals.end(), eta_level) != maximals.end())
      return LevelRelation::ProperMaximalSubgroup;
  }
  return LevelRelation::ProperSubgroup;
}

}  // namespace detail

inline LevelProfile level_profile(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  auto levels = image_set(mu);
  for (Value v : image_set(eta)) levels.push_back(v);
  std::sort(levels.begin(), levels.end(), ValueIndexLess{});
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  LevelProfile profile;
  for (Value a : levels) {
    const ElementSet el = level_subset(eta, a);
    const ElementSet ml = level_subset(mu, a);
    profile.witness_levels.push_back({a, detail::relate_levels(mu.group(), el, ml), el, ml});
  }
  if (profile.defect_count() == 1)
    for (const auto& entry : profile.witness_levels)
      if (entry.relation != LevelRelation::Equal) profile.unique_defect_level = entry.level;
  return profile;
}

/// Sufficient condition for maximality: eta(e) = mu(e) and, over every
/// a <= mu(e), exactly one level a0 has eta_a0 maximal in mu_a0 while every
/// other level agrees. A false result says nothing.
inline bool sufficient_maximal_check(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  const auto& l = mu.lattice();
  const Element e = mu.group().identity();
  if (eta(e) != mu(e)) return false;
  std::size_t maximal_defects = 0;
  for (Value a : l.down_set(mu(e))) {
    const ElementSet el = level_subset(eta, a);
    const ElementSet ml = level_subset(mu, a);
    if (el == ml) continue;
    if (detail::relate_levels(mu.group(), el, ml) != LevelRelation::ProperMaximalSubgroup) return false;
    ++maximal_defects;
  }
  return maximal_defects == 1;
}

struct TransportResult {
  LSubset image;
  LSubset image_parent;
  bool maximal = false;
};

/// Pushes a maximal eta of mu along an isomorphism f and rechecks maximality
/// of f(eta) in f(mu).
inline TransportResult transport_maximal(const GroupHom& f, const LSubset& eta, const LSubset& mu) {
  require_isomorphism(f);
  LSubset image = pushforward(f, eta);
  LSubset parent = pushforward(f, mu);
  const bool maximal = is_maximal(image, parent, MaximalityStrategy::LPoint).maximal;
  return {std::move(image), std::move(parent), maximal};
}

/// Pulls a maximal theta of nu back along an isomorphism f.
inline TransportResult transport_maximal_back(const GroupHom& f, const LSubset& theta, const LSubset& nu) {
  require_isomorphism(f);
  LSubset image = pullback(f, theta);
  LSubset parent = pullback(f, nu);
  const bool maximal = is_maximal(image, parent, MaximalityStrategy::LPoint).maximal;
  return {std::move(image), std::move(parent), maximal};
}

}  // namespace lgrp
