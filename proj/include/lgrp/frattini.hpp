#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/hom.hpp"
#include "lgrp/lsubgroup.hpp"
#include "lgrp/lsubset.hpp"
#include "lgrp/maximality.hpp"

namespace lgrp {

/// Intersection of all maximal L-subgroups of the parent (the parent itself
/// when there are none) together with the non-generator L-subgroup.
struct FrattiniReport {
  LSubset phi;
  std::size_t maximal_count = 0;
  bool used_fallback = false;
  LSubset lambda;
  bool equality_holds = false;
  std::vector<LSubset> maximals;
};

inline LSubset frattini_of(const std::vector<LSubset>& maximals, const LSubset& mu) {
  if (maximals.empty()) return mu;
  return intersection_of(maximals);
}

enum class NonGeneratorStrategy { Definition, ChainShortcut, Both };

struct NonGeneratorVerdict {
  bool non_generator = true;
  // eta with <eta, a_x> = mu but <eta> != mu.
  std::optional<LSubset> witness;
};

namespace detail {

inline void require_lpoint_in(const LPoint& p, const LSubset& mu) {
  if (!lpoint_in(p, mu)) throw Error(ErrorKind::LPointNotInMu, "L-point is not contained in mu");
}

// Witnesses form an up-set of L(mu) minus mu; the reported one is the first,
// in canonical order, that no other witness strictly contains.
inline NonGeneratorVerdict non_generator_by_definition(const LPoint& p, const LSubgroupUniverse& universe,
                                                       bool want_witness) {
  const LSubset& mu = universe.parent();
  std::vector<const LSubset*> witnesses;
  for (const LSubset& eta : universe.members()) {
    if (eta == mu) continue;
    if (generate_with(eta, p) == mu) {
      if (!want_witness) return {false, std::nullopt};
      witnesses.push_back(&eta);
    }
  }
  if (witnesses.empty()) return {};
  for (const LSubset* w : witnesses) {
    const bool dominated = std::any_of(witnesses.begin(), witnesses.end(),
                                       [&](const LSubset* v) { return v != w && contains(*v, *w); });
    if (!dominated) return {false, *w};
  }
  return {false, *witnesses.front()};
}

inline NonGeneratorVerdict non_generator_by_chain(const LPoint& p, const LSubgroupUniverse& universe,
                                                  const std::vector<LSubset>& maximals) {
  const LSubset& mu = universe.parent();
  if (!mu.lattice().is_chain())
    throw Error(ErrorKind::HypothesisNotMet, "the non-generator shortcut needs a chain lattice");
  if (lpoint_in(p, frattini_of(maximals, mu))) return {};
  for (const LSubset& eta : maximals)
    if (!lpoint_in(p, eta)) return {false, eta};
  return {false, std::nullopt};
}

}  // namespace detail

/// a_x is a non-generator of mu. The quantification runs over L(mu): for an
/// arbitrary L-subset eta, <eta, a_x> = <<eta>, a_x>.
/// ChainShortcut tests a_x against the maximal L-subgroups only. It can
/// disagree with the definition when a constant L-subgroup is a witness
/// (mu constant on C1, for one), and Both then throws.
inline NonGeneratorVerdict is_non_generator(const LPoint& p, const LSubgroupUniverse& universe,
                                            NonGeneratorStrategy strategy = NonGeneratorStrategy::Definition) {
  detail::require_lpoint_in(p, universe.parent());
  if (strategy == NonGeneratorStrategy::Definition)
    return detail::non_generator_by_definition(p, universe, /*want_witness=*/true);
  const auto maximals = maximal_lsubgroups(universe);
  auto fast = detail::non_generator_by_chain(p, universe, maximals);
  if (strategy == NonGeneratorStrategy::ChainShortcut) return fast;
  const auto slow = detail::non_generator_by_definition(p, universe, /*want_witness=*/true);
  if (slow.non_generator != fast.non_generator)
    throw std::logic_error("definition and chain non-generator tests disagree");
  return slow;
}

inline NonGeneratorVerdict is_non_generator(const LPoint& p, const LSubset& mu,
                                            NonGeneratorStrategy strategy = NonGeneratorStrategy::Definition,
                                            std::uint64_t budget = kDefaultBudget) {
  detail::require_lpoint_in(p, mu);
  return is_non_generator(p, LSubgroupUniverse(mu, budget), strategy);
}

/// lambda(x) = join of every a <= mu(x) with a_x a non-generator.
inline LSubset non_generator_subgroup(const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  const auto& l = mu.lattice();
  std::vector<Value> values(mu.size(), l.bottom());
  for (Element x = 0; x < mu.size(); ++x)
    for (Value a : l.down_set(mu(x))) {
      if (l.leq(a, values[x])) continue;
      if (detail::non_generator_by_definition({x, a}, universe, /*want_witness=*/false).non_generator)
        values[x] = l.join(values[x], a);
    }
  return LSubset(mu.group_ptr(), mu.lattice_ptr(), std::move(values));
}

inline LSubset non_generator_subgroup(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return non_generator_subgroup(LSubgroupUniverse(mu, budget));
}

inline FrattiniReport frattini(const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  auto maximals = maximal_lsubgroups(universe);
  LSubset phi = frattini_of(maximals, mu);
  LSubset lambda = non_generator_subgroup(universe);
  const bool equal = lambda == phi;
  const std::size_t count = maximals.size();
  return {std::move(phi), count, count == 0, std::move(lambda), equal, std::move(maximals)};
}

inline FrattiniReport frattini(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return frattini(LSubgroupUniverse(mu, budget));
}

struct NonGeneratorFrattiniCheck {
  bool inclusion = false;
  bool equality = false;
};

/// lambda inside Phi(mu); equality is expected whenever L is a chain.
inline NonGeneratorFrattiniCheck check_nongenerators_in_frattini(const LSubgroupUniverse& universe) {
  const auto report = frattini(universe);
  return {contains(report.phi, report.lambda), report.equality_holds};
}

inline NonGeneratorFrattiniCheck check_nongenerators_in_frattini(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return check_nongenerators_in_frattini(LSubgroupUniverse(mu, budget));
}

struct LevelComparison {
  bool forward_inclusion = false;     // Phi(mu_b) inside (Phi(mu))_b
  bool reverse_inclusion = false;   // (Phi(mu))_b inside Phi(mu_b)
  bool tip_hypothesis_holds = false;
  ElementSet classical;             // Phi(mu_b)
  ElementSet phi_level;             // (Phi(mu))_b
};

/// Compares the classical Frattini subgroup of the level mu_b with the b-level
/// of Phi(mu). L must be a chain and b must be attained by mu or be bottom.
/// Whether Phi(mu)(e) = mu(e) is reported rather than enforced.
inline LevelComparison frattini_level_compare(const LSubgroupUniverse& universe, Value b) {
  const LSubset& mu = universe.parent();
  const auto& l = mu.lattice();
  if (!l.is_upper_well_ordered()) throw Error(ErrorKind::HypothesisNotMet, "level comparison needs a chain lattice");
  const auto image = image_set(mu);
  if (b != l.bottom() && std::find(image.begin(), image.end(), b) == image.end())
    throw Error(ErrorKind::HypothesisNotMet, "level " + l.name(b) + " is not a value of mu");
  const ElementSet mu_b = level_subset(mu, b);
  if (mu_b.empty()) throw Error(ErrorKind::HypothesisNotMet, "level subset is empty");

  const LSubset phi = frattini_of(maximal_lsubgroups(universe), mu);
  const Element e = mu.group().identity();
  LevelComparison out;
  out.tip_hypothesis_holds = phi(e) == mu(e);
  out.classical = frattini_classical(mu.group(), mu_b);
  out.phi_level = level_subset(phi, b);
  out.forward_inclusion = out.classical.is_subset_of(out.phi_level);
  out.reverse_inclusion = out.phi_level.is_subset_of(out.classical);
  return out;
}

inline LevelComparison frattini_level_compare(const LSubset& mu, Value b, std::uint64_t budget = kDefaultBudget) {
  return frattini_level_compare(LSubgroupUniverse(mu, budget), b);
}

struct ConjugationCheck {
  bool holds = true;
  std::optional<LPoint> point;       // a non-generator a_x
  std::optional<Element> conjugator; // g with a_{gxg^-1} a generator
};

/// For mu normal in G: conjugates of non-generators are non-generators.
inline ConjugationCheck check_conjugation_closure(const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  if (!is_normal_in_group(mu)) throw Error(ErrorKind::MuNotNormalInG, "mu must be normal in G");
  const auto& g = mu.group();
  const auto& l = mu.lattice();
  // verdict[x][a] for every L-point a_x of mu
  std::vector<std::vector<bool>> verdict(g.order(), std::vector<bool>(l.size(), false));
  for (Element x = 0; x < g.order(); ++x)
    for (Value a : l.down_set(mu(x)))
      verdict[x][a.index] = detail::non_generator_by_definition({x, a}, universe, false).non_generator;
  for (Element x = 0; x < g.order(); ++x)
    for (Value a : l.down_set(mu(x))) {
      if (!verdict[x][a.index]) continue;
      for (Element y = 0; y < g.order(); ++y)
        if (!verdict[g.conjugate(y, x)][a.index]) return {false, LPoint{x, a}, y};
    }
  return {};
}

inline ConjugationCheck check_conjugation_closure(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return check_conjugation_closure(LSubgroupUniverse(mu, budget));
}

/// Phi(mu) is normal in mu; needs a chain lattice and mu normal in G.
inline bool check_frattini_normal(const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  if (!mu.lattice().is_upper_well_ordered())
    throw Error(ErrorKind::HypothesisNotMet, "Frattini normality needs a chain lattice");
  if (!is_normal_in_group(mu)) throw Error(ErrorKind::HypothesisNotMet, "mu must be normal in G");
  return is_normal_in(frattini_of(maximal_lsubgroups(universe), mu), mu);
}

inline bool check_frattini_normal(const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  return check_frattini_normal(LSubgroupUniverse(mu, budget));
}

/// f(Phi(mu)) inside Phi(f(mu)) for an isomorphism f.
inline bool check_frattini_hom(const GroupHom& f, const LSubset& mu, std::uint64_t budget = kDefaultBudget) {
  require_isomorphism(f);
  const LSubset phi = frattini_of(maximal_lsubgroups(mu, budget), mu);
  const LSubset image = pushforward(f, mu);
  const LSubset image_phi = frattini_of(maximal_lsubgroups(image, budget), image);
  return contains(image_phi, pushforward(f, phi));
}

/// The first canonical member of L(mu) that is maximal among those that
/// contain theta and omit the L-point p. Empty when p already lies in theta.
inline std::optional<LSubset> maximal_avoiding(const LSubgroupUniverse& universe, const LSubset& theta,
                                               const LPoint& p) {
  std::vector<const LSubset*> pool;
  for (const LSubset& nu : universe.members())
    if (contains(nu, theta) && !lpoint_in(p, nu)) pool.push_back(&nu);
  for (const LSubset* nu : pool) {
    const bool dominated = std::any_of(pool.begin(), pool.end(),
                                       [&](const LSubset* v) { return v != nu && contains(*v, *nu); });
    if (!dominated) return *nu;
  }
  return std::nullopt;
}

}  // namespace lgrp
