#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/group.hpp"
#include "lgrp/lattice.hpp"
#include "lgrp/lsubset.hpp"
#include "lgrp/search.hpp"

namespace lgrp {

/// Which characterization a predicate evaluates. `Both` evaluates the
/// pointwise definition and the level-subset form and throws
/// std::logic_error if they ever disagree.
enum class Check { Pointwise, Levelwise, Both };

namespace detail {

inline bool resolve(Check how, bool pointwise, bool levelwise, const char* what) {
  if (how == Check::Pointwise) return pointwise;
  if (how == Check::Levelwise) return levelwise;
  if (pointwise != levelwise)
    throw std::logic_error(std::string("pointwise and level-wise ") + what + " tests disagree");
  return pointwise;
}

template <typename Eval>
bool dispatch(Check how, Eval&& eval_pointwise, auto&& eval_levelwise, const char* what) {
  if (how == Check::Pointwise) return eval_pointwise();
  if (how == Check::Levelwise) return eval_levelwise();
  return resolve(how, eval_pointwise(), eval_levelwise(), what);
}

inline bool lsubgroup_pointwise(const LSubset& mu) {
  const auto& g = mu.group();
  const auto& l = mu.lattice();
  for (Element x = 0; x < g.order(); ++x) {
    if (mu(g.inverse(x)) != mu(x)) return false;
    for (Element y = 0; y < g.order(); ++y)
      if (!l.leq(l.meet(mu(x), mu(y)), mu(g.mul(x, y)))) return false;
  }
  return true;
}

inline bool lsubgroup_levelwise(const LSubset& mu) {
  for (Value a : mu.lattice().values()) {
    const ElementSet level = level_subset(mu, a);
    if (!level.empty() && !mu.group().is_subgroup(level)) return false;
  }
  return true;
}

}  // namespace detail

/// mu is an L-subgroup of G.
inline bool is_lsubgroup(const LSubset& mu, Check how = Check::Both) {
  require_distributive(mu.lattice());
  return detail::dispatch(
      how, [&] { return detail::lsubgroup_pointwise(mu); }, [&] { return detail::lsubgroup_levelwise(mu); },
      "L-subgroup");
}

/// eta is an L-subgroup of mu: eta is contained in mu and both are
/// L-subgroups of G. The level form checks that each non-empty eta_a is a
/// subgroup inside mu_a.
inline bool is_lsubgroup_of(const LSubset& eta, const LSubset& mu, Check how = Check::Both) {
  require_same_carriers(eta, mu);
  require_distributive(mu.lattice());
  if (!contains(mu, eta)) return false;
  return detail::dispatch(
      how, [&] { return detail::lsubgroup_pointwise(eta) && detail::lsubgroup_pointwise(mu); },
      [&] {
        if (!detail::lsubgroup_levelwise(mu)) return false;
        for (Value a : eta.lattice().values()) {
          const ElementSet level = level_subset(eta, a);
          if (level.empty()) continue;
          if (!eta.group().is_subgroup(level) || !level.is_subset_of(level_subset(mu, a))) return false;
        }
        return true;
      },
      "L-subgroup-of");
}

/// Proper: an L-subgroup of mu that is non-constant and differs from mu.
inline bool is_proper(const LSubset& eta, const LSubset& mu) {
  return is_lsubgroup_of(eta, mu) && !is_constant(eta) && !(eta == mu);
}

/// mu(xy) = mu(yx) for all x, y; level form: every non-empty mu_a is normal in G.
inline bool is_normal_in_group(const LSubset& mu, Check how = Check::Both) {
  if (!is_lsubgroup(mu)) throw Error(ErrorKind::NotAnLSubgroup, "normality needs an L-subgroup of G");
  const auto& g = mu.group();
  return detail::dispatch(
      how,
      [&] {
        for (Element x = 0; x < g.order(); ++x)
          for (Element y = 0; y < g.order(); ++y)
            if (mu(g.mul(x, y)) != mu(g.mul(y, x))) return false;
        return true;
      },
      [&] {
        for (Value a : mu.lattice().values()) {
          const ElementSet level = level_subset(mu, a);
          if (!level.empty() && !is_normal_subgroup(g, level, g.all())) return false;
        }
        return true;
      },
      "normality-in-G");
}

/// eta(y x y^-1) >= eta(x) ^ mu(y); level form: every non-empty eta_a is
/// normal in mu_a.
inline bool is_normal_in(const LSubset& eta, const LSubset& mu, Check how = Check::Both) {
  if (!is_lsubgroup_of(eta, mu)) throw Error(ErrorKind::NotAnLSubgroup, "eta must be an L-subgroup of mu");
  const auto& g = mu.group();
  const auto& l = mu.lattice();
  return detail::dispatch(
      how,
      [&] {
        for (Element x = 0; x < g.order(); ++x)
          for (Element y = 0; y < g.order(); ++y)
            if (!l.leq(l.meet(eta(x), mu(y)), eta(g.conjugate(y, x)))) return false;
        return true;
      },
      [&] {
        for (Value a : l.values()) {
          const ElementSet level = level_subset(eta, a);
          if (!level.empty() && !is_normal_subgroup(g, level, level_subset(mu, a))) return false;
        }
        return true;
      },
      "normality-in-mu");
}

/// Sup-property: every set of values of mu contains its supremum, i.e. the
/// image is a supstar subset.
inline bool has_sup_property(const LSubset& mu) {
  const auto image = image_set(mu);
  return mu.lattice().is_supstar_subset(image);
}

/// Im eta union Im theta is a supstar subset.
inline bool are_jointly_supstar(const LSubset& eta, const LSubset& theta) {
  if (!(eta.lattice_ptr() == theta.lattice_ptr() || eta.lattice() == theta.lattice()))
    throw Error(ErrorKind::MismatchedCarriers, "L-subsets use different lattices");
  auto values = image_set(eta);
  for (Value v : image_set(theta)) values.push_back(v);
  return eta.lattice().is_supstar_subset(values);
}

/// The L-subgroup generated by eta:
///   <eta>(x) = join { a <= tip(eta) : x in <eta_a> }
/// with a ranging over every lattice element below the tip and <{}> = {e}.
inline LSubset generate(const LSubset& eta) {
  const auto& l = eta.lattice();
  const auto& g = eta.group();
  require_distributive(l);
  const Value top = tip(eta);
  std::vector<Value> values(g.order(), l.bottom());
  for (Value a : l.values()) {
    if (!l.leq(a, top)) continue;
    for (Element x : g.closure(level_subset(eta, a))) values[x] = l.join(values[x], a);
  }
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(values));
}

/// eta union a_x, then generate.
inline LSubset generate_with(const LSubset& eta, const LPoint& p) { return generate(adjoin_lpoint(eta, p)); }

struct OracleLimits {
  std::size_t max_group_order = 8;
  std::size_t max_lattice_size = 6;
};

/// Brute-force generated L-subgroup: the pointwise meet of every L-subgroup
/// of G that contains eta, found by exhaustive search.
inline LSubset generate_oracle(const LSubset& eta, OracleLimits limits = {}) {
  const auto& l = eta.lattice();
  const auto& g = eta.group();
  require_distributive(l);
  if (g.order() > limits.max_group_order || l.size() > limits.max_lattice_size)
    throw Error(ErrorKind::InstanceTooLarge, "oracle limited to |G| <= " + std::to_string(limits.max_group_order) +
                                                 " and |L| <= " + std::to_string(limits.max_lattice_size));
  std::vector<std::vector<Value>> candidates(g.order());
  for (Element x = 0; x < g.order(); ++x) candidates[x] = l.up_set(eta(x));
  std::vector<Value> acc(g.order(), l.top());
  detail::for_each_lsubgroup(g, l, candidates, [&](std::span<const Value> nu) {
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = l.meet(acc[x], nu[x]);
    return true;
  });
  return LSubset(eta.group_ptr(), eta.lattice_ptr(), std::move(acc));
}

}  // namespace lgrp
