#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lgrp/error.hpp"
#include "lgrp/frattini.hpp"
#include "lgrp/group.hpp"
#include "lgrp/hom.hpp"
#include "lgrp/json_io.hpp"
#include "lgrp/lattice.hpp"
#include "lgrp/lsubgroup.hpp"
#include "lgrp/lsubset.hpp"
#include "lgrp/maximality.hpp"

namespace lgrp::harness {

using json = json_io::json;

enum class LatticeKind { Chain, ProductOfChains, Divisor };

/// Chain(size), ProductOfChains(size x second), Divisor(size = n).
struct LatticeChoice {
  LatticeKind kind = LatticeKind::Chain;
  std::size_t size = 5;
  std::size_t second = 2;
};

inline LatticePtr build_lattice(const LatticeChoice& c) {
  switch (c.kind) {
    case LatticeKind::Chain: return make_lattice(chain_lattice(c.size));
    case LatticeKind::ProductOfChains: return make_lattice(product_of_chains(c.size, c.second));
    case LatticeKind::Divisor: return make_lattice(divisor_lattice(c.size));
  }
  throw Error(ErrorKind::HypothesisNotMet, "unknown lattice kind");
}

inline std::string describe(const LatticeChoice& c) {
  switch (c.kind) {
    case LatticeKind::Chain: return "chain(" + std::to_string(c.size) + ")";
    case LatticeKind::ProductOfChains:
      return "product_of_chains(" + std::to_string(c.size) + "," + std::to_string(c.second) + ")";
    case LatticeKind::Divisor: return "divisor_lattice(" + std::to_string(c.size) + ")";
  }
  return "?";
}

struct InstanceSpec {
  std::uint64_t seed = 0;
  LatticeChoice lattice;
  std::string group = "D8";
  // Expected fraction of subgroup-chain steps used when building eta; 0 makes
  // eta the constant tail of mu.
  double subgroup_density = 0.5;
};

/// mu in L(G), eta in L(mu), and an arbitrary L-subset raw inside mu.
struct Instance {
  LSubset mu;
  LSubset eta;
  LSubset raw;
};

/// std distributions are implementation-defined, so draws are taken from the
/// engine directly to keep instances identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  T pick(const std::vector<T>& items) {
    return items.at(below(items.size()));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::vector<ElementSet> random_subgroup_chain(const FiniteGroup& g, Rng& rng, std::size_t max_steps) {
  std::vector<ElementSet> chain{g.trivial()};
  while (chain.size() <= max_steps && chain.back() != g.all()) {
    std::vector<ElementSet> above;
    for (ElementSet h : g.subgroups())
      if (chain.back().is_proper_subset_of(h)) above.push_back(h);
    chain.push_back(rng.pick(above));
  }
  return chain;
}

// Non-increasing labels v1 >= v2 >= ... inside [floor, top]. Each step keeps
// the label or moves to a random element it covers.
inline std::vector<Value> random_descending(const FiniteLattice& l, Rng& rng, std::size_t count, Value floor) {
  std::vector<Value> labels;
  Value current = rng.chance(0.75) ? l.top() : rng.pick(l.up_set(floor));
  for (std::size_t i = 0; i < count; ++i) {
    labels.push_back(current);
    std::vector<Value> below;
    for (Value v : l.down_set(current))
      if (l.leq(floor, v) && l.is_cover(current, v)) below.push_back(v);
    if (!below.empty() && rng.chance(0.6)) current = rng.pick(below);
  }
  return labels;
}

// nu(x) = labels[i] for the first H_i holding x, `outside` beyond the chain.
inline std::vector<Value> label_chain(const FiniteGroup& g, const std::vector<ElementSet>& chain,
                                      const std::vector<Value>& labels, Value outside) {
  std::vector<Value> values(g.order(), outside);
  for (std::size_t i = chain.size(); i-- > 0;)
    for (Element x : chain[i]) values[x] = labels[i];
  return values;
}

inline LSubset random_lsubgroup_of_group(const GroupPtr& g, const LatticePtr& l, Rng& rng) {
  auto one = [&] {
    const auto chain = random_subgroup_chain(*g, rng, g->order());
    const auto labels = random_descending(*l, rng, chain.size(), l->bottom());
    return LSubset(g, l, label_chain(*g, chain, labels, l->bottom()));
  };
  LSubset nu = one();
  if (rng.chance(0.3)) nu = meet(nu, one());
  return nu;
}

}  // namespace detail

inline Instance random_instance(const InstanceSpec& spec) {
  Rng rng(spec.seed);
  const GroupPtr g = make_group(builtin_group(spec.group));
  const LatticePtr l = build_lattice(spec.lattice);
  LSubset mu = detail::random_lsubgroup_of_group(g, l, rng);
  const Value floor = tail(mu);

  constexpr std::size_t kDepth = 4;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < kDepth; ++i)
    if (rng.chance(spec.subgroup_density)) ++steps;
  LSubset eta = LSubset::constant(g, l, floor);
  if (steps > 0) {
    const auto chain = detail::random_subgroup_chain(*g, rng, steps - 1);
    const auto labels = detail::random_descending(*l, rng, chain.size(), floor);
    eta = meet(LSubset(g, l, detail::label_chain(*g, chain, labels, floor)), mu);
  }

  std::vector<Value> raw(g->order());
  for (Element x = 0; x < g->order(); ++x) raw[x] = rng.pick(l->down_set(mu(x)));
  return {std::move(mu), std::move(eta), LSubset(g, l, std::move(raw))};
}

/// The (mu, eta) pair of a random instance.
inline std::pair<LSubset, LSubset> random_lsubgroup(const InstanceSpec& spec) {
  auto inst = random_instance(spec);
  return {std::move(inst.mu), std::move(inst.eta)};
}

inline json instance_to_json(const Instance& inst) {
  return {{"lattice", json_io::lattice_to_json(inst.mu.lattice())},
          {"group", json_io::group_to_json(inst.mu.group())},
          {"mu", json_io::values_to_json(inst.mu)},
          {"eta", json_io::values_to_json(inst.eta)},
          {"raw", json_io::values_to_json(inst.raw)}};
}

/// Homomorphisms used by the transport properties: maps out of G (`all`,
/// with its surjective and bijective members) and embeddings of the cyclic
/// subgroups of G.
struct HomFamily {
  std::vector<GroupHom> all;
  std::vector<GroupHom> surjective;
  std::vector<GroupHom> isomorphisms;
  std::vector<GroupHom> embeddings;
};

inline HomFamily standard_homs(const GroupPtr& g) {
  HomFamily family;
  auto add = [&](GroupHom f) {
    for (const auto& h : family.all)
      if (h.target_ptr() == f.target_ptr() && h.map() == f.map()) return;
    if (f.surjective()) family.surjective.push_back(f);
    if (f.is_isomorphism()) family.isomorphisms.push_back(f);
    family.all.push_back(std::move(f));
  };
  add(identity_hom(g));
  for (Element x = 0; x < g->order(); ++x) {
    auto f = inner_automorphism(g, x);
    bool same = true;
    for (Element y = 0; y < g->order(); ++y) same = same && f(y) == y;
    if (!same) add(std::move(f));
  }
  const GroupPtr c2 = make_group(builtin_group("C2"));
  for (ElementSet n : g->subgroups())
    if (n.size() * 2 == g->order() && is_normal_subgroup(*g, n, g->all())) {
      std::vector<Element> map(g->order());
      for (Element x = 0; x < g->order(); ++x) map[x] = n.contains(x) ? 0 : 1;
      add(GroupHom::validate(g, c2, std::move(map)));
    }
  add(GroupHom::validate(g, make_group(builtin_group("C1")), std::vector<Element>(g->order(), 0)));
  std::vector<ElementSet> cyclic_seen;
  for (Element x = 0; x < g->order(); ++x) {
    const ElementSet c = g->closure(ElementSet::single(x));
    if (c.size() < 2 || c == g->all() || std::find(cyclic_seen.begin(), cyclic_seen.end(), c) != cyclic_seen.end())
      continue;
    cyclic_seen.push_back(c);
    const GroupPtr cn = make_group(builtin_group("C" + std::to_string(c.size())));
    family.embeddings.push_back(GroupHom::from_generators(cn, g, {{1, x}}));
  }
  return family;
}

/// Per-instance cache of the expensive derived objects.
class Context {
 public:
  explicit Context(Instance instance, std::uint64_t budget = kDefaultBudget)
      : inst_(std::move(instance)), budget_(budget) {}

  const Instance& instance() const noexcept { return inst_; }
  const LSubset& mu() const noexcept { return inst_.mu; }
  const LSubset& eta() const noexcept { return inst_.eta; }
  const LSubset& raw() const noexcept { return inst_.raw; }
  const FiniteGroup& group() const { return inst_.mu.group(); }
  const FiniteLattice& lattice() const { return inst_.mu.lattice(); }

  const LSubgroupUniverse& universe() {
    if (!universe_) universe_.emplace(inst_.mu, budget_);
    return *universe_;
  }
  const std::vector<LSubset>& maximals() {
    if (!maximals_) maximals_ = maximal_lsubgroups(universe());
    return *maximals_;
  }
  const FrattiniReport& frattini_report() {
    if (!report_) report_.emplace(frattini(universe()));
    return *report_;
  }
  const HomFamily& homs() {
    if (!homs_) homs_ = standard_homs(inst_.mu.group_ptr());
    return *homs_;
  }
  bool mu_normal() {
    if (!normal_) normal_ = is_normal_in_group(inst_.mu);
    return *normal_;
  }

 private:
  Instance inst_;
  std::uint64_t budget_;
  std::optional<LSubgroupUniverse> universe_;
  std::optional<std::vector<LSubset>> maximals_;
  std::optional<FrattiniReport> report_;
  std::optional<HomFamily> homs_;
  std::optional<bool> normal_;
};

struct Outcome {
  enum class Kind { Pass, Fail, Skip };
  Kind kind = Kind::Pass;
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Kind::Skip, {}}; }
  static Outcome fail(std::string why) { return {Kind::Fail, std::move(why)}; }
};

struct Property {
  std::string name;
  std::function<Outcome(Context&)> check;
};

namespace props {

using K = Outcome::Kind;

inline std::string show(const LSubset& mu) { return json_io::values_to_json(mu).dump(); }

inline std::vector<LSubset> samples(Context& c) { return {c.mu(), c.eta(), c.raw()}; }

inline Outcome generator_soundness(Context& c) {
  if (!is_lsubgroup(c.mu())) return Outcome::fail("mu is not an L-subgroup: " + show(c.mu()));
  if (!is_lsubgroup_of(c.eta(), c.mu())) return Outcome::fail("eta is not in L(mu): " + show(c.eta()));
  if (!contains(c.mu(), c.raw())) return Outcome::fail("raw escapes mu");
  return Outcome::pass();
}

inline Outcome level_forms_agree(Context& c) {
  for (const auto& s : samples(c)) (void)is_lsubgroup(s, Check::Both);
  (void)is_lsubgroup_of(c.eta(), c.mu(), Check::Both);
  (void)is_lsubgroup_of(c.raw(), c.mu(), Check::Both);
  (void)is_normal_in_group(c.mu(), Check::Both);
  (void)is_normal_in(c.eta(), c.mu(), Check::Both);
  return Outcome::pass();
}

inline Outcome intersection_levels(Context& c) {
  const auto family = samples(c);
  const LSubset both = intersection_of(family);
  for (Value a : c.lattice().values()) {
    ElementSet acc = c.group().all();
    for (const auto& s : family) acc = acc & level_subset(s, a);
    if (level_subset(both, a) != acc) return Outcome::fail("level " + c.lattice().name(a));
  }
  return Outcome::pass();
}

inline Outcome level_monotonicity(Context& c) {
  for (const auto* inner : {&c.eta(), &c.raw()})
    for (Value a : c.lattice().values())
      if (!level_subset(*inner, a).is_subset_of(level_subset(c.mu(), a)))
        return Outcome::fail("level " + c.lattice().name(a));
  return Outcome::pass();
}

inline Outcome generate_laws(Context& c) {
  const auto e = c.group().identity();
  const LSubset wider = join(c.raw(), c.eta());
  for (const auto& s : {c.raw(), c.eta(), wider}) {
    const LSubset g = generate(s);
    if (!contains(g, s)) return Outcome::fail("not extensive on " + show(s));
    if (!(generate(g) == g)) return Outcome::fail("not idempotent on " + show(s));
    if (!is_lsubgroup(g)) return Outcome::fail("not an L-subgroup: " + show(g));
    if (tip(g) != tip(s) || g(e) != tip(s)) return Outcome::fail("tip moved on " + show(s));
    if (!contains(c.mu(), g)) return Outcome::fail("escapes mu on " + show(s));
  }
  if (!contains(generate(wider), generate(c.raw()))) return Outcome::fail("not monotone");
  if (!(generate(c.mu()) == c.mu())) return Outcome::fail("mu is not fixed");
  return Outcome::pass();
}

inline Outcome generate_matches_oracle(Context& c) {
  const OracleLimits limits;
  if (c.group().order() > limits.max_group_order || c.lattice().size() > limits.max_lattice_size)
    return Outcome::skip();
  for (const auto& s : {c.raw(), c.eta()}) {
    const LSubset fast = generate(s);
    const LSubset slow = generate_oracle(s, limits);
    if (!(fast == slow)) return Outcome::fail(show(s) + ": " + show(fast) + " vs oracle " + show(slow));
  }
  return Outcome::pass();
}

inline Outcome generate_levels(Context& c) {
  bool applied = false;
  for (const auto& s : samples(c)) {
    if (!has_sup_property(s)) continue;
    applied = true;
    const LSubset g = generate(s);
    for (Value b : c.lattice().down_set(tip(s)))
      if (c.group().closure(level_subset(s, b)) != level_subset(g, b))
        return Outcome::fail(show(s) + " at level " + c.lattice().name(b));
  }
  return applied ? Outcome::pass() : Outcome::skip();
}

// Each map out of G paired with (mu, eta, raw); each cyclic embedding paired
// with their restrictions to the subgroup.
struct TransportCase {
  const GroupHom* f;
  std::vector<LSubset> sources;
};

inline std::vector<TransportCase> transport_cases(Context& c) {
  std::vector<TransportCase> out;
  for (const auto& f : c.homs().all) out.push_back({&f, samples(c)});
  for (const auto& f : c.homs().embeddings) {
    std::vector<LSubset> restricted;
    for (const auto& s : samples(c)) restricted.push_back(pullback(f, s));
    out.push_back({&f, std::move(restricted)});
  }
  return out;
}

inline Outcome generate_commutes_with_image(Context& c) {
  for (const auto& [f, sources] : transport_cases(c))
    for (const auto& s : sources)
      if (!(generate(pushforward(*f, s)) == pushforward(*f, generate(s))))
        return Outcome::fail(show(s) + " under " + json_io::hom_to_json(*f).dump());
  return Outcome::pass();
}

// Surjective maps only: off the image of f the two sides can differ.
inline Outcome generate_commutes_with_preimage(Context& c) {
  for (const auto& f : c.homs().surjective)
    for (const auto& s : {c.raw(), c.eta()}) {
      const LSubset theta = pushforward(f, s);
      if (!(generate(pullback(f, theta)) == pullback(f, generate(theta))))
        return Outcome::fail(show(theta) + " under " + json_io::hom_to_json(f).dump());
    }
  return Outcome::pass();
}

inline Outcome hom_unions_and_intersections(Context& c) {
  for (const auto& [f, family] : transport_cases(c)) {
    std::vector<LSubset> images;
    for (const auto& s : family) images.push_back(pushforward(*f, s));
    if (!(pushforward(*f, union_of(family)) == union_of(images))) return Outcome::fail("union not preserved");
    if (!contains(intersection_of(images), pushforward(*f, intersection_of(family))))
      return Outcome::fail("image of intersection too large");
  }
  return Outcome::pass();
}

inline Outcome hom_preimages(Context& c) {
  for (const auto& [f, sources] : transport_cases(c))
    for (const auto& s : sources) {
      const LSubset image = pushforward(*f, s);
      const LSubset back = pullback(*f, image);
      if (!contains(back, s)) return Outcome::fail("preimage of image misses " + show(s));
      if (f->injective() && !(back == s)) return Outcome::fail("injective map changed " + show(s));
      if (f->surjective() && !(pushforward(*f, pullback(*f, image)) == image))
        return Outcome::fail("surjective map changed " + show(image));
    }
  return Outcome::pass();
}

inline Outcome hom_adjunction(Context& c) {
  for (const auto& [f, family] : transport_cases(c))
    for (const auto& s : family)
      for (const auto& t : family) {
        const LSubset nu = pushforward(*f, t);
        if (contains(nu, pushforward(*f, s)) != contains(pullback(*f, nu), s))
          return Outcome::fail(show(s) + " against " + show(nu));
      }
  return Outcome::pass();
}

inline Outcome hom_keeps_lsubgroups(Context& c) {
  for (const auto& [f, sources] : transport_cases(c)) {
    const LSubset image = pushforward(*f, sources.front());
    if (!is_lsubgroup(image)) return Outcome::fail("image of mu " + show(image));
    if (!is_lsubgroup(pullback(*f, image))) return Outcome::fail("preimage of f(mu)");
  }
  return Outcome::pass();
}

inline Outcome set_product_associative(Context& c) {
  const auto& a = c.mu();
  const auto& b = c.eta();
  const auto& d = c.raw();
  if (!(set_product(set_product(a, b), d) == set_product(a, set_product(b, d)))) return Outcome::fail("mu, eta, raw");
  if (!(set_product(set_product(d, d), b) == set_product(d, set_product(d, b)))) return Outcome::fail("raw, raw, eta");
  return Outcome::pass();
}

inline Outcome normal_in_top(Context& c) {
  const LSubset top = LSubset::constant(c.mu().group_ptr(), c.mu().lattice_ptr(), c.lattice().top());
  for (const auto* s : {&c.mu(), &c.eta()})
    if (is_normal_in(*s, top) != is_normal_in_group(*s)) return Outcome::fail(show(*s));
  return Outcome::pass();
}

inline bool listed(const std::vector<LSubset>& list, const LSubset& eta) {
  return std::binary_search(list.begin(), list.end(), eta, canonical_less);
}

inline Outcome maximality_strategies_agree(Context& c) {
  const auto& maximals = c.maximals();
  for (const auto& eta : c.universe().members()) {
    const auto verdict = is_maximal(eta, c.universe(), MaximalityStrategy::Both);
    if (verdict.maximal != listed(maximals, eta)) return Outcome::fail("listing disagrees on " + show(eta));
  }
  return Outcome::pass();
}

inline Outcome single_defect_level(Context& c) {
  bool applied = false;
  for (const auto& eta : c.maximals()) {
    if (!are_jointly_supstar(eta, c.mu())) continue;
    applied = true;
    const auto profile = level_profile(eta, c.mu());
    if (profile.defect_count() != 1)
      return Outcome::fail(std::to_string(profile.defect_count()) + " defect levels for " + show(eta));
  }
  return applied ? Outcome::pass() : Outcome::skip();
}

inline Outcome defect_is_maximal_subgroup(Context& c) {
  bool applied = false;
  const Element e = c.group().identity();
  for (const auto& eta : c.maximals()) {
    if (!are_jointly_supstar(eta, c.mu()) || eta(e) != c.mu()(e)) continue;
    applied = true;
    const auto profile = level_profile(eta, c.mu());
    if (!profile.unique_defect_level) return Outcome::fail("no unique defect for " + show(eta));
    for (const auto& entry : profile.witness_levels)
      if (entry.relation == LevelRelation::ProperSubgroup)
        return Outcome::fail("defect at " + c.lattice().name(entry.level) + " is not maximal for " + show(eta));
  }
  return applied ? Outcome::pass() : Outcome::skip();
}

inline Outcome sufficient_pattern_is_maximal(Context& c) {
  for (const auto& eta : c.universe().members())
    if (sufficient_maximal_check(eta, c.mu()) && !listed(c.maximals(), eta))
      return Outcome::fail("sufficient pattern on non-maximal " + show(eta));
  return Outcome::pass();
}

inline Outcome tip_relation_holds(Context& c) {
  if (c.maximals().empty()) return Outcome::skip();
  for (const auto& eta : c.maximals())
    if (tip_relation(eta, c.mu()) == TipRelation::Violation) return Outcome::fail(show(eta));
  return Outcome::pass();
}

inline Outcome maximality_under_isomorphism(Context& c) {
  if (c.maximals().empty()) return Outcome::skip();
  for (const auto& f : c.homs().isomorphisms)
    for (const auto& eta : c.maximals()) {
      const auto there = transport_maximal(f, eta, c.mu());
      if (!there.maximal) return Outcome::fail("image not maximal: " + show(there.image));
      const auto back = transport_maximal_back(f, there.image, there.image_parent);
      if (!back.maximal || !(back.image == eta)) return Outcome::fail("preimage not maximal: " + show(back.image));
    }
  return Outcome::pass();
}

inline Outcome lambda_is_lsubgroup(Context& c) {
  const auto& lambda = c.frattini_report().lambda;
  if (!is_lsubgroup_of(lambda, c.mu())) return Outcome::fail(show(lambda));
  return Outcome::pass();
}

inline Outcome nongenerators_equal_frattini(Context& c) {
  const auto& r = c.frattini_report();
  if (!contains(r.phi, r.lambda)) return Outcome::fail("lambda " + show(r.lambda) + " outside phi " + show(r.phi));
  if (c.lattice().is_chain() && !r.equality_holds)
    return Outcome::fail("lambda " + show(r.lambda) + " != phi " + show(r.phi));
  return Outcome::pass();
}

inline Outcome phi_below_maximals(Context& c) {
  const auto& r = c.frattini_report();
  for (const auto& eta : r.maximals)
    if (!contains(eta, r.phi)) return Outcome::fail(show(eta));
  return Outcome::pass();
}

inline Outcome fallback_iff_no_maximals(Context& c) {
  const auto& r = c.frattini_report();
  if (r.used_fallback != r.maximals.empty()) return Outcome::fail("fallback flag");
  if (r.used_fallback && !(r.phi == c.mu())) return Outcome::fail("fallback phi differs from mu");
  return Outcome::pass();
}

inline Outcome level_inclusion(Context& c) {
  const auto& r = c.frattini_report();
  const Element e = c.group().identity();
  if (!c.lattice().is_chain() || r.phi(e) != c.mu()(e)) return Outcome::skip();
  for (Value b : image_set(c.mu())) {
    const auto cmp = frattini_level_compare(c.universe(), b);
    if (!cmp.forward_inclusion) return Outcome::fail("level " + c.lattice().name(b));
  }
  return Outcome::pass();
}

inline Outcome maximal_avoiding_point(Context& c) {
  if (!c.lattice().is_chain()) return Outcome::skip();
  const auto& members = c.universe().members();
  std::vector<const LSubset*> thetas{&c.eta()};
  const std::size_t stride = std::max<std::size_t>(1, members.size() / 12);
  for (std::size_t i = 0; i < members.size(); i += stride) thetas.push_back(&members[i]);
  for (const LSubset* theta : thetas)
    for (Element x = 0; x < c.group().order(); ++x)
      for (Value a : c.lattice().down_set(c.mu()(x))) {
        const LPoint p{x, a};
        if (lpoint_in(p, *theta)) continue;
        const auto nu = maximal_avoiding(c.universe(), *theta, p);
        if (!nu) return Outcome::fail("nothing avoids the point above " + show(*theta));
        if (generate_with(*theta, p) == c.mu() && !is_constant(*nu) && !listed(c.maximals(), *nu))
          return Outcome::fail("avoiding member not maximal: " + show(*nu));
      }
  return Outcome::pass();
}

inline Outcome frattini_is_normal(Context& c) {
  if (!c.lattice().is_chain() || !c.mu_normal()) return Outcome::skip();
  if (!check_frattini_normal(c.universe())) return Outcome::fail(show(c.frattini_report().phi));
  return Outcome::pass();
}

inline Outcome nongenerators_closed_under_conjugation(Context& c) {
  if (!c.mu_normal()) return Outcome::skip();
  const auto check = check_conjugation_closure(c.universe());
  if (!check.holds) return Outcome::fail("conjugate of a non-generator generates");
  return Outcome::pass();
}

inline Outcome frattini_under_isomorphism(Context& c) {
  const auto& isos = c.homs().isomorphisms;
  // identity plus at most one non-trivial automorphism keeps this cheap
  for (std::size_t i = 0; i < isos.size() && i < 2; ++i)
    if (!check_frattini_hom(isos[i], c.mu())) return Outcome::fail(json_io::hom_to_json(isos[i]).dump());
  return Outcome::pass();
}

inline Outcome nongen_reduction(Context& c) {
  const auto& l = c.lattice();
  const auto& g = c.group();
  std::vector<std::vector<Value>> choices(g.order());
  for (Element x = 0; x < g.order(); ++x) choices[x] = l.down_set(c.mu()(x));
  if (lgrp::detail::candidate_count(choices) > 4096) return Outcome::skip();

  std::vector<LSubset> subsets;
  std::vector<std::size_t> digit(g.order(), 0);
  for (bool more = true; more;) {
    std::vector<Value> v(g.order());
    for (Element x = 0; x < g.order(); ++x) v[x] = choices[x][digit[x]];
    subsets.emplace_back(c.mu().group_ptr(), c.mu().lattice_ptr(), std::move(v));
    more = false;
    for (Element x = 0; x < g.order(); ++x) {
      if (++digit[x] < choices[x].size()) {
        more = true;
        break;
      }
      digit[x] = 0;
    }
  }
  std::vector<LSubset> generated;
  for (const auto& s : subsets) generated.push_back(generate(s));

  for (Element x = 0; x < g.order(); ++x)
    for (Value a : choices[x]) {
      const LPoint p{x, a};
      bool raw_verdict = true;
      for (std::size_t i = 0; i < subsets.size() && raw_verdict; ++i)
        if (generate_with(subsets[i], p) == c.mu() && !(generated[i] == c.mu())) raw_verdict = false;
      if (raw_verdict != is_non_generator(p, c.universe()).non_generator)
        return Outcome::fail("verdicts differ at " + l.name(a) + "_" + g.name(x));
    }
  return Outcome::pass();
}

inline Outcome nongen_chain_shortcut(Context& c) {
  if (!c.lattice().is_chain()) return Outcome::skip();
  const auto& phi = c.frattini_report().phi;
  for (Element x = 0; x < c.group().order(); ++x)
    for (Value a : c.lattice().down_set(c.mu()(x))) {
      const LPoint p{x, a};
      if (is_non_generator(p, c.universe()).non_generator != lpoint_in(p, phi))
        return Outcome::fail("shortcut disagrees at " + c.lattice().name(a) + "_" + c.group().name(x));
    }
  return Outcome::pass();
}

inline Outcome crisp_collapse(Context& c) {
  if (c.lattice().size() != 2) return Outcome::skip();
  const auto& g = c.group();
  const auto& l = c.lattice();
  const auto gp = c.mu().group_ptr();
  const auto lp = c.mu().lattice_ptr();
  for (const auto& s : {c.raw(), c.eta()}) {
    const ElementSet support = level_subset(s, l.top());
    const LSubset expected = support.empty() ? LSubset::constant(gp, lp, l.bottom())
                                             : LSubset::characteristic(gp, lp, g.closure(support));
    if (!(generate(s) == expected)) return Outcome::fail("generate on " + show(s));
  }
  const ElementSet h = level_subset(c.mu(), l.top());
  if (h.empty()) return Outcome::pass();
  std::vector<LSubset> expected;
  for (ElementSet m : maximal_subgroups_of(g, h)) expected.push_back(LSubset::characteristic(gp, lp, m));
  std::sort(expected.begin(), expected.end(), canonical_less);
  if (c.maximals() != expected) return Outcome::fail("maximal L-subgroups differ from maximal subgroups");
  if (!(c.frattini_report().phi == LSubset::characteristic(gp, lp, frattini_classical(g, h))))
    return Outcome::fail("phi differs from the classical Frattini subgroup");
  return Outcome::pass();
}

}  // namespace props

inline const std::vector<Property>& all_properties() {
  static const std::vector<Property> list{
      {"generator_soundness", props::generator_soundness},
      {"level_forms_agree", props::level_forms_agree},
      {"intersection_levels", props::intersection_levels},
      {"level_monotonicity", props::level_monotonicity},
      {"generate_laws", props::generate_laws},
      {"generate_matches_oracle", props::generate_matches_oracle},
      {"generate_levels", props::generate_levels},
      {"generate_commutes_with_image", props::generate_commutes_with_image},
      {"generate_commutes_with_preimage", props::generate_commutes_with_preimage},
      {"hom_unions_and_intersections", props::hom_unions_and_intersections},
      {"hom_preimages", props::hom_preimages},
      {"hom_adjunction", props::hom_adjunction},
      {"hom_keeps_lsubgroups", props::hom_keeps_lsubgroups},
      {"set_product_associative", props::set_product_associative},
      {"normal_in_top", props::normal_in_top},
      {"maximality_strategies_agree", props::maximality_strategies_agree},
      {"single_defect_level", props::single_defect_level},
      {"defect_is_maximal_subgroup", props::defect_is_maximal_subgroup},
      {"sufficient_pattern_is_maximal", props::sufficient_pattern_is_maximal},
      {"tip_relation", props::tip_relation_holds},
      {"maximality_under_isomorphism", props::maximality_under_isomorphism},
      {"lambda_is_lsubgroup", props::lambda_is_lsubgroup},
      {"nongenerators_equal_frattini", props::nongenerators_equal_frattini},
      {"phi_below_maximals", props::phi_below_maximals},
      {"fallback_iff_no_maximals", props::fallback_iff_no_maximals},
      {"level_inclusion", props::level_inclusion},
      {"maximal_avoiding_point", props::maximal_avoiding_point},
      {"frattini_is_normal", props::frattini_is_normal},
      {"nongenerators_closed_under_conjugation", props::nongenerators_closed_under_conjugation},
      {"frattini_under_isomorphism", props::frattini_under_isomorphism},
      {"nongen_reduction", props::nongen_reduction},
      {"nongen_chain_shortcut", props::nongen_chain_shortcut},
      {"crisp_collapse", props::crisp_collapse},
  };
  return list;
}

inline Outcome run_property(const Property& p, Context& c) {
  try {
    return p.check(c);
  } catch (const std::exception& e) {
    return Outcome::fail(std::string("exception: ") + e.what());
  }
}

namespace detail {

inline bool still_fails(const Property& p, const Instance& inst, std::uint64_t budget) {
  Context c(inst, budget);
  return run_property(p, c).kind == Outcome::Kind::Fail;
}

inline LSubset remap(const LSubset& s, const LatticePtr& to, const std::vector<Value>& map) {
  std::vector<Value> v(s.size());
  for (Element x = 0; x < s.size(); ++x) v[x] = map[s(x).index];
  return LSubset(s.group_ptr(), to, std::move(v));
}

// Chains only: merge the elements of rank k and k + 1.
inline std::vector<Instance> smaller_lattices(const Instance& inst) {
  const auto& l = inst.mu.lattice();
  std::vector<Instance> out;
  if (!l.is_chain() || l.size() <= 2) return out;
  const LatticePtr to = make_lattice(chain_lattice(l.size() - 1));
  for (std::size_t k = 0; k + 1 < l.size(); ++k) {
    std::vector<Value> map(l.size());
    for (Value v : l.values()) {
      const std::size_t rank = l.down_set(v).size() - 1;
      map[v.index] = to->value_at(rank <= k ? rank : rank - 1);
    }
    out.push_back({remap(inst.mu, to, map), remap(inst.eta, to, map), remap(inst.raw, to, map)});
  }
  return out;
}

inline LSubset restrict_to(const LSubset& s, const GroupPtr& sub, const std::vector<Element>& members) {
  std::vector<Value> v(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) v[i] = s(members[i]);
  return LSubset(sub, s.lattice_ptr(), std::move(v));
}

inline std::vector<Instance> smaller_groups(const Instance& inst) {
  const auto& g = inst.mu.group();
  std::vector<Instance> out;
  for (ElementSet h : g.subgroups()) {
    if (h == g.all()) continue;
    const auto members = h.to_vector();
    std::vector<std::string> names;
    for (Element x : members) names.push_back(g.name(x));
    std::vector<std::vector<Element>> table(members.size(), std::vector<Element>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        const Element prod = g.mul(members[i], members[j]);
        table[i][j] = static_cast<Element>(std::find(members.begin(), members.end(), prod) - members.begin());
      }
    const GroupPtr sub = make_group(FiniteGroup::from_indices(std::move(names), table));
    out.push_back({restrict_to(inst.mu, sub, members), restrict_to(inst.eta, sub, members),
                   restrict_to(inst.raw, sub, members)});
  }
  return out;
}

inline std::vector<Instance> lowered_values(const Instance& inst) {
  const auto& g = inst.mu.group();
  const Value bottom = inst.mu.lattice().bottom();
  std::vector<Instance> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inverse(x);
    if (xi < x) continue;
    auto lower = [&](const LSubset& s) { return s.with_value(x, bottom).with_value(xi, bottom); };
    if (inst.raw(x) != bottom || inst.raw(xi) != bottom) out.push_back({inst.mu, inst.eta, lower(inst.raw)});
    if (inst.eta(x) != bottom || inst.eta(xi) != bottom) out.push_back({inst.mu, lower(inst.eta), inst.raw});
    if (inst.mu(x) != bottom || inst.mu(xi) != bottom) {
      const LSubset mu = lower(inst.mu);
      out.push_back({mu, meet(inst.eta, mu), meet(inst.raw, mu)});
    }
  }
  return out;
}

inline bool valid(const Instance& inst) {
  return is_lsubgroup(inst.mu) && is_lsubgroup_of(inst.eta, inst.mu) && contains(inst.mu, inst.raw);
}

}  // namespace detail

/// Greedy shrinking: lattice size, then group order, then individual values.
inline Instance shrink(const Property& p, Instance inst, std::uint64_t budget = kDefaultBudget) {
  using Step = std::vector<Instance> (*)(const Instance&);
  const Step steps[] = {detail::smaller_lattices, detail::smaller_groups, detail::lowered_values};
  for (bool progress = true; progress;) {
    progress = false;
    for (Step step : steps) {
      for (auto& candidate : step(inst))
        if (detail::valid(candidate) && detail::still_fails(p, candidate, budget)) {
          inst = std::move(candidate);
          progress = true;
          break;
        }
      if (progress) break;
    }
  }
  return inst;
}

struct PropertyStats {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::optional<json> first_counterexample;
};

struct SuiteReport {
  std::size_t instances = 0;
  std::vector<PropertyStats> properties;

  bool all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyStats& p) { return p.failures == 0; });
  }

  json to_json() const {
    json props = json::object();
    for (const auto& p : properties) {
      json entry = {{"trials", p.trials}, {"failures", p.failures}, {"skipped", p.skipped}};
      entry["firstCounterexample"] = p.first_counterexample ? *p.first_counterexample : json(nullptr);
      props[p.name] = std::move(entry);
    }
    return {{"instances", instances}, {"passed", all_passed()}, {"properties", std::move(props)}};
  }
};

struct SuiteSpec {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::vector<LatticeChoice> lattices{{LatticeKind::Chain, 2}, {LatticeKind::Chain, 3}, {LatticeKind::Chain, 4},
                                      {LatticeKind::Chain, 5}, {LatticeKind::Chain, 6}};
  std::vector<std::string> groups{"Q8", "D8", "C6", "V4"};
  std::vector<double> densities{0.0, 0.25, 0.5, 0.75, 1.0};
  // Instances checked ahead of the random ones.
  std::vector<Instance> pinned;
  std::uint64_t budget = kDefaultBudget;
  bool shrink = true;
};

/// Instance spec of random trial `index`.
inline InstanceSpec trial_spec(const SuiteSpec& suite, std::size_t index) {
  Rng rng(suite.seed * 0x9E3779B97F4A7C15ULL + index);
  InstanceSpec spec;
  spec.seed = rng.below(~std::uint64_t{0});
  spec.lattice = rng.pick(suite.lattices);
  spec.group = rng.pick(suite.groups);
  spec.subgroup_density = rng.pick(suite.densities);
  return spec;
}

inline SuiteReport run_suite(const SuiteSpec& suite, const std::vector<Property>& properties = all_properties()) {
  SuiteReport report;
  for (const auto& p : properties) report.properties.push_back({p.name, 0, 0, 0, std::nullopt});

  auto check = [&](const Instance& inst, const json& origin) {
    ++report.instances;
    Context ctx(inst, suite.budget);
    for (std::size_t i = 0; i < properties.size(); ++i) {
      const Outcome out = run_property(properties[i], ctx);
      auto& stats = report.properties[i];
      if (out.kind == Outcome::Kind::Skip) {
        ++stats.skipped;
        continue;
      }
      ++stats.trials;
      if (out.kind == Outcome::Kind::Pass) continue;
      ++stats.failures;
      if (stats.first_counterexample) continue;
      const Instance small = suite.shrink ? shrink(properties[i], inst, suite.budget) : inst;
      Context again(small, suite.budget);
      const Outcome shrunk = run_property(properties[i], again);
      stats.first_counterexample = json{{"origin", origin},
                                        {"message", out.detail},
                                        {"instance", instance_to_json(small)},
                                        {"shrunkMessage", shrunk.detail}};
    }
  };

  for (std::size_t i = 0; i < suite.pinned.size(); ++i) check(suite.pinned[i], json{{"pinned", i}});
  for (std::size_t i = 0; i < suite.trials; ++i) {
    const InstanceSpec spec = trial_spec(suite, i);
    check(random_instance(spec), json{{"trial", i},
                                      {"seed", spec.seed},
                                      {"lattice", describe(spec.lattice)},
                                      {"group", spec.group},
                                      {"density", spec.subgroup_density}});
  }
  return report;
}

/// eta whose levels over Im mu union Im eta show a single defect, that defect
/// a maximal subgroup and eta(e) = mu(e), while eta is not maximal.
struct ConverseCounterexample {
  LSubset mu;
  LSubset eta;
  LSubset theta;  // strictly between eta and mu
  Value defect_level;
};

inline bool shows_maximal_level_pattern(const LSubset& eta, const LSubset& mu) {
  const Element e = mu.group().identity();
  if (eta(e) != mu(e)) return false;
  const auto profile = level_profile(eta, mu);
  if (!profile.unique_defect_level) return false;
  for (const auto& entry : profile.witness_levels)
    if (entry.relation == LevelRelation::ProperSubgroup) return false;
  return true;
}

inline std::optional<ConverseCounterexample> converse_witness(const LSubset& eta, const LSubgroupUniverse& universe) {
  const LSubset& mu = universe.parent();
  if (!is_proper(eta, mu) || !shows_maximal_level_pattern(eta, mu)) return std::nullopt;
  auto verdict = is_maximal(eta, universe, MaximalityStrategy::Definition);
  if (verdict.maximal || !verdict.between) return std::nullopt;
  return ConverseCounterexample{mu, eta, *verdict.between, *level_profile(eta, mu).unique_defect_level};
}

/// First eta in L(mu) (canonical order) that is a converse counterexample.
/// With `require_sufficient`, only etas passing sufficient_maximal_check count.
inline std::optional<ConverseCounterexample> find_converse_counterexample(const LSubgroupUniverse& universe,
                                                                          bool require_sufficient = false) {
  for (const auto& eta : universe.members()) {
    if (require_sufficient && !sufficient_maximal_check(eta, universe.parent())) continue;
    if (auto found = converse_witness(eta, universe)) return found;
  }
  return std::nullopt;
}

/// Q8 over the 5-chain 0 < a < b < c < 1 with C = {1, -1} and H = <i>:
/// mu is 1 on C, c on H \ C, a elsewhere; eta is 1 on C, a elsewhere.
inline std::pair<LSubset, LSubset> known_converse_pair() {
  const GroupPtr g = make_group(builtin_group("Q8"));
  const LatticePtr l = make_lattice(chain_lattice(5));
  auto make = [&](const char* on_h) {
    std::vector<Value> v(g->order(), l->value("a"));
    for (const char* x : {"i", "-i"}) v[g->element(x)] = l->value(on_h);
    for (const char* x : {"1", "-1"}) v[g->element(x)] = l->value("1");
    return LSubset(g, l, std::move(v));
  };
  return {make("c"), make("a")};
}

/// Looks for a converse counterexample, starting from the known pair and then
/// over random instances. Throws SearchExhausted when nothing turns up.
inline ConverseCounterexample search_converse_counterexample(std::uint64_t seed = 0, std::size_t attempts = 50,
                                                             bool include_known = true) {
  if (include_known) {
    auto [mu, eta] = known_converse_pair();
    LSubgroupUniverse universe(mu);
    if (auto found = converse_witness(eta, universe)) return *found;
  }
  SuiteSpec suite;
  suite.seed = seed;
  for (std::size_t i = 0; i < attempts; ++i) {
    const Instance inst = random_instance(trial_spec(suite, i));
    LSubgroupUniverse universe(inst.mu);
    if (auto found = find_converse_counterexample(universe)) return *found;
  }
  throw Error(ErrorKind::SearchExhausted, "no converse counterexample in " + std::to_string(attempts) + " instances");
}

}  // namespace lgrp::harness
