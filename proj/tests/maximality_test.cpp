#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lgrp/harness.hpp"

using namespace lgrp;
using fixtures::D8Chain;
using fixtures::Q8Chain;

namespace {

// Every L-subgroup of mu by scanning all value assignments below mu.
std::vector<LSubset> brute_universe(const LSubset& mu) {
  const auto& g = mu.group();
  const auto& l = mu.lattice();
  std::vector<std::vector<Value>> choices(g.order());
  for (Element x = 0; x < g.order(); ++x) choices[x] = l.down_set(mu(x));
  std::vector<LSubset> out;
  std::vector<std::size_t> digit(g.order(), 0);
  for (bool more = true; more;) {
    std::vector<Value> v(g.order());
    for (Element x = 0; x < g.order(); ++x) v[x] = choices[x][digit[x]];
    LSubset s(mu.group_ptr(), mu.lattice_ptr(), std::move(v));
    if (is_lsubgroup(s, Check::Pointwise)) out.push_back(std::move(s));
    more = false;
    for (Element x = 0; x < g.order(); ++x) {
      if (++digit[x] < choices[x].size()) {
        more = true;
        break;
      }
      digit[x] = 0;
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<LSubset> brute_maximals(const LSubset& mu) {
  const auto all = brute_universe(mu);
  std::vector<LSubset> out;
  for (const auto& eta : all) {
    if (is_constant(eta) || eta == mu) continue;
    bool top = true;
    for (const auto& theta : all)
      if (properly_contains(theta, eta) && !(theta == mu)) top = false;
    if (top) out.push_back(eta);
  }
  return out;
}

std::size_t naive_candidates(const LSubset& mu) {
  std::size_t n = 1;
  for (Element x = 0; x < mu.size(); ++x) n *= mu.lattice().down_set(mu(x)).size();
  return n;
}

}  // namespace

TEST(Enumeration, MatchesBruteForceOnReferenceInstances) {
  const D8Chain d;
  const Q8Chain q;
  for (const auto& mu : {d.mu(), q.mu(), q.converse_mu()}) {
    const LSubgroupUniverse u(mu);
    EXPECT_EQ(u.members(), brute_universe(mu));
  }
  EXPECT_EQ(naive_candidates(d.mu()), 2880u);
  EXPECT_LE(naive_candidates(q.mu()), 3600u);
}

TEST(Enumeration, MatchesBruteForceOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    harness::InstanceSpec spec;
    spec.seed = seed;
    spec.group = seed % 2 ? "V4" : "C6";
    spec.lattice = {seed % 4 ? harness::LatticeKind::Chain : harness::LatticeKind::ProductOfChains, 3, 2};
    const auto mu = harness::random_instance(spec).mu;
    EXPECT_EQ(LSubgroupUniverse(mu).members(), brute_universe(mu)) << seed;
    EXPECT_EQ(maximal_lsubgroups(mu), brute_maximals(mu)) << seed;
  }
}

TEST(Enumeration, BudgetIsEnforced) {
  const D8Chain d;
  try {
    LSubgroupUniverse u(d.mu(), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InstanceTooLarge);
  }
}

TEST(Maximality, QuaternionInstance) {
  const Q8Chain q;
  const auto verdict = is_maximal(q.eta(), q.mu(), MaximalityStrategy::Both);
  EXPECT_TRUE(verdict.maximal);
  EXPECT_EQ(verdict.reason, MaximalityReason::Maximal);
  EXPECT_EQ(tip_relation(q.eta(), q.mu()), TipRelation::Equal);
  const auto profile = level_profile(q.eta(), q.mu());
  EXPECT_EQ(profile.defect_count(), 1u);
  EXPECT_EQ(*profile.unique_defect_level, q.l->value("1"));
}

TEST(Maximality, ConverseFails) {
  const Q8Chain q;
  const auto verdict = is_maximal(q.converse_eta(), q.converse_mu(), MaximalityStrategy::Both);
  EXPECT_FALSE(verdict.maximal);
  EXPECT_EQ(verdict.reason, MaximalityReason::IntermediateExists);
  ASSERT_TRUE(verdict.between.has_value());
  EXPECT_EQ(*verdict.between, q.converse_theta());
  const auto profile = level_profile(q.converse_eta(), q.converse_mu());
  ASSERT_TRUE(profile.unique_defect_level.has_value());
  EXPECT_EQ(*profile.unique_defect_level, q.l->value("c"));
  EXPECT_TRUE(harness::shows_maximal_level_pattern(q.converse_eta(), q.converse_mu()));
}

TEST(Maximality, NotProperVerdicts) {
  const D8Chain d;
  const auto mu = d.mu();
  EXPECT_EQ(is_maximal(mu, mu).reason, MaximalityReason::NotProper);
  EXPECT_EQ(is_maximal(LSubset::constant(d.g, d.l, d.l->value("a")), mu).reason, MaximalityReason::NotProper);
  EXPECT_THROW(tip_relation(d.phi(), mu), Error);
}

TEST(Maximality, LPointWitness) {
  const D8Chain d;
  const auto v = is_maximal(d.phi(), d.mu(), MaximalityStrategy::LPoint);
  EXPECT_FALSE(v.maximal);
  EXPECT_EQ(v.reason, MaximalityReason::LPointDoesNotGenerate);
  ASSERT_TRUE(v.point.has_value());
  EXPECT_TRUE(lpoint_in(*v.point, d.mu()));
  EXPECT_FALSE(lpoint_in(*v.point, d.phi()));
  EXPECT_FALSE(generate_with(d.phi(), *v.point) == d.mu());
}

TEST(Maximality, DihedralMaximals) {
  const D8Chain d;
  const auto maximals = maximal_lsubgroups(d.mu());
  std::vector<LSubset> expected{d.eta1(), d.eta2(), d.eta3(), d.eta4()};
  std::sort(expected.begin(), expected.end(), canonical_less);
  EXPECT_EQ(maximals, expected);
  EXPECT_EQ(tip_relation(d.eta4(), d.mu()), TipRelation::MuCoversEta);
  for (const auto& eta : {d.eta1(), d.eta2(), d.eta3()}) {
    EXPECT_EQ(tip_relation(eta, d.mu()), TipRelation::Equal);
    EXPECT_TRUE(sufficient_maximal_check(eta, d.mu()));
    EXPECT_EQ(level_profile(eta, d.mu()).defect_count(), 1u);
  }
  EXPECT_EQ(*level_profile(d.eta1(), d.mu()).unique_defect_level, d.l->value("c"));
  EXPECT_EQ(*level_profile(d.eta2(), d.mu()).unique_defect_level, d.l->value("b"));
  EXPECT_EQ(*level_profile(d.eta3(), d.mu()).unique_defect_level, d.l->value("a"));
}

TEST(Maximality, StrategiesAgreeOnWholeUniverse) {
  const D8Chain d;
  const LSubgroupUniverse u(d.mu());
  for (const auto& eta : u.members())
    EXPECT_EQ(is_maximal(eta, u, MaximalityStrategy::Definition).maximal,
              is_maximal(eta, u, MaximalityStrategy::LPoint).maximal);
}

TEST(Maximality, ConverseSearch) {
  const auto found = harness::search_converse_counterexample(0, 50, false);
  EXPECT_FALSE(is_maximal(found.eta, found.mu).maximal);
  EXPECT_TRUE(properly_contains(found.theta, found.eta));
  EXPECT_TRUE(properly_contains(found.mu, found.theta));
  EXPECT_TRUE(harness::shows_maximal_level_pattern(found.eta, found.mu));
}
