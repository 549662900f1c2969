#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lgrp;
using fixtures::D8Chain;

TEST(Frattini, DihedralPhi) {
  const D8Chain d;
  const auto report = frattini(d.mu());
  EXPECT_EQ(report.phi, d.phi());
  EXPECT_EQ(report.maximal_count, 4u);
  EXPECT_FALSE(report.used_fallback);
  EXPECT_EQ(report.lambda, d.phi());
  EXPECT_TRUE(report.equality_holds);
}

TEST(Frattini, DihedralNonGenerators) {
  const D8Chain d;
  const LSubgroupUniverse u(d.mu());
  EXPECT_TRUE(is_non_generator(d.point("r2", "b"), u).non_generator);
  const auto c = is_non_generator(d.point("r2", "c"), u);
  EXPECT_FALSE(c.non_generator);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, d.eta1());
  EXPECT_EQ(generate_with(*c.witness, d.point("r2", "c")), d.mu());
  EXPECT_EQ(is_non_generator(d.point("r2", "c"), u, NonGeneratorStrategy::Both).non_generator, false);
  EXPECT_EQ(non_generator_subgroup(u), d.phi());
  EXPECT_THROW(is_non_generator(d.point("r", "b"), u), Error);
}

TEST(Frattini, LevelComparison) {
  const D8Chain d;
  const auto cmp = frattini_level_compare(d.mu(), d.l->value("b"));
  EXPECT_EQ(cmp.phi_level, d.g->set_of({"e", "r2"}));
  EXPECT_EQ(cmp.classical, d.g->trivial());
  EXPECT_TRUE(cmp.forward_inclusion);
  EXPECT_FALSE(cmp.reverse_inclusion);
  EXPECT_FALSE(cmp.tip_hypothesis_holds);
  const fixtures::Q8Chain q;
  try {
    frattini_level_compare(q.converse_mu(), q.l->value("b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisNotMet);
  }
}

TEST(Frattini, LevelComparisonNeedsChain) {
  const auto g = make_group(builtin_group("C2"));
  const auto l = make_lattice(divisor_lattice(6));
  const LSubset mu(g, l, {l->value("6"), l->value("2")});
  EXPECT_THROW(frattini_level_compare(mu, l->value("2")), Error);
  EXPECT_THROW(is_non_generator({0, l->value("1")}, mu, NonGeneratorStrategy::ChainShortcut), Error);
}

TEST(Frattini, NormalityAndConjugation) {
  const D8Chain d;
  EXPECT_TRUE(check_frattini_normal(d.mu()));
  EXPECT_TRUE(check_conjugation_closure(d.mu()).holds);
  for (Element x = 0; x < d.g->order(); ++x)
    EXPECT_TRUE(check_frattini_hom(inner_automorphism(d.g, x), d.mu()));
  // mu_a = <s> is not normal in D8
  const auto skew = fixtures::build(d.g, d.l, [](const std::string& x) { return x == "e" ? "1" : x == "s" ? "b" : "0"; });
  ASSERT_TRUE(is_lsubgroup(skew));
  try {
    check_conjugation_closure(skew);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MuNotNormalInG);
  }
}

TEST(Frattini, CrispCollapse) {
  const auto l = make_lattice(chain_lattice(2));
  for (const char* name : {"Q8", "D8", "V4", "C1", "C2", "C4", "C6", "C8"}) {
    const auto g = make_group(builtin_group(name));
    const auto chi = LSubset::characteristic(g, l, g->all());
    EXPECT_EQ(frattini(chi).phi, LSubset::characteristic(g, l, frattini_classical(*g, g->all()))) << name;
  }
}

// The next two instances are degenerate: the only L-subgroups that keep a
// point out are constant, so they do not count as maximal, yet they still
// witness generation. lambda and Phi then differ although L is a chain.
TEST(Frattini, ConstantWitnessOnTrivialGroup) {
  const auto g = make_group(builtin_group("C1"));
  const auto l = make_lattice(chain_lattice(2));
  const auto mu = LSubset::constant(g, l, l->top());
  const auto report = frattini(mu);
  EXPECT_TRUE(report.used_fallback);
  EXPECT_EQ(report.phi, mu);
  EXPECT_EQ(report.lambda, LSubset::constant(g, l, l->bottom()));
  EXPECT_FALSE(report.equality_holds);
  const auto v = is_non_generator({0, l->top()}, mu);
  EXPECT_FALSE(v.non_generator);
  EXPECT_EQ(*v.witness, LSubset::constant(g, l, l->bottom()));
  EXPECT_TRUE(is_non_generator({0, l->top()}, mu, NonGeneratorStrategy::ChainShortcut).non_generator);
  EXPECT_THROW(is_non_generator({0, l->top()}, mu, NonGeneratorStrategy::Both), std::logic_error);
}

TEST(Frattini, ConstantWitnessOnCyclicGroup) {
  const auto g = make_group(builtin_group("C2"));
  const auto l = make_lattice(FiniteLattice::chain({"0", "a", "1"}));
  const LSubset mu(g, l, {l->value("1"), l->value("a")});
  const auto report = frattini(mu);
  EXPECT_EQ(report.maximal_count, 1u);
  EXPECT_EQ(report.phi(g->identity()), l->value("1"));
  EXPECT_EQ(report.lambda(g->identity()), l->value("a"));
  EXPECT_TRUE(contains(report.phi, report.lambda));
  EXPECT_FALSE(report.equality_holds);
}

TEST(Frattini, MaximalAvoiding) {
  const D8Chain d;
  const LSubgroupUniverse u(d.mu());
  const auto nu = maximal_avoiding(u, d.phi(), d.point("r2", "c"));
  ASSERT_TRUE(nu.has_value());
  EXPECT_EQ(*nu, d.eta1());
  EXPECT_FALSE(maximal_avoiding(u, d.phi(), d.point("r2", "b")).has_value());
}
