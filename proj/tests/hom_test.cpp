#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lgrp/harness.hpp"

using namespace lgrp;
using fixtures::D8Chain;

namespace {

GroupHom c4_onto_c2() {
  auto c4 = make_group(builtin_group("C4"));
  auto c2 = make_group(builtin_group("C2"));
  return GroupHom::from_generators(c4, c2, {{c4->element("g"), c2->element("g")}});
}

}  // namespace

TEST(Hom, ValidateRejectsNonHomomorphisms) {
  auto c4 = make_group(builtin_group("C4"));
  auto c2 = make_group(builtin_group("C2"));
  EXPECT_NO_THROW(GroupHom::validate(c4, c2, {0, 1, 0, 1}));
  try {
    GroupHom::validate(c4, c2, {0, 1, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(Hom, FromGeneratorsExtends) {
  const auto f = c4_onto_c2();
  EXPECT_TRUE(f.surjective());
  EXPECT_FALSE(f.injective());
  EXPECT_EQ(f(f.source().element("g2")), f.target().identity());
  auto c3 = make_group(builtin_group("C3"));
  auto c2 = make_group(builtin_group("C2"));
  EXPECT_THROW(GroupHom::from_generators(c3, c2, {{c3->element("g"), c2->element("g")}}), Error);
}

TEST(Hom, InnerAutomorphismIsIsomorphism) {
  const D8Chain d;
  const auto f = inner_automorphism(d.g, d.g->element("s"));
  EXPECT_TRUE(f.is_isomorphism());
  EXPECT_EQ(f(d.g->element("r")), d.g->element("r3"));
  EXPECT_THROW(require_isomorphism(c4_onto_c2()), Error);
}

TEST(Hom, PushforwardTakesFibreJoins) {
  const auto f = c4_onto_c2();
  const auto l = make_lattice(FiniteLattice::chain({"0", "a", "1"}));
  const LSubset mu(f.source_ptr(), l, {l->value("1"), l->value("0"), l->value("a"), l->value("0")});
  const auto image = pushforward(f, mu);
  EXPECT_EQ(image(f.target().identity()), l->value("1"));
  EXPECT_EQ(image(f.target().element("g")), l->value("0"));
  const auto back = pullback(f, image);
  EXPECT_EQ(back(f.source().element("g2")), l->value("1"));
  EXPECT_TRUE(contains(back, mu));
}

TEST(Hom, GenerateCommutesWithImages) {
  const D8Chain d;
  const auto homs = harness::standard_homs(d.g);
  for (const auto& f : homs.all)
    for (const auto& s : {d.eta3(), d.eta4().with_value(d.g->element("r"), d.l->value("1"))})
      EXPECT_EQ(generate(pushforward(f, s)), pushforward(f, generate(s)));
}

TEST(Hom, GeneratePreimageNeedsSurjectivity) {
  // C1 into C2: theta lives off the image, so the two sides differ.
  auto c1 = make_group(builtin_group("C1"));
  auto c2 = make_group(builtin_group("C2"));
  const auto l = make_lattice(FiniteLattice::chain({"0", "1"}));
  const auto f = GroupHom::validate(c1, c2, {0});
  const LSubset theta(c2, l, {l->value("0"), l->value("1")});
  const auto lhs = generate(pullback(f, theta));
  const auto rhs = pullback(f, generate(theta));
  EXPECT_EQ(lhs(0), l->value("0"));
  EXPECT_EQ(rhs(0), l->value("1"));
  EXPECT_FALSE(lhs == rhs);

  const D8Chain d;
  for (const auto& g : harness::standard_homs(d.g).surjective)
    for (const auto& s : {d.eta2(), d.phi()}) {
      const auto image = pushforward(g, s);
      EXPECT_EQ(generate(pullback(g, image)), pullback(g, generate(image)));
    }
}

TEST(Hom, MaximalityTransportsUnderAutomorphisms) {
  const D8Chain d;
  const auto mu = d.mu();
  const auto f = inner_automorphism(d.g, d.g->element("r"));
  for (const auto& eta : {d.eta1(), d.eta2(), d.eta3(), d.eta4()}) {
    const auto there = transport_maximal(f, eta, mu);
    EXPECT_TRUE(there.maximal);
    const auto back = transport_maximal_back(f, there.image, there.image_parent);
    EXPECT_TRUE(back.maximal);
    EXPECT_EQ(back.image, eta);
  }
}

TEST(Hom, MismatchedCarriers) {
  const D8Chain d;
  const auto f = c4_onto_c2();
  EXPECT_THROW(pushforward(f, d.mu()), Error);
  EXPECT_THROW(pullback(f, d.mu()), Error);
}
