#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lgrp/harness.hpp"

using namespace lgrp;
using json = json_io::json;

TEST(Harness, RandomInstanceIsPinned) {
  harness::InstanceSpec spec;
  spec.seed = 0;
  spec.lattice = {harness::LatticeKind::Chain, 5};
  spec.group = "D8";
  const auto doc = harness::instance_to_json(harness::random_instance(spec));
  EXPECT_EQ(doc["mu"].dump(), R"({"e":"1","r":"b","r2":"c","r3":"b","s":"c","sr":"b","sr2":"c","sr3":"b"})");
  EXPECT_EQ(doc["eta"].dump(), R"({"e":"1","r":"b","r2":"b","r3":"b","s":"c","sr":"b","sr2":"b","sr3":"b"})");
  EXPECT_EQ(doc["raw"].dump(), R"({"e":"0","r":"a","r2":"c","r3":"0","s":"b","sr":"b","sr2":"0","sr3":"a"})");
}

TEST(Harness, RandomInstancesAreWellFormed) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    harness::SuiteSpec suite;
    const auto spec = harness::trial_spec(suite, seed);
    const auto inst = harness::random_instance(spec);
    EXPECT_TRUE(is_lsubgroup(inst.mu));
    EXPECT_TRUE(is_lsubgroup_of(inst.eta, inst.mu));
    EXPECT_TRUE(contains(inst.mu, inst.raw));
  }
}

TEST(Harness, StandardHoms) {
  const auto g = make_group(builtin_group("D8"));
  const auto homs = harness::standard_homs(g);
  EXPECT_FALSE(homs.isomorphisms.empty());
  for (const auto& f : homs.surjective) EXPECT_TRUE(f.surjective());
  for (const auto& f : homs.embeddings) EXPECT_TRUE(f.injective());
  // three index-2 subgroups give three quotient maps onto C2
  std::size_t onto_c2 = 0;
  for (const auto& f : homs.all) onto_c2 += f.target().order() == 2;
  EXPECT_EQ(onto_c2, 3u);
}

TEST(Harness, PropertiesPassOnReferenceInstances) {
  const fixtures::D8Chain d;
  const fixtures::Q8Chain q;
  harness::SuiteSpec suite;
  suite.trials = 0;
  suite.pinned = {{d.mu(), d.eta1(), d.eta4()}, {q.mu(), q.eta(), q.eta()}, {q.converse_mu(), q.converse_eta(), q.converse_theta()}};
  const auto report = harness::run_suite(suite);
  EXPECT_EQ(report.instances, 3u);
  for (const auto& p : report.properties) EXPECT_EQ(p.failures, 0u) << p.name;
}

TEST(Harness, ShrinkerReachesTrivialGroup) {
  const auto& props = harness::all_properties();
  const auto it = std::find_if(props.begin(), props.end(), [](const auto& p) { return p.name == "nongenerators_equal_frattini"; });
  ASSERT_NE(it, props.end());
  const auto g = make_group(builtin_group("V4"));
  const auto l = make_lattice(chain_lattice(4));
  const auto mu = LSubset::constant(g, l, l->top());
  const harness::Instance inst{mu, mu, mu};
  const auto small = harness::shrink(*it, inst);
  EXPECT_LE(small.mu.group().order(), 1u);
  EXPECT_EQ(small.mu.lattice().size(), 2u);
}

TEST(Harness, SuiteReportShape) {
  harness::SuiteSpec suite;
  suite.trials = 10;
  suite.shrink = false;
  const auto doc = harness::run_suite(suite).to_json();
  EXPECT_EQ(doc["instances"], 10);
  for (const auto& [name, entry] : doc["properties"].items()) {
    EXPECT_EQ(entry["trials"].get<std::size_t>() + entry["skipped"].get<std::size_t>(), 10u) << name;
    EXPECT_TRUE(entry.contains("firstCounterexample"));
  }
}

TEST(Harness, SuiteIsDeterministic) {
  harness::SuiteSpec suite;
  suite.seed = 3;
  suite.trials = 15;
  EXPECT_EQ(harness::run_suite(suite).to_json(), harness::run_suite(suite).to_json());
}

TEST(Harness, KnownConversePair) {
  const auto [mu, eta] = harness::known_converse_pair();
  const LSubgroupUniverse u(mu);
  const auto found = harness::find_converse_counterexample(u, false);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(harness::converse_witness(eta, u).has_value());
}
