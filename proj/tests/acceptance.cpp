// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset; the exit status is non-zero if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lgrp/harness.hpp"

using namespace lgrp;
using fixtures::D8Chain;
using fixtures::Q8Chain;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Result quaternion_maximal() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  const Q8Chain q;
  r.require(candidate_space(q.mu()) <= 3600, "candidate space " + std::to_string(candidate_space(q.mu())));
  const LSubgroupUniverse u(q.mu());
  r.require(is_maximal(q.eta(), u, MaximalityStrategy::Both).maximal, "eta not maximal");
  const double t = seconds_since(start);
  r.require(t < 5.0, "took " + std::to_string(t) + " s");
  return r;
}

Result converse_instance() {
  Result r;
  const Q8Chain q;
  const auto verdict = is_maximal(q.converse_eta(), q.converse_mu(), MaximalityStrategy::Both);
  r.require(!verdict.maximal, "eta reported maximal");
  r.require(verdict.between.has_value() && *verdict.between == q.converse_theta(), "witness differs from theta");
  const auto profile = level_profile(q.converse_eta(), q.converse_mu());
  r.require(profile.defect_count() == 1, std::to_string(profile.defect_count()) + " defect levels");
  r.require(profile.unique_defect_level == q.l->value("c"), "defect not at c");
  for (const auto& e : profile.witness_levels)
    if (e.level == q.l->value("c")) {
      r.require(e.relation == LevelRelation::ProperMaximalSubgroup, "defect is not a maximal subgroup");
      r.require(e.eta_level == q.g->set_of({"1", "-1"}), "eta_c is not C");
      r.require(e.mu_level == q.g->set_of({"1", "-1", "i", "-i"}), "mu_c is not H");
    }
  return r;
}

Result dihedral_frattini() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  const D8Chain d;
  r.require(candidate_space(d.mu()) <= 2880, "candidate space " + std::to_string(candidate_space(d.mu())));
  const auto maximals = maximal_lsubgroups(d.mu());
  std::vector<LSubset> expected{d.eta1(), d.eta2(), d.eta3(), d.eta4()};
  std::sort(expected.begin(), expected.end(), canonical_less);
  r.require(maximals == expected, std::to_string(maximals.size()) + " maximals, not the four expected");
  r.require(frattini(d.mu()).phi == d.phi(), "phi differs");
  const double t = seconds_since(start);
  r.require(t < 10.0, "took " + std::to_string(t) + " s");
  return r;
}

Result dihedral_non_generators() {
  Result r;
  const D8Chain d;
  const LSubgroupUniverse u(d.mu());
  r.require(is_non_generator(d.point("r2", "b"), u).non_generator, "b_r2 reported a generator");
  const auto c = is_non_generator(d.point("r2", "c"), u);
  r.require(!c.non_generator, "c_r2 reported a non-generator");
  r.require(c.witness.has_value() && *c.witness == d.eta1(), "witness differs");
  r.require(non_generator_subgroup(u) == frattini(u).phi, "lambda differs from phi");
  return r;
}

Result level_comparison() {
  Result r;
  const D8Chain d;
  const auto cmp = frattini_level_compare(d.mu(), d.l->value("b"));
  r.require(cmp.phi_level == d.g->set_of({"e", "r2"}), "(phi)_b differs");
  r.require(frattini_classical(*d.g, d.g->set_of({"e", "r2", "s", "sr2"})) == d.g->trivial(), "classical phi of K");
  r.require(cmp.forward_inclusion, "forward inclusion false");
  r.require(!cmp.reverse_inclusion, "reverse inclusion true");
  return r;
}

Result oracle_equivalence() {
  Result r;
  harness::SuiteSpec suite;
  suite.seed = 6;
  suite.lattices = {{harness::LatticeKind::Chain, 2},
                    {harness::LatticeKind::Chain, 3},
                    {harness::LatticeKind::Chain, 4},
                    {harness::LatticeKind::Chain, 5},
                    {harness::LatticeKind::ProductOfChains, 2, 2}};
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const auto inst = harness::random_instance(harness::trial_spec(suite, i));
    for (const auto& s : {inst.mu, inst.eta, inst.raw})
      if (!(generate(s) == generate_oracle(s, {8, 5}))) ++mismatches;
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return r;
}

Result strategy_agreement() {
  Result r;
  const D8Chain d;
  const Q8Chain q;
  std::vector<LSubset> parents{q.mu(), q.converse_mu(), d.mu()};
  harness::SuiteSpec suite;
  suite.seed = 7;
  for (std::size_t i = 0; i < 50; ++i) parents.push_back(harness::random_instance(harness::trial_spec(suite, i)).mu);
  std::size_t disagreements = 0, checked = 0;
  for (const auto& mu : parents) {
    const LSubgroupUniverse u(mu);
    for (const auto& eta : u.members()) {
      ++checked;
      if (is_maximal(eta, u, MaximalityStrategy::Definition).maximal !=
          is_maximal(eta, u, MaximalityStrategy::LPoint).maximal)
        ++disagreements;
    }
  }
  r.require(disagreements == 0, std::to_string(disagreements) + " of " + std::to_string(checked) + " disagree");
  if (r.pass) r.detail = std::to_string(checked) + " verdicts";
  return r;
}

Result property_suite() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  harness::SuiteSpec suite;
  const auto report = harness::run_suite(suite);
  for (const auto& p : report.properties)
    if (p.failures) {
      std::ostringstream msg;
      msg << p.name << " failed " << p.failures << "/" << p.trials;
      if (p.first_counterexample) msg << " (shrunk: " << (*p.first_counterexample)["instance"]["mu"].dump() << ")";
      r.require(false, msg.str());
    }
  const double t = seconds_since(start);
  r.require(t < 300.0, "took " + std::to_string(t) + " s");
  return r;
}

Result crisp_collapse() {
  Result r;
  const auto l = make_lattice(chain_lattice(2));
  for (const char* name : {"Q8", "D8", "V4", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"}) {
    const auto g = make_group(builtin_group(name));
    const auto phi = frattini(LSubset::characteristic(g, l, g->all())).phi;
    r.require(phi == LSubset::characteristic(g, l, frattini_classical(*g, g->all())), name);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"Q8 maximal L-subgroup", quaternion_maximal},
      {"Q8 converse counterexample", converse_instance},
      {"D8 maximals and Phi", dihedral_frattini},
      {"D8 non-generators", dihedral_non_generators},
      {"level comparison", level_comparison},
      {"generate vs oracle", oracle_equivalence},
      {"maximality strategies", strategy_agreement},
      {"property suite", property_suite},
      {"crisp collapse", crisp_collapse},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::strtoul(argv[i], nullptr, 10));
  if (selected.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);

  bool all = true;
  for (std::size_t n : selected) {
    if (n < 1 || n > criteria.size()) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto& [name, run] = criteria[n - 1];
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    all = all && res.pass;
    std::cout << std::fixed << std::setprecision(3) << "criterion " << n << " [" << name << "]: " << (res.pass ? "PASS" : "FAIL") << " ("
              << seconds_since(start) << " s)" << (res.detail.empty() ? "" : " " + res.detail) << std::endl;
  }
  return all ? 0 : 1;
}
