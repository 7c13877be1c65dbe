#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "unimon/classify.hpp"
#include "unimon/io.hpp"

using namespace unimon;
using namespace testing_support;

namespace {

std::set<std::set<oracle::Vec>> as_gap_sets(const std::vector<Monoid>& ms) {
  std::set<std::set<oracle::Vec>> out;
  for (const auto& m : ms) out.insert(to_oracle(m).gaps);
  return out;
}

Verdict verdict_of(const std::vector<TheoremCheck>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c.verdict;
  }
  ADD_FAILURE() << "no check named " << name;
  return Verdict::not_applicable;
}

}  // namespace

TEST(Classify, ReducibleWithWitness) {
  const Monoid s = fixture("f_necessary");
  const auto rep = classify(s);
  EXPECT_EQ(rep.irreducibility, Irreducibility::reducible);
  ASSERT_TRUE(rep.reducibility_witness);
  const auto& [t1, t2] = *rep.reducibility_witness;
  EXPECT_EQ(intersect(t1, t2), s);
  EXPECT_LT(t1.genus(), s.genus());
  EXPECT_LT(t2.genus(), s.genus());
  EXPECT_EQ(rep.frobenius->f_two.size(), 2u);
  EXPECT_EQ(rep.frobenius->special, rep.frobenius->f_two);
  EXPECT_FALSE(rep.counts.c);
}

TEST(Classify, SubtleExamples) {
  const auto r1 = classify(fixture("subtle1"));
  EXPECT_EQ(r1.irreducibility, Irreducibility::irreducible);
  EXPECT_TRUE(is_irreducible(fixture("subtle1"), IrreducibilityMethod::oracle).irreducible);
  EXPECT_TRUE(is_irreducible(fixture("subtle1"), IrreducibilityMethod::torsion).irreducible);
  // Irreducible, yet no gap reaches C = (1,1,1) from both sides at once.
  EXPECT_FALSE(r1.strong);

  const Monoid s2 = fixture("subtle2");
  const auto r2 = classify(s2);
  EXPECT_EQ(r2.irreducibility, Irreducibility::reducible);
  EXPECT_EQ(r2.invariants.genus, 32);
  EXPECT_EQ(r2.invariants.sporadicity, 32);
  ASSERT_TRUE(r2.reducibility_witness);
  EXPECT_EQ(intersect(r2.reducibility_witness->first, r2.reducibility_witness->second), s2);
}

TEST(Classify, StronglySymmetric) {
  const auto rep = classify(fixture("f_s2"));
  EXPECT_EQ(rep.irreducibility, Irreducibility::irreducible);
  EXPECT_EQ(rep.symmetry, Symmetry::symmetric);
  EXPECT_TRUE(rep.strong);
  ASSERT_TRUE(rep.counts.c);
  EXPECT_EQ(*rep.counts.c, vec({3, 3}));
  EXPECT_EQ(*rep.counts.natural, (NgCounts{8, 8}));
  EXPECT_EQ(*rep.counts.cube_volume, 16);
  EXPECT_TRUE(rep.conditions.twosided);
}

TEST(Classify, PseudoSymmetricConverseFails) {
  const auto rep = classify(fixture("f_s22"));
  EXPECT_EQ(rep.irreducibility, Irreducibility::irreducible);
  EXPECT_EQ(rep.symmetry, Symmetry::pseudo_symmetric);
  ASSERT_TRUE(rep.pseudo_witness);
  EXPECT_EQ(*rep.pseudo_witness, vec({1, 1}));
  EXPECT_FALSE(rep.conditions.twosided);
  ASSERT_TRUE(rep.conditions.twosided_failure);
  EXPECT_EQ(*rep.conditions.twosided_failure, vec({1, 1}));
  EXPECT_EQ(*rep.counts.cube_volume, 9);
  EXPECT_EQ(*rep.counts.cube_volume, 2 * rep.invariants.genus - 1);
}

// Genus 3 in U(3,N): irreducible with F_t = {(1,0,2)}, but the gap (0,0,1)
// reaches C only on one side (C(0,0,1)^{-1} = (1,-1,1) is not even
// nonnegative) and no gap squares to C.
TEST(Classify, IrreducibleButNotStrong) {
  const Monoid s = Monoid::from_gaps(PatternGroup::full(3), {u3(0, 0, 1), u3(0, 0, 2), u3(1, 0, 2)});
  const auto rep = classify(s);
  EXPECT_EQ(rep.irreducibility, Irreducibility::irreducible);
  EXPECT_TRUE(oracle::irreducible(to_oracle(s)));
  EXPECT_EQ(rep.frobenius->f_two, std::vector<UnipotentMatrix>{u3(1, 0, 2)});
  EXPECT_EQ(right_quotient(u3(1, 0, 2), u3(0, 0, 1)), u3(1, -1, 1));
  EXPECT_FALSE(rep.strong);
  EXPECT_EQ(oracle::strong_kind(to_oracle(s), to_vec(u3(1, 0, 2))), 0);
  EXPECT_EQ(rep.symmetry, Symmetry::symmetric);
}

TEST(Classify, WholeGroupIsVacuous) {
  const auto rep = classify(Monoid::whole(PatternGroup::first_row(3)));
  EXPECT_EQ(rep.irreducibility, Irreducibility::vacuous);
  EXPECT_FALSE(rep.frobenius);
  EXPECT_THROW(is_irreducible(Monoid::whole(PatternGroup::first_row(3))), EmptyGaps);
}

TEST(Classify, NumericalSemigroups) {
  // <2,3> is symmetric, <3,4,5> is pseudo-symmetric.
  EXPECT_EQ(classify(fixture("numerical_2_3")).symmetry, Symmetry::symmetric);
  const auto rep = classify(fixture("numerical_3_4_5"));
  EXPECT_EQ(rep.symmetry, Symmetry::pseudo_symmetric);
  EXPECT_EQ(*rep.pseudo_witness, vec({1}));
}

TEST(Verify, FixtureChecks) {
  for (const auto& name : monoid_fixtures()) {
    for (const auto& c : verify_theorems(fixture(name))) {
      const bool known = name == "subtle1" && (c.name == "pf-apery-one-sided" || c.name == "strong-dichotomy");
      if (known) {
        EXPECT_EQ(c.verdict, Verdict::fail) << name << " " << c.name;
      } else {
        EXPECT_NE(c.verdict, Verdict::fail) << name << " " << c.name << ": " << c.detail;
      }
    }
  }
  const auto checks = verify_theorems(fixture("f_s22"));
  EXPECT_EQ(verdict_of(checks, "cube-volume"), Verdict::pass);
  EXPECT_EQ(verdict_of(checks, "pf-apery"), Verdict::pass);
}

// Enumeration counts, checked against the oracle's breadth-first search and
// then frozen. The first-row(2) column is the count of numerical semigroups
// by genus.
TEST(Enumerate, CountsMatchOracle) {
  struct Row {
    PatternGroup group;
    oracle::Group og;
    std::vector<std::size_t> all, irreducible;
  };
  const std::vector<Row> rows{
      {PatternGroup::first_row(2), oracle::Group::first_row(2), {1, 1, 2, 4, 7, 12, 23, 39, 67},
       {0, 1, 2, 3, 4, 5, 9, 10, 13}},
      {PatternGroup::first_row(3), oracle::Group::first_row(3), {1, 2, 7, 23, 71, 210}, {0, 2, 6, 12, 18, 28}},
      {PatternGroup::full(3), oracle::Group::full(3), {1, 3, 15, 67}, {0, 3, 12, 27}}};
  for (const auto& row : rows) {
    for (std::size_t g = 0; g < row.all.size(); ++g) {
      const auto ms = enumerate_monoids(row.group, g);
      EXPECT_EQ(ms.size(), row.all[g]) << "genus " << g;
      EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
      const auto oracle_ms = oracle::monoids_of_genus(row.og, static_cast<int>(g));
      EXPECT_EQ(as_gap_sets(ms), std::set<std::set<oracle::Vec>>(oracle_ms.begin(), oracle_ms.end()));
      EXPECT_EQ(enumerate_irreducible(row.group, g).size(), row.irreducible[g]) << "genus " << g;
    }
  }
}

TEST(Enumerate, ConverseExampleAppears) {
  const auto ms = enumerate_irreducible(PatternGroup::first_row(3), 5);
  EXPECT_NE(std::find(ms.begin(), ms.end(), fixture("f_s22")), ms.end());
}

// Both irreducibility methods against the brute-force oracle, plus the
// consequences of irreducibility, over every enumerated monoid. The strong
// dichotomy is compared with a brute-force strong check; the irreducible
// monoids that are neither strongly symmetric nor strongly pseudo-symmetric
// are counted per group and frozen.
TEST(Enumerate, IrreducibilitySweep) {
  struct Sweep {
    PatternGroup group;
    std::size_t max_genus;
    std::size_t monoids, irreducible, not_strong;
  };
  const std::vector<Sweep> sweeps{{PatternGroup::first_row(2), 8, 155, 47, 0},
                                  {PatternGroup::first_row(3), 5, 313, 66, 0},
                                  {PatternGroup::full(3), 3, 85, 42, 8}};
  for (const auto& sw : sweeps) {
    std::size_t seen = 0, irreducible = 0, not_strong = 0;
    for (std::size_t g = 1; g <= sw.max_genus; ++g) {
      for (const auto& s : enumerate_monoids(sw.group, g)) {
        ++seen;
        const auto os = to_oracle(s);
        const bool torsion = is_irreducible(s, IrreducibilityMethod::torsion).irreducible;
        const auto oracle_result = is_irreducible(s, IrreducibilityMethod::oracle);
        ASSERT_EQ(torsion, oracle_result.irreducible) << io::monoid_to_json(s).dump();
        ASSERT_EQ(torsion, oracle::irreducible(os)) << io::monoid_to_json(s).dump();
        if (oracle_result.witness) {
          EXPECT_EQ(intersect(oracle_result.witness->first, oracle_result.witness->second), s);
        }
        const auto rep = classify(s);
        if (rep.symmetry == Symmetry::symmetric) EXPECT_EQ(rep.frobenius->pf_two.size(), 1u);
        if (!torsion) continue;
        ++irreducible;
        ASSERT_EQ(rep.frobenius->f_two.size(), 1u);
        EXPECT_EQ(rep.frobenius->f_two, rep.frobenius->special);
        EXPECT_NE(rep.symmetry, Symmetry::none);
        const int kind = oracle::strong_kind(os, to_vec(rep.frobenius->f_two[0]));
        EXPECT_EQ(rep.strong, kind != 0) << io::monoid_to_json(s).dump();
        if (kind == 0) ++not_strong;
      }
    }
    EXPECT_EQ(seen, sw.monoids);
    EXPECT_EQ(irreducible, sw.irreducible);
    EXPECT_EQ(not_strong, sw.not_strong);
  }
}
