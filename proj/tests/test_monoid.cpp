#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "unimon/monoid.hpp"

using namespace unimon;
using namespace testing_support;

namespace {

Monoid p3(std::vector<std::vector<Entry>> gaps) {
  std::vector<UnipotentMatrix> gs;
  for (auto& g : gaps) gs.push_back(UnipotentMatrix::from_vector(g));
  return Monoid::from_gaps(PatternGroup::first_row(3), gs);
}

}  // namespace

TEST(Monoid, FromGapsComputesInvariants) {
  const Monoid s = fixture("f_necessary");
  EXPECT_EQ(s.generating_number(), 4);
  EXPECT_EQ(s.genus(), 4u);
  EXPECT_FALSE(s.contains(vec({0, 3})));
  EXPECT_TRUE(s.contains(vec({0, 2})));
  EXPECT_TRUE(s.contains(UnipotentMatrix::identity(3)));
}

TEST(Monoid, WholeGroup) {
  const Monoid s = Monoid::whole(PatternGroup::full(3));
  EXPECT_EQ(s.generating_number(), 1);
  EXPECT_EQ(s.genus(), 0u);
  const auto inv = invariants(s);
  EXPECT_EQ(inv.sporadicity, 1);
  EXPECT_EQ(inv.sporadic_set, std::vector<UnipotentMatrix>{UnipotentMatrix::identity(3)});
}

TEST(Monoid, NotClosedReportsWitness) {
  try {
    fixture("bad_gap_11");
    FAIL() << "expected NotClosed";
  } catch (const NotClosed& e) {
    EXPECT_EQ(e.left(), vec({1, 0}));
    EXPECT_EQ(e.right(), vec({0, 1}));
    EXPECT_EQ(e.product(), vec({1, 1}));
  }
}

TEST(Monoid, FromGapsRejectsBadInput) {
  const auto g = PatternGroup::first_row(3);
  EXPECT_THROW(Monoid::from_gaps(g, {UnipotentMatrix::identity(3)}), IdentityGap);
  EXPECT_THROW(Monoid::from_gaps(g, {UnipotentMatrix::from_upper(3, {0, 0, 1})}), OutOfPattern);
  EXPECT_THROW(Monoid::from_gaps(g, {UnipotentMatrix::from_upper(3, {0, -1, 0})}), NegativeEntry);
  EXPECT_THROW(Monoid::from_gaps(g, {UnipotentMatrix::from_vector({1})}), SizeMismatch);
}

TEST(Monoid, SubtleExampleTwoInvariants) {
  const auto inv = invariants(fixture("subtle2"));
  EXPECT_EQ(inv.genus, 32);
  EXPECT_EQ(inv.sporadicity, 32);
  EXPECT_EQ(inv.r, 4);
  EXPECT_EQ(inv.conductor, 64);
}

TEST(Monoid, ConverseFailsExampleGenus) { EXPECT_EQ(fixture("f_s22").genus(), 5u); }

TEST(Monoid, FundamentalMonoids) {
  EXPECT_EQ(fundamental_monoid(PatternGroup::first_row(3), 2), fixture("p3_fund2"));
  EXPECT_EQ(fundamental_monoid(PatternGroup::full(3), 1), Monoid::whole(PatternGroup::full(3)));
  EXPECT_EQ(fundamental_monoid(PatternGroup::full(3), 2).genus(), 7u);
}

TEST(Monoid, FromGeneratorsVerifiedAndUndecided) {
  const auto n = PatternGroup::first_row(2);
  auto c = from_generators(n, {vec({2}), vec({3})}, 8);
  ASSERT_TRUE(c.verified());
  EXPECT_EQ(c.monoid->gaps(), std::vector<UnipotentMatrix>{vec({1})});
  EXPECT_EQ(c.monoid->generating_number(), 2);

  const auto u = PatternGroup::full(3);
  c = from_generators(u, {elementary(3, 1, 2), elementary(3, 1, 3), elementary(3, 2, 3)}, 4);
  ASSERT_TRUE(c.verified());
  EXPECT_FALSE(c.monoid->has_gaps());

  EXPECT_FALSE(from_generators(PatternGroup::first_row(3), {vec({2, 0})}, 10).verified());
  EXPECT_THROW(from_generators(n, {UnipotentMatrix::identity(2)}, 8), IdentityGenerator);
  EXPECT_THROW(from_generators(n, {UnipotentMatrix::from_vector({-1})}, 8), GeneratorOutOfPattern);
}

TEST(Monoid, MinimalGeneratorsOfKnownMonoids) {
  const auto u = Monoid::whole(PatternGroup::full(3));
  EXPECT_EQ(minimal_generators(u),
            sorted({elementary(3, 1, 2), elementary(3, 1, 3), elementary(3, 2, 3)}));
  const auto gens = minimal_generators(fixture("f_s2"));
  for (const auto& m : {vec({0, 1}), vec({2, 0}), vec({5, 0}), vec({1, 4})}) {
    EXPECT_TRUE(std::binary_search(gens.begin(), gens.end(), m)) << m.str();
  }
}

TEST(Monoid, IntersectAndAdjoin) {
  const Monoid s1 = p3({{0, 1}, {0, 3}});
  const Monoid s2 = p3({{1, 0}, {3, 0}});
  EXPECT_EQ(intersect(s1, s2), fixture("f_necessary"));
  const Monoid s = fixture("f_necessary");
  EXPECT_EQ(intersect(s, Monoid::whole(s.group())), s);
  EXPECT_EQ(intersect(s, s), s);
  EXPECT_THROW(intersect(s, Monoid::whole(PatternGroup::full(3))), GroupMismatch);

  EXPECT_EQ(adjoin(s, vec({0, 3})).genus(), 3u);
  EXPECT_EQ(adjoin(fixture("p3_fund2"), vec({1, 1})).genus(), 2u);
  EXPECT_THROW(adjoin(fixture("f_s22"), vec({1, 1})), NotClosed);
  EXPECT_THROW(adjoin(s, vec({0, 2})), ValidationError);
}

// Properties over fixtures and the random sample.
class MonoidProperty : public ::testing::TestWithParam<std::size_t> {
 protected:
  static const std::vector<Monoid>& sample() {
    static const std::vector<Monoid> all = [] {
      std::vector<Monoid> out;
      for (const auto& name : monoid_fixtures()) out.push_back(fixture(name));
      for (auto& s : random_sample()) out.push_back(s);
      return out;
    }();
    return all;
  }
};

TEST_P(MonoidProperty, ClosureAgreesWithOracle) {
  const Monoid& s = sample()[GetParam()];
  if (s.genus() > 20) GTEST_SKIP() << "oracle closure check too large";
  EXPECT_TRUE(oracle::closed(to_oracle(s)));
}

TEST_P(MonoidProperty, InvariantsAreConsistent) {
  const Monoid& s = sample()[GetParam()];
  const auto inv = invariants(s);
  EXPECT_EQ(inv.genus + inv.sporadicity, inv.conductor);
  for (const auto& g : s.gaps()) EXPECT_LT(max_entry(g), s.generating_number());
  if (s.has_gaps()) {
    Entry top = 0;
    for (const auto& g : s.gaps()) top = std::max(top, max_entry(g));
    EXPECT_EQ(top + 1, s.generating_number());
  }
}

TEST_P(MonoidProperty, MinimalGeneratorsMatchOracle) {
  const Monoid& s = sample()[GetParam()];
  if (s.group().dimension() == 3 && s.generating_number() > 6) GTEST_SKIP() << "oracle box too large";
  EXPECT_EQ(to_vecs(minimal_generators(s)), oracle::minimal_generators(to_oracle(s)));
}

TEST_P(MonoidProperty, MinimalGeneratorsRegenerateAndAreMinimal) {
  const Monoid& s = sample()[GetParam()];
  const auto gens = minimal_generators(s);
  const Entry bound = 2 * s.generating_number() + 2;
  const auto closure = from_generators(s.group(), gens, bound);
  ASSERT_TRUE(closure.verified());
  EXPECT_EQ(*closure.monoid, s);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto fewer = gens;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
    const auto c = from_generators(s.group(), fewer, bound);
    EXPECT_FALSE(c.verified() && *c.monoid == s) << "dropping " << gens[k].str();
  }
}

INSTANTIATE_TEST_SUITE_P(FixturesAndRandom, MonoidProperty,
                         ::testing::Range<std::size_t>(0, monoid_fixtures().size() + 150));
