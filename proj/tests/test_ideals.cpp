#include <gtest/gtest.h>

#include <map>
#include <optional>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "unimon/ideals.hpp"
#include "unimon/invariants.hpp"
#include "unimon/io.hpp"

using namespace unimon;
using namespace testing_support;

namespace {

using GapSet = std::vector<UnipotentMatrix>;

TorsionElement torsion(const Monoid& s, GapSet part) {
  std::sort(part.begin(), part.end());
  return TorsionElement(s, std::move(part));
}

std::set<oracle::Vec> to_set(const GapSet& xs) {
  std::set<oracle::Vec> out;
  for (const auto& x : xs) out.insert(to_vec(x));
  return out;
}

// Gap parts of the lattice nodes of P(3,N)_2 by name: T1 = S u (1,0)S,
// T2 = S u (1,1)S, T3 = S u (0,1)S, T4 = T1 u T2, T5 = T2 u T3, T6 = G(N).
std::map<std::string, GapSet> p3_nodes() {
  return {{"T0", {}},
          {"T1", {vec({1, 0})}},
          {"T2", {vec({1, 1})}},
          {"T3", {vec({0, 1})}},
          {"T4", sorted({vec({1, 0}), vec({1, 1})})},
          {"T5", sorted({vec({0, 1}), vec({1, 1})})},
          {"T6", sorted({vec({0, 1}), vec({1, 0}), vec({1, 1})})}};
}

// Torsion monoid when it has at most limit elements.
std::optional<std::vector<TorsionElement>> small_torsion(const Monoid& s, std::size_t limit) {
  try {
    return torsion_monoid(s, limit);
  } catch (const Infeasible&) {
    return std::nullopt;
  }
}

}  // namespace

TEST(Ideal, GeneratedMembership) {
  const Monoid s = fixture("p3_fund2");
  const auto one = ideal_from_generators(s, Side::right, {s.group().identity()});
  for (const auto& x : enumerate_box(s.group(), 5)) EXPECT_EQ(one.contains(x), s.contains(x)) << x.str();

  const auto i = ideal_from_generators(s, Side::right, {vec({1, 1})});
  EXPECT_TRUE(ideal_contains(i, vec({1, 1})));
  EXPECT_TRUE(ideal_contains(i, vec({1, 3})));
  // (1,1)^{-1}(2,2) = (1,1) is a gap.
  EXPECT_FALSE(ideal_contains(i, vec({2, 2})));
  EXPECT_THROW(ideal_from_generators(s, Side::right, {}), EmptyGeneratorSet);
  EXPECT_THROW(i.complement(), NotCofinite);
}

TEST(Ideal, MinimalGenerators) {
  const Monoid s = fixture("p3_fund2");
  const auto whole = RelativeIdeal::cofinite(s, Side::twosided, s.gaps());
  EXPECT_EQ(ideal_min_generators(whole), GapSet{s.group().identity()});

  const auto doc = fixture_json("p3_fund2_ideal_monoid");
  const Monoid base = io::monoid_from_json(doc["monoid"]);
  const auto t2 = io::ideal_from_json(doc["ideal"], base);
  EXPECT_EQ(ideal_min_generators(t2), sorted({s.group().identity(), vec({1, 1})}));

  const auto doc2 = fixture_json("p3_fund2_ideal_not_monoid");
  const auto t13 = io::ideal_from_json(doc2["ideal"], io::monoid_from_json(doc2["monoid"]));
  EXPECT_EQ(ideal_min_generators(t13), sorted({s.group().identity(), vec({0, 1}), vec({1, 0})}));

  const auto gen = ideal_from_generators(s, Side::twosided, {vec({0, 1}), vec({1, 0})});
  EXPECT_EQ(ideal_min_generators(gen, 2), sorted({vec({0, 1}), vec({1, 0})}));
  EXPECT_THROW(ideal_min_generators(gen), NotCofinite);
}

TEST(Ideal, CofiniteMustBeStable) {
  const Monoid s = fixture("f_necessary");
  // (0,1) is in the ideal but (0,1)(0,2) = (0,3) is not.
  EXPECT_THROW(RelativeIdeal::cofinite(s, Side::right, {vec({0, 3})}), NotStable);
  EXPECT_NO_THROW(RelativeIdeal::cofinite(s, Side::right, {vec({0, 1}), vec({0, 3})}));
}

TEST(Ideal, PseudoFrobeniusOfCofiniteIdeals) {
  const Monoid s = fixture("p3_fund2");
  const auto as_ideal = RelativeIdeal::cofinite(s, Side::twosided, s.gaps());
  EXPECT_EQ(pf_of_cofinite_ideal(as_ideal, Side::twosided), pseudo_frobenius(s, Side::twosided));
  const auto t2 = torsion(s, {vec({1, 1})}).ideal();
  EXPECT_EQ(pf_of_cofinite_ideal(t2, Side::twosided), sorted({vec({0, 1}), vec({1, 0})}));
  EXPECT_THROW(pf_of_cofinite_ideal(RelativeIdeal::cofinite(s, Side::twosided, {}), Side::twosided),
               EmptyGaps);
}

TEST(Ideal, ProductsUnionsIntersections) {
  const Monoid s = fixture("p3_fund2");
  auto nodes = p3_nodes();
  auto ideal = [&](const std::string& name) { return torsion(s, nodes[name]).ideal(); };
  auto gap_part = [&](const RelativeIdeal& i) {
    GapSet out;
    for (const auto& g : s.gaps()) {
      if (i.contains(g)) out.push_back(g);
    }
    return out;
  };
  const auto sd = RelativeIdeal::cofinite(s, Side::twosided, s.gaps());
  EXPECT_EQ(gap_part(ideal_product(ideal("T1"), sd)), nodes["T1"]);
  EXPECT_EQ(gap_part(ideal_product(sd, ideal("T1"))), nodes["T1"]);
  EXPECT_EQ(gap_part(ideal_product(ideal("T1"), ideal("T3"))), nodes["T6"]);
  EXPECT_EQ(gap_part(ideal_product(ideal("T2"), ideal("T2"))), nodes["T2"]);
  EXPECT_EQ(gap_part(ideal_union(ideal("T1"), ideal("T3"))), sorted({vec({0, 1}), vec({1, 0})}));
  EXPECT_EQ(gap_part(ideal_intersection(ideal("T4"), ideal("T5"))), nodes["T2"]);
  EXPECT_FALSE(torsion(s, {vec({0, 1}), vec({1, 0})}).is_idempotent());
  EXPECT_TRUE(torsion(s, nodes["T2"]).is_idempotent());
}

TEST(Torsion, FundamentalMonoidLattice) {
  const Monoid s = fixture("p3_fund2");
  const auto os = to_oracle(s);
  const auto all = torsion_monoid(s);
  ASSERT_EQ(all.size(), oracle::torsion_elements(os).size());
  EXPECT_EQ(all.size(), 8u);

  const auto lat = torsion_idempotents(s);
  ASSERT_EQ(lat.nodes.size(), 7u);
  std::map<GapSet, std::string> name_of;
  for (const auto& [name, part] : p3_nodes()) name_of[part] = name;
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : lat.hasse_edges) {
    edges.insert({name_of.at(lat.nodes[lo].gap_part()), name_of.at(lat.nodes[hi].gap_part())});
  }
  const std::set<std::pair<std::string, std::string>> expect{
      {"T0", "T1"}, {"T0", "T2"}, {"T0", "T3"}, {"T1", "T4"}, {"T2", "T4"},
      {"T2", "T5"}, {"T3", "T5"}, {"T4", "T6"}, {"T5", "T6"}};
  EXPECT_EQ(edges, expect);
  std::set<std::string> minimal;
  for (auto k : lat.minimal_nontrivial) minimal.insert(name_of.at(lat.nodes[k].gap_part()));
  EXPECT_EQ(minimal, (std::set<std::string>{"T1", "T2", "T3"}));
}

TEST(Torsion, SmallLattices) {
  const auto whole = torsion_idempotents(Monoid::whole(PatternGroup::full(3)));
  EXPECT_EQ(whole.nodes.size(), 1u);
  EXPECT_TRUE(whole.hasse_edges.empty());

  const auto s2 = torsion_idempotents(fixture("f_s2"));
  ASSERT_EQ(s2.minimal_nontrivial.size(), 1u);
  EXPECT_EQ(s2.nodes[s2.minimal_nontrivial[0]].gap_part(), GapSet{vec({3, 3})});

  EXPECT_GE(torsion_idempotents(fixture("f_necessary")).minimal_nontrivial.size(), 2u);
  const auto overs = oversemigroups(fixture("f_necessary"));
  const Monoid s1 = Monoid::from_gaps(PatternGroup::first_row(3), {vec({0, 1}), vec({0, 3})});
  EXPECT_NE(std::find(overs.begin(), overs.end(), s1), overs.end());
}

// <3,4,5> has gaps {1,2}; adjoining 2 gives <2,3>, then N. Adjoining 1 alone
// is impossible, so the idempotents form a path.
TEST(Torsion, NumericalChain) {
  const auto lat = torsion_idempotents(fixture("numerical_3_4_5"));
  ASSERT_EQ(lat.nodes.size(), 3u);
  EXPECT_EQ(lat.hasse_edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

class TorsionProperty : public ::testing::TestWithParam<std::size_t> {
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

TEST_P(TorsionProperty, ElementsMatchOracle) {
  const Monoid& s = sample()[GetParam()];
  if (s.genus() > 14) GTEST_SKIP() << "2^genus subsets too many for the oracle";
  const auto os = to_oracle(s);
  std::set<std::set<oracle::Vec>> ours, theirs;
  for (const auto& t : torsion_monoid(s)) ours.insert(to_set(t.gap_part()));
  for (const auto& t : oracle::torsion_elements(os)) theirs.insert(t);
  EXPECT_EQ(ours, theirs);

  std::set<std::set<oracle::Vec>> overs;
  for (const auto& t : oversemigroups(s)) overs.insert(to_set(t.gaps()));
  std::set<std::set<oracle::Vec>> oracle_overs;
  for (const auto& gaps : oracle::oversemigroups(os)) oracle_overs.insert(gaps);
  EXPECT_EQ(overs, oracle_overs);
}

// An element is idempotent exactly when S u A is a monoid, and idempotents
// are closed under intersection.
TEST_P(TorsionProperty, IdempotentsAreOversemigroups) {
  const Monoid& s = sample()[GetParam()];
  const auto bounded = small_torsion(s, 400);
  if (!bounded) GTEST_SKIP() << "torsion monoid too large";
  const auto& all = *bounded;
  std::set<GapSet> idem;
  for (const auto& t : all) {
    GapSet rest;
    std::set_difference(s.gaps().begin(), s.gaps().end(), t.gap_part().begin(), t.gap_part().end(),
                        std::back_inserter(rest));
    bool valid = true;
    try {
      Monoid::from_gaps(s.group(), rest);
    } catch (const NotClosed&) {
      valid = false;
    }
    EXPECT_EQ(t.is_idempotent(), valid);
    if (valid) idem.insert(t.gap_part());
  }
  for (const auto& a : idem) {
    for (const auto& b : idem) {
      GapSet meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
      EXPECT_TRUE(idem.count(meet));
    }
  }
  EXPECT_EQ(torsion_idempotents(s).nodes.size(), idem.size());
}

// Finite Cayley table: associative, S is the identity, no nontrivial units,
// products agree with the oracle; for first-row groups idempotents commute.
TEST_P(TorsionProperty, CayleyTable) {
  const Monoid& s = sample()[GetParam()];
  const auto bounded = small_torsion(s, 100);
  if (!bounded) GTEST_SKIP() << "Cayley table too large";
  const auto& all = *bounded;
  const auto os = to_oracle(s);
  const std::size_t m = all.size();
  std::map<GapSet, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index[all[k].gap_part()] = k;
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto p = torsion_product(all[a], all[b]);
      ASSERT_TRUE(index.count(p.gap_part()));
      table[a][b] = index[p.gap_part()];
      ASSERT_EQ(to_set(p.gap_part()),
                oracle::torsion_product(os, to_set(all[a].gap_part()), to_set(all[b].gap_part())));
    }
  }
  const std::size_t id = index.at({});
  for (std::size_t a = 0; a < m; ++a) {
    EXPECT_EQ(table[a][id], a);
    EXPECT_EQ(table[id][a], a);
    for (std::size_t b = 0; b < m; ++b) {
      if (a != id && table[a][b] == id) ADD_FAILURE() << "unit " << a;
      for (std::size_t c = 0; c < m; ++c) ASSERT_EQ(table[table[a][b]][c], table[a][table[b][c]]);
    }
  }
  if (s.group() == PatternGroup::first_row(s.group().n())) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (!all[a].is_idempotent() || !all[b].is_idempotent()) continue;
        EXPECT_EQ(table[a][b], table[b][a]);
        EXPECT_TRUE(all[table[a][b]].is_idempotent());
      }
    }
  }
}

// A torsion element's ideal equals S M S for its minimal generators M,
// checked on a box.
TEST_P(TorsionProperty, GeneratedAgreesWithCofinite) {
  const Monoid& s = sample()[GetParam()];
  const auto bounded = small_torsion(s, 200);
  if (!bounded || (s.group().dimension() == 3 && s.generating_number() > 5)) GTEST_SKIP() << "too large";
  const auto& all = *bounded;
  const Entry bound = s.generating_number() + 2;
  for (std::size_t k = 0; k < all.size(); k += 1 + all.size() / 8) {
    const auto cof = all[k].ideal();
    const auto gens = ideal_min_generators(cof);
    const auto gen = ideal_from_generators(s, Side::twosided, gens);
    for (const auto& x : enumerate_box(s.group(), bound)) {
      ASSERT_EQ(gen.contains(x), cof.contains(x)) << x.str();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(FixturesAndRandom, TorsionProperty,
                         ::testing::Range<std::size_t>(0, monoid_fixtures().size() + 150));
