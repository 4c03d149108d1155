#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cpd/lattice.hpp"
#include "cpd/modrep.hpp"
#include "cpd/p_structure.hpp"
#include "groups.hpp"
#include "oracles.hpp"

namespace
{

using namespace cpd;
namespace tg = testing_groups;

oracle::Members members_of(SubgroupHandle const &h) { return {h.members().begin(), h.members().end()}; }

std::set<oracle::Members> expand_classes(FiniteGroup const &g,
                                         std::vector<SubgroupHandle> const &reps)
{
  std::set<oracle::Members> out;
  for (auto const &r : reps) {
    for (auto const &c : conjugacy_class(g, r))
      out.insert(members_of(c));
  }
  return out;
}

struct NamedGroup
{
  std::string name;
  FiniteGroup (*make)();
};

class LatticeCompleteness : public ::testing::TestWithParam<NamedGroup>
{};

TEST_P(LatticeCompleteness, ConjugatesOfRepresentativesAreAllSubgroups)
{
  FiniteGroup g = GetParam().make();
  auto reps = subgroups_up_to_conjugacy(g, OrderFilter::all());
  auto oracle_subs = oracle::all_subgroups(g);
  EXPECT_EQ(expand_classes(g, reps), oracle_subs);
  EXPECT_EQ(reps.size(), oracle::conjugacy_partition(g, oracle_subs).size());
}

INSTANTIATE_TEST_SUITE_P(
  SmallGroups, LatticeCompleteness,
  ::testing::Values(NamedGroup{"C2cubed", tg::elementary_abelian_2_cubed},
                    NamedGroup{"D8", [] { return tg::from_catalog("D8"); }},
                    NamedGroup{"A4", [] { return tg::from_catalog("A4"); }},
                    NamedGroup{"S4", tg::symmetric4}, NamedGroup{"SL23", tg::sl23},
                    NamedGroup{"C3onC4squared", tg::c3_on_c4_squared}),
  [](auto const &info) { return info.param.name; });

TEST(Lattice, FilterKeepsOnlyTargetOrders)
{
  FiniteGroup g = tg::from_catalog("A4");
  EXPECT_TRUE(subgroups_up_to_conjugacy(g, OrderFilter::exactly({6})).empty());
  auto ones = subgroups_up_to_conjugacy(g, OrderFilter::exactly({1}));
  ASSERT_EQ(ones.size(), 1u);
  EXPECT_TRUE(ones.front().is_trivial());
}

TEST(Lattice, Psl27HasOneClassOfOrder8)
{
  FiniteGroup g = tg::from_catalog("PSL(2,7)");
  auto reps = subgroups_up_to_conjugacy(g, OrderFilter::exactly({8}));
  ASSERT_EQ(reps.size(), 1u);
  SubgroupHandle const &p = reps.front();
  EXPECT_FALSE(is_abelian(g, p));
  std::uint32_t exponent = 1;
  for (auto x : p.members())
    exponent = std::max(exponent, g.element_order(x));
  EXPECT_EQ(exponent, 4u);
  EXPECT_EQ(conjugacy_class(g, p).size(), 21u);
}

TEST(Lattice, NonsolvableSeedingFindsA5InPsl211)
{
  FiniteGroup g = tg::from_catalog("PSL(2,11)");
  // PSL(2,11) has two classes of A5, of index 11.
  auto reps = subgroups_up_to_conjugacy(g, OrderFilter::exactly({60}));
  EXPECT_EQ(reps.size(), 2u);
  for (auto const &r : reps)
    EXPECT_FALSE(is_solvable(subgroup_as_group(g, r)));
}

TEST(Lattice, CapExceededAboveLatticeCap)
{
  FiniteGroup g = tg::from_catalog("A7");
  Caps caps;
  caps.lattice = 1000;
  EXPECT_THROW(subgroups_up_to_conjugacy(g, OrderFilter::all(), caps), CapExceeded);
}

TEST(Complement, TrivialSubgroupComplementedByWholeGroup)
{
  FiniteGroup g = tg::symmetric4();
  auto r = is_complemented(g, trivial_subgroup(g));
  ASSERT_TRUE(r.complemented);
  EXPECT_EQ(r.witness->order(), 24u);
}

TEST(Complement, DoubleTranspositionInA4IsNotComplemented)
{
  FiniteGroup g = tg::from_catalog("A4");
  SubgroupHandle h = closure(g, {tg::element_of(g, {1, 0, 3, 2})});
  auto r = is_complemented(g, h);
  EXPECT_FALSE(r.complemented);
  EXPECT_FALSE(r.witness.has_value());
  auto subs = oracle::all_subgroups(g);
  EXPECT_TRUE(std::none_of(subs.begin(), subs.end(), [](auto const &s) { return s.size() == 6; }));
}

TEST(Complement, SylowSevenInA7ComplementedByPointStabilizer)
{
  FiniteGroup g = tg::from_catalog("A7");
  SubgroupHandle h = sylow_p(g, 7);
  ASSERT_EQ(h.order(), 7u);
  auto r = is_complemented(g, h);
  ASSERT_TRUE(r.complemented);
  EXPECT_EQ(r.witness->order(), 360u);
  EXPECT_TRUE(intersects_trivially(h, *r.witness));
}

TEST(Complement, WitnessProductCoversGroup)
{
  FiniteGroup g = tg::symmetric4();
  for (auto const &rep : subgroups_up_to_conjugacy(g, OrderFilter::all())) {
    auto r = is_complemented(g, rep);
    if (!r.complemented)
      continue;
    std::set<ElementId> products;
    for (auto a : rep.members()) {
      for (auto b : r.witness->members())
        products.insert(g.mul(a, b));
    }
    EXPECT_EQ(products.size(), g.order());
  }
}

TEST(Complement, AgreesWithOracleAndIsConjugationInvariant)
{
  for (auto make : {tg::symmetric4, tg::sl23, tg::c3_on_c4_squared}) {
    FiniteGroup g = make();
    auto subs = oracle::all_subgroups(g);
    std::mt19937 rng(11);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
    for (auto const &s : subs) {
      std::vector<ElementId> gens(s.begin(), s.end());
      SubgroupHandle h = closure(g, gens);
      bool expected = oracle::has_complement(subs, s, g.order());
      EXPECT_EQ(is_complemented(g, h).complemented, expected);
      SubgroupHandle c = conjugate(g, h, pick(rng));
      EXPECT_EQ(is_complemented(g, c).complemented, expected);
    }
  }
}

TEST(Frattini, CyclicFour)
{
  FiniteGroup g = tg::cyclic(4);
  EXPECT_EQ(frattini(g).order(), 2u);
}

TEST(Frattini, A4IsTrivial)
{
  FiniteGroup g = tg::from_catalog("A4");
  EXPECT_TRUE(frattini(g).is_trivial());
  EXPECT_EQ(oracle::frattini(g).size(), 1u);
}

TEST(Frattini, ElementaryAbelianIsTrivial)
{
  EXPECT_TRUE(frattini(tg::elementary_abelian_2_cubed()).is_trivial());
}

TEST(Frattini, AgreesWithOracle)
{
  for (auto make : {tg::symmetric4, tg::sl23, tg::c3_on_c4_squared, tg::c2_on_heisenberg3}) {
    FiniteGroup g = make();
    EXPECT_EQ(members_of(frattini(g)), oracle::frattini(g));
  }
  FiniteGroup d8 = tg::from_catalog("D8");
  EXPECT_EQ(members_of(frattini(d8)), oracle::frattini(d8));
}

TEST(Maximal, MatchesOracleUpToConjugacy)
{
  for (auto make : {tg::symmetric4, tg::sl23}) {
    FiniteGroup g = make();
    auto expected = oracle::maximal(oracle::all_subgroups(g), g.order());
    std::set<oracle::Members> got = expand_classes(g, maximal_subgroups(g));
    EXPECT_EQ(got, std::set<oracle::Members>(expected.begin(), expected.end()));
  }
}

TEST(OpPrime, SimpleGroupIsTrivial)
{
  EXPECT_TRUE(o_pprime(tg::from_catalog("PSL(2,7)"), 2).is_trivial());
}

TEST(OpPrime, FaithfulSemidirectIsTrivial)
{
  FiniteGroup g = semidirect_group(homogeneous_sum(singer_module(2, 2, 3), 2));
  EXPECT_TRUE(o_pprime(g, 2).is_trivial());
  EXPECT_EQ(oracle::o_pprime(g, 2).size(), 1u);
}

TEST(OpPrime, CyclicSix)
{
  FiniteGroup g = tg::cyclic(6);
  EXPECT_EQ(o_pprime(g, 2).order(), 3u);
}

TEST(OpPrime, AgreesWithOracle)
{
  for (auto make : {tg::symmetric4, tg::sl23, tg::c3_on_c4_squared, tg::c2_on_heisenberg3}) {
    FiniteGroup g = make();
    for (std::uint32_t p : {2u, 3u})
      EXPECT_EQ(members_of(o_pprime(g, p)), oracle::o_pprime(g, p));
  }
}

TEST(MinimalNormal, SimpleGroupIsItsOwn)
{
  FiniteGroup g = tg::from_catalog("PSL(2,7)");
  auto mins = minimal_normal_subgroups(g);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins.front().order(), g.order());
}

TEST(MinimalNormal, HomogeneousOrder48HasFive)
{
  FiniteGroup g = semidirect_group(homogeneous_sum(singer_module(2, 2, 3), 2));
  auto mins = minimal_normal_subgroups(g);
  EXPECT_EQ(mins.size(), 5u);
  for (auto const &m : mins)
    EXPECT_EQ(m.order(), 4u);
  EXPECT_EQ(oracle::minimal_normal(g).size(), 5u);
}

TEST(MinimalNormal, KleinFourHasThree)
{
  EXPECT_EQ(minimal_normal_subgroups(tg::klein_four()).size(), 3u);
}

TEST(MinimalNormal, NormalSubgroupsAgreeWithOracle)
{
  for (auto make : {tg::symmetric4, tg::sl23, tg::c3_on_c4_squared}) {
    FiniteGroup g = make();
    std::set<oracle::Members> got, mins;
    for (auto const &n : normal_subgroups(g))
      got.insert(members_of(n));
    auto expected = oracle::normal_subgroups(g);
    EXPECT_EQ(got, std::set<oracle::Members>(expected.begin(), expected.end()));
    for (auto const &n : minimal_normal_subgroups(g))
      mins.insert(members_of(n));
    auto expected_min = oracle::minimal_normal(g);
    EXPECT_EQ(mins, std::set<oracle::Members>(expected_min.begin(), expected_min.end()));
  }
}

TEST(Supersolvable, S3)
{
  EXPECT_TRUE(is_supersolvable(tg::from_catalog("S3")));
}

TEST(Supersolvable, A4IsNot)
{
  FiniteGroup g = tg::from_catalog("A4");
  EXPECT_FALSE(is_supersolvable(g));
  EXPECT_FALSE(oracle::supersolvable(g));
}

TEST(Supersolvable, PGroups)
{
  EXPECT_TRUE(is_supersolvable(tg::from_catalog("D8")));
  EXPECT_TRUE(is_supersolvable(tg::elementary_abelian_2_cubed()));
}

TEST(Supersolvable, AgreesWithOracle)
{
  for (auto make : {tg::symmetric4, tg::sl23, tg::c3_on_c4_squared, tg::c2_on_heisenberg3})
    EXPECT_EQ(is_supersolvable(make()), oracle::supersolvable(make()));
}

} // namespace
