#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cpd/modrep.hpp"
#include "groups.hpp"
#include "oracles.hpp"

namespace
{

using namespace cpd;
namespace tg = testing_groups;

std::vector<ElementId> members_of(SubgroupHandle const &h)
{
  return {h.members().begin(), h.members().end()};
}

TEST(FiniteGroup, PermutationTableMatchesComposition)
{
  FiniteGroup g = tg::symmetric4();
  auto const &elements = std::get<PermutationBackend>(g.backend()).elements;
  ASSERT_EQ(g.order(), 24u);
  ASSERT_EQ(elements.size(), 24u);
  EXPECT_EQ(elements[0], (Permutation{0, 1, 2, 3}));
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); ++b) {
      Permutation ab(4);
      for (std::size_t i = 0; i < 4; ++i)
        ab[i] = elements[b][elements[a][i]];
      EXPECT_EQ(elements[g.mul(a, b)], ab);
    }
    EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
  }
}

TEST(FiniteGroup, SemidirectMultiplicationIsRightAction)
{
  HModule m = homogeneous_sum(singer_module(2, 2, 3), 2);
  FiniteGroup g = semidirect_group(m);
  ASSERT_EQ(g.order(), 48u);
  auto const &b = std::get<SemidirectBackend>(g.backend());
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId y = 0; y < g.order(); ++y) {
      ElementId z = g.mul(x, y);
      FpMatrix const &hx = b.h_elements[b.h_index[x]];
      FpMatrix const &hy = b.h_elements[b.h_index[y]];
      EXPECT_EQ(b.h_elements[b.h_index[z]], hx * hy);
      FpVector v = fp::add_vectors(hy.apply(fp::decode(b.v_code[x], 4, 2)),
                                   fp::decode(b.v_code[y], 4, 2), 2);
      EXPECT_EQ(b.v_code[z], fp::encode(v, 2));
    }
  }
}

TEST(FiniteGroup, AssociativeOnRandomTriples)
{
  FiniteGroup g = tg::from_catalog("PSL(2,7)");
  std::mt19937 rng(7);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g.order() - 1));
  for (int i = 0; i < 2000; ++i) {
    ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
}

TEST(FiniteGroup, CanonicalOrderIsDeterministic)
{
  FiniteGroup a = tg::from_catalog("A7");
  FiniteGroup b = tg::from_catalog("A7");
  EXPECT_EQ(std::get<PermutationBackend>(a.backend()).elements,
            std::get<PermutationBackend>(b.backend()).elements);
}

TEST(FiniteGroup, ElementOrdersAndPowers)
{
  FiniteGroup g = tg::cyclic(12);
  std::map<std::uint32_t, int> count;
  for (ElementId x = 0; x < g.order(); ++x) {
    ++count[g.element_order(x)];
    EXPECT_EQ(g.pow(x, g.element_order(x)), g.identity());
    EXPECT_EQ(g.pow(x, -1), g.inv(x));
  }
  // Euler phi of each divisor of 12.
  EXPECT_EQ(count, (std::map<std::uint32_t, int>{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}));
}

TEST(FiniteGroup, RejectsNonPermutation)
{
  EXPECT_THROW(FiniteGroup::from_permutations(3, {{0, 0, 1}}), BadInput);
}

TEST(FiniteGroup, ElementCapEnforced)
{
  Caps caps;
  caps.elements = 20;
  EXPECT_THROW(FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, caps), CapExceeded);
  caps.elements = 24;
  EXPECT_EQ(FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, caps).order(), 24u);
}

TEST(Closure, EmptyGeneratorsGiveTrivialSubgroup)
{
  FiniteGroup g = tg::symmetric4();
  SubgroupHandle h = closure(g, std::span<ElementId const>{});
  EXPECT_EQ(h.order(), 1u);
  EXPECT_TRUE(h.is_trivial());
}

TEST(Closure, SevenCycleInA7)
{
  FiniteGroup g = tg::from_catalog("A7");
  ElementId c = tg::element_of(g, {1, 2, 3, 4, 5, 6, 0});
  EXPECT_EQ(closure(g, {c}).order(), 7u);
}

TEST(Closure, Psl27GeneratorsGiveFullOrder)
{
  FiniteGroup g = tg::from_catalog("PSL(2,7)");
  EXPECT_EQ(g.order(), oracle::psl2_order(7));
  EXPECT_EQ(closure(g, g.generators()).order(), oracle::psl2_order(7));
  EXPECT_EQ(tg::from_catalog("PSL(2,11)").order(), oracle::psl2_order(11));
}

TEST(Closure, AgreesWithNaiveClosure)
{
  FiniteGroup g = tg::sl23();
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = 0; b < g.order(); b += 5)
      EXPECT_EQ(members_of(closure(g, {a, b})), oracle::naive_closure(g, {a, b}));
  }
}

TEST(Quotient, WholeGroupGivesTrivialGroup)
{
  FiniteGroup g = tg::symmetric4();
  EXPECT_EQ(quotient_group(g, whole_group(g)).order(), 1u);
}

TEST(Quotient, A4ByKleinHasOrder3)
{
  FiniteGroup g = tg::from_catalog("A4");
  SubgroupHandle v = closure(g, {tg::element_of(g, {1, 0, 3, 2}), tg::element_of(g, {2, 3, 0, 1})});
  ASSERT_EQ(v.order(), 4u);
  FiniteGroup q = quotient_group(g, v);
  EXPECT_EQ(q.order(), 3u);
}

TEST(Quotient, SemidirectByTranslationsIsCyclic3)
{
  FiniteGroup g = semidirect_group(homogeneous_sum(singer_module(2, 2, 3), 2));
  auto const &b = std::get<SemidirectBackend>(g.backend());
  std::vector<ElementId> translations;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (b.h_index[x] == 0)
      translations.push_back(x);
  }
  SubgroupHandle v = SubgroupHandle::from_members(g, translations);
  FiniteGroup q = quotient_group(g, v);
  FiniteGroup c3 = tg::cyclic(3);
  ASSERT_EQ(q.order(), c3.order());
  EXPECT_TRUE(q.is_abelian());
  std::vector<std::uint32_t> qo, co;
  for (ElementId x = 0; x < 3; ++x) {
    qo.push_back(q.element_order(x));
    co.push_back(c3.element_order(x));
  }
  std::sort(qo.begin(), qo.end());
  std::sort(co.begin(), co.end());
  EXPECT_EQ(qo, co);
}

TEST(Quotient, RejectsNonNormal)
{
  FiniteGroup g = tg::from_catalog("A4");
  SubgroupHandle c3 = closure(g, {tg::element_of(g, {1, 2, 0, 3})});
  EXPECT_THROW(quotient_group(g, c3), NotNormal);
}

TEST(Normality, TrivialSubgroupIsNormal)
{
  FiniteGroup g = tg::from_catalog("PSL(2,7)");
  EXPECT_TRUE(is_normal(g, trivial_subgroup(g)));
}

TEST(Normality, ThreeCycleInA4)
{
  FiniteGroup g = tg::from_catalog("A4");
  SubgroupHandle h = closure(g, {tg::element_of(g, {1, 2, 0, 3})});
  EXPECT_FALSE(is_normal(g, h));
  EXPECT_EQ(is_normal(g, h), oracle::is_normal(g, members_of(h)));
  // Four Sylow 3-subgroups, by enumeration.
  int sylow3 = 0;
  for (auto const &s : oracle::all_subgroups(g))
    sylow3 += s.size() == 3;
  EXPECT_EQ(sylow3, 4);
}

TEST(Normality, NormalClosureOfDoubleTransposition)
{
  FiniteGroup g = tg::from_catalog("A4");
  SubgroupHandle h = closure(g, {tg::element_of(g, {1, 0, 3, 2})});
  SubgroupHandle n = normal_closure(g, h);
  EXPECT_EQ(n.order(), 4u);
  // Smallest normal overgroup, by enumeration.
  oracle::Members best;
  for (auto const &s : oracle::normal_subgroups(g)) {
    if (std::includes(s.begin(), s.end(), h.members().begin(), h.members().end()) &&
        (best.empty() || s.size() < best.size()))
      best = s;
  }
  EXPECT_EQ(members_of(n), best);
}

TEST(Normality, ConjugatePreservesOrderAndMatchesOracle)
{
  FiniteGroup g = tg::symmetric4();
  for (auto const &s : oracle::all_subgroups(g)) {
    std::vector<ElementId> gens(s.begin(), s.end());
    SubgroupHandle h = closure(g, gens);
    for (ElementId x = 0; x < g.order(); x += 3) {
      SubgroupHandle c = conjugate(g, h, x);
      EXPECT_EQ(c.order(), h.order());
      EXPECT_EQ(is_normal(g, h), oracle::is_normal(g, s));
    }
  }
}

TEST(Structure, ConjugacyClassesOfS4)
{
  FiniteGroup g = tg::symmetric4();
  std::vector<std::size_t> sizes;
  for (auto const &c : conjugacy_classes(g))
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 6, 6, 8}));
}

TEST(Structure, DerivedSubgroupsAndSolvability)
{
  FiniteGroup s4 = tg::symmetric4();
  EXPECT_EQ(derived_subgroup(s4, whole_group(s4)).order(), 12u);
  EXPECT_TRUE(is_solvable(s4));
  EXPECT_FALSE(is_solvable(tg::from_catalog("A7")));
  EXPECT_FALSE(is_solvable(tg::from_catalog("PSL(2,7)")));
  EXPECT_TRUE(is_solvable(tg::sl23()));
}

TEST(Structure, CyclicAndAbelianTests)
{
  FiniteGroup c12 = tg::cyclic(12);
  EXPECT_TRUE(is_cyclic(c12, whole_group(c12)));
  FiniteGroup v = tg::klein_four();
  EXPECT_FALSE(is_cyclic(v, whole_group(v)));
  EXPECT_TRUE(is_abelian(v, whole_group(v)));
  FiniteGroup s4 = tg::symmetric4();
  EXPECT_FALSE(is_abelian(s4, whole_group(s4)));
}

TEST(Structure, CentralizerAndNormalizerMatchDefinition)
{
  FiniteGroup g = tg::sl23();
  for (ElementId x = 0; x < g.order(); ++x) {
    SubgroupHandle c = centralizer(g, x);
    for (ElementId y = 0; y < g.order(); ++y)
      EXPECT_EQ(c.contains(y), g.mul(x, y) == g.mul(y, x));
    SubgroupHandle h = closure(g, {x});
    SubgroupHandle n = normalizer(g, h);
    for (ElementId y = 0; y < g.order(); ++y)
      EXPECT_EQ(n.contains(y), conjugate(g, h, y) == h);
  }
}

TEST(Structure, SubgroupAsGroupKeepsParentLabels)
{
  FiniteGroup g = tg::symmetric4();
  SubgroupHandle a4 = derived_subgroup(g, whole_group(g));
  FiniteGroup sub = subgroup_as_group(g, a4);
  ASSERT_EQ(sub.order(), 12u);
  auto labels = parent_labels(sub);
  for (ElementId x = 0; x < sub.order(); ++x) {
    for (ElementId y = 0; y < sub.order(); ++y)
      EXPECT_EQ(labels[sub.mul(x, y)], g.mul(labels[x], labels[y]));
  }
}

} // namespace
