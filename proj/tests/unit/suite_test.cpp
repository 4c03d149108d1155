#include <gtest/gtest.h>

#include <memory>

#include "cpd/catalog.hpp"
#include "cpd/corpus.hpp"
#include "cpd/group_spec.hpp"
#include "cpd/properties.hpp"
#include "cpd/report.hpp"
#include "groups.hpp"

namespace
{

using namespace cpd;
namespace tg = testing_groups;

PropertyItem item(std::string label, FiniteGroup g, std::uint32_t p, std::uint32_t d)
{
  return {std::move(label), std::make_shared<FiniteGroup const>(std::move(g)), p, d};
}

TEST(Properties, Order48HomogeneousPasses)
{
  FiniteGroup g = semidirect_group(homogeneous_sum(singer_module(2, 2, 3), 2));
  PropertyReport r = property_suite({item("order48", std::move(g), 2, 2)});
  EXPECT_EQ(r.items, 1u);
  EXPECT_EQ(r.members, 1u);
  EXPECT_GT(r.checks, 0u);
  EXPECT_TRUE(r.passed());
}

TEST(Properties, Psl27AtEightPasses)
{
  PropertyReport r = property_suite({item("PSL(2,7)", tg::from_catalog("PSL(2,7)"), 2, 3)});
  EXPECT_EQ(r.members, 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.skipped.empty());
}

TEST(Properties, EmptyCorpusPasses)
{
  PropertyReport r = property_suite({});
  EXPECT_EQ(r.items, 0u);
  EXPECT_EQ(r.checks, 0u);
  EXPECT_TRUE(r.passed());
}

TEST(Properties, NonMembersOnlyGetFrattiniCheck)
{
  PropertyReport r = property_suite({item("A4", tg::from_catalog("A4"), 2, 1)});
  EXPECT_EQ(r.members, 0u);
  EXPECT_EQ(r.checks, 1u);
  EXPECT_TRUE(r.passed());
}

TEST(Properties, CapExceededIsSkipped)
{
  Caps caps;
  caps.lattice = 10;
  PropertyReport r = property_suite({item("S4", tg::symmetric4(), 3, 1)}, caps);
  EXPECT_EQ(r.skipped.size(), 1u);
  EXPECT_TRUE(r.passed());
}

TEST(Corpus, NamesAndSizes)
{
  EXPECT_EQ(corpus_items("small").size(), 13u);
  EXPECT_GE(corpus_items("semidirect").size(), 90u);
  EXPECT_EQ(corpus_items("catalog").size(), 7u);
  EXPECT_THROW(corpus_items("huge"), BadInput);
}

TEST(Corpus, SemidirectItemsHaveExponentBelowDimension)
{
  for (auto const &i : corpus_items("semidirect")) {
    auto const &sd = std::get<SemidirectSpec>(i.spec.body);
    EXPECT_GE(i.d, 1u);
    EXPECT_LT(i.d, sd.n);
    EXPECT_EQ(i.p, sd.p);
  }
}

TEST(Corpus, SmallSuiteAgrees)
{
  SuiteReport r = run_suite("small", corpus_items("small"), {});
  EXPECT_EQ(r.disagreements(), 0u);
  EXPECT_TRUE(r.passed());
  for (auto const &i : r.items)
    EXPECT_TRUE(i.sylow_ok) << i.label;
}

TEST(Corpus, EmptySuitePasses)
{
  SuiteReport r = run_suite("empty", {}, {});
  EXPECT_TRUE(r.items.empty());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(to_json(r)["summary"]["items"], 0);
}

TEST(Corpus, ThreadCountDoesNotChangeReport)
{
  auto items = corpus_items("small");
  SuiteOptions one;
  SuiteOptions many;
  many.threads = 3;
  EXPECT_EQ(strip_timings(to_json(run_suite("small", items, one))).dump(),
            strip_timings(to_json(run_suite("small", items, many))).dump());
}

TEST(Corpus, SeedChangesOnlySylowCheckPath)
{
  auto items = corpus_items("small");
  SuiteOptions a;
  SuiteOptions b;
  b.seed = 12345;
  auto ja = strip_timings(to_json(run_suite("small", items, a)));
  auto jb = strip_timings(to_json(run_suite("small", items, b)));
  EXPECT_EQ(ja["items"], jb["items"]);
  EXPECT_NE(ja["seed"], jb["seed"]);
}

} // namespace
