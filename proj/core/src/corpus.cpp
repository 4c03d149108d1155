#include "cpd/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "cpd/catalog.hpp"
#include "cpd/classifier.hpp"
#include "cpd/lattice.hpp"

namespace cpd
{

namespace
{

void add_all_d(std::vector<CorpusItem> &out, std::string const &label, HModule const &m)
{
  for (std::uint32_t d = 1; d < m.n(); ++d)
    out.push_back({label + " p=" + std::to_string(m.p()) + " d=" + std::to_string(d),
                   {semidirect_spec(m)}, m.p(), d, CorpusCheck::CriteriaAgree});
}

std::string singer_label(std::uint32_t p, std::size_t e, std::uint64_t m, std::size_t t)
{
  return "singer(" + std::to_string(p) + "," + std::to_string(e) + "," + std::to_string(m) +
         "," + std::to_string(t) + ")";
}

std::vector<CorpusItem> semidirect_items()
{
  std::vector<CorpusItem> out;

  struct Family
  {
    std::uint32_t p;
    std::size_t e;
    std::vector<std::uint64_t> ms;
    std::size_t max_t;
  };
  // t is as large as possible with p^n <= 2^6 (p = 2) or 3^4 (p = 3).
  std::vector<Family> families = {
    {2, 1, {1}, 6}, {2, 2, {3}, 3},     {2, 3, {7}, 2},
    {3, 1, {1, 2}, 4}, {3, 2, {4, 8}, 2}, {3, 3, {13, 26}, 1},
  };
  for (auto const &f : families) {
    for (auto m : f.ms) {
      for (std::size_t t = 1; t <= f.max_t; ++t)
        add_all_d(out, singer_label(f.p, f.e, m, t), homogeneous_sum(singer_module(f.p, f.e, m), t));
    }
  }

  for (std::uint32_t a = 1; a < 5; ++a) {
    for (std::uint32_t b = 1; b < 5; ++b)
      add_all_d(out, "diag(5," + std::to_string(a) + "," + std::to_string(b) + ")",
                diagonal_module(5, {{a, b}}));
  }

  HModule s223 = singer_module(2, 2, 3);
  HModule s237 = singer_module(2, 3, 7);
  HModule s324 = singer_module(3, 2, 4);
  HModule s328 = singer_module(3, 2, 8);
  HModule sign3 = diagonal_module(3, {{2}});
  add_all_d(out, "singer(2,2,3)+trivial(1)", direct_sum(s223, trivial_module(2, 1)));
  add_all_d(out, "singer(2,2,3)+trivial(2)", direct_sum(s223, trivial_module(2, 2)));
  add_all_d(out, "singer(2,3,7)+trivial(1)", direct_sum(s237, trivial_module(2, 1)));
  add_all_d(out, "singer(2,2,3,2)+trivial(1)",
            direct_sum(homogeneous_sum(s223, 2), trivial_module(2, 1)));
  add_all_d(out, "singer(3,2,8)+sign", direct_sum(s328, sign3));
  add_all_d(out, "singer(3,2,4)+trivial(1)", direct_sum(s324, trivial_module(3, 1)));
  add_all_d(out, "singer(3,2,4)+sign", direct_sum(s324, sign3));
  add_all_d(out, "singer(3,2,8)+singer(3,2,4)", direct_sum(s328, s324));

  HModule q8 = quaternion_module();
  add_all_d(out, "Q8_GL23", q8);
  add_all_d(out, "Q8_GL23^2", homogeneous_sum(q8, 2));
  return out;
}

std::vector<CorpusItem> small_items()
{
  auto item = [](std::string const &name, std::uint32_t p, std::uint32_t d,
                 CorpusCheck check = CorpusCheck::CriteriaAgree) {
    return CorpusItem{name + " p=" + std::to_string(p) + " d=" + std::to_string(d),
                      {CatalogRef{name}}, p, d, check};
  };
  return {
    item("A4", 2, 1),          item("A4", 2, 2),          item("A4", 3, 1),
    item("S3", 2, 1),          item("S3", 3, 1),          item("D8", 2, 1),
    item("D8", 2, 2),          item("Q8_GL23", 3, 1),     item("singer(2,2,3,2)", 2, 1),
    item("singer(2,2,3,2)", 2, 2), item("singer(2,2,3,2)", 2, 3), item("diag(5,2,3)", 5, 1),
    item("PSL(2,7)", 2, 3, CorpusCheck::ExpectedMember),
  };
}

std::vector<CorpusItem> catalog_items()
{
  std::vector<CorpusItem> out;
  for (auto const &name : {"PSL(2,7)", "PSL(3,2)", "PSL(2,11)", "A7", "M11"}) {
    for (auto const &m : catalog(name).memberships)
      out.push_back({std::string(name) + " p=" + std::to_string(m.p) + " d=" + std::to_string(m.d),
                     {CatalogRef{name}}, m.p, m.d, CorpusCheck::ExpectedMember});
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
    .count();
}

struct Outcome
{
  ItemResult result;
  std::shared_ptr<FiniteGroup const> group;
};

Outcome run_item(CorpusItem const &item, std::size_t index, SuiteOptions const &options)
{
  Outcome out;
  ItemResult &r = out.result;
  r.label = item.label;
  r.p = item.p;
  r.d = item.d;
  try {
    out.group = std::make_shared<FiniteGroup const>(build_group(item.spec, options.caps));
    FiniteGroup const &g = *out.group;
    r.order = g.order();

    SubgroupHandle sylow = sylow_p(g, item.p);
    SubgroupHandle seeded = sylow_p(g, item.p, options.seed + index);
    auto cls = conjugacy_class(g, sylow);
    r.sylow_ok = seeded.order() == p_part(g.order(), item.p).value &&
                 std::find(cls.begin(), cls.end(), seeded) != cls.end();

    auto start = std::chrono::steady_clock::now();
    CpdVerdict v = brute_force_cpd(g, item.p, item.d, options.caps);
    r.brute_ms = elapsed_ms(start);
    r.brute = v.is_cpd;
    r.nontrivial = v.nontrivial;

    if (item.check == CorpusCheck::ExpectedMember) {
      r.agree = v.is_cpd && v.nontrivial;
    } else {
      start = std::chrono::steady_clock::now();
      try {
        ClassificationReport c = classify_by_criteria(g, item.p, item.d, options.caps);
        r.criterion_applicable = true;
        r.criterion = c.member;
        r.criterion_case = to_string(c.kind);
        r.agree = c.member == v.is_cpd;
      } catch (HypothesisViolated const &e) {
        r.note = std::string("no criterion applies: ") + e.what();
      }
      r.criterion_ms = elapsed_ms(start);
    }
    r.agree = r.agree && r.sylow_ok;
  } catch (CapExceeded const &e) {
    r.skipped = true;
    r.note = std::string("cap exceeded: ") + e.what();
    out.group.reset();
  }
  return out;
}

} // namespace

std::vector<CorpusItem> corpus_items(std::string const &name)
{
  if (name == "small")
    return small_items();
  if (name == "semidirect")
    return semidirect_items();
  if (name == "catalog")
    return catalog_items();
  throw BadInput("unknown corpus \"" + name + "\" (expected small, semidirect or catalog)");
}

std::size_t SuiteReport::disagreements() const
{
  return static_cast<std::size_t>(
    std::count_if(items.begin(), items.end(), [](ItemResult const &r) { return !r.agree; }));
}

SuiteReport run_suite(std::string const &corpus, std::vector<CorpusItem> const &items,
                      SuiteOptions const &options)
{
  std::vector<ItemResult> results(items.size());
  std::vector<PropertyReport> properties(items.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      Outcome o = run_item(items[i], i, options);
      if (options.properties && o.group)
        properties[i] = property_suite({{items[i].label, o.group, items[i].p, items[i].d}},
                                       options.caps);
      results[i] = std::move(o.result);
    }
  };
  unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  SuiteReport report;
  report.corpus = corpus;
  report.seed = options.seed;
  report.items = std::move(results);
  for (auto &p : properties) {
    report.properties.items += p.items;
    report.properties.members += p.members;
    report.properties.checks += p.checks;
    for (auto &v : p.violations)
      report.properties.violations.push_back(std::move(v));
    for (auto &s : p.skipped)
      report.properties.skipped.push_back(std::move(s));
  }
  return report;
}

nlohmann::json to_json(SuiteReport const &r)
{
  using nlohmann::json;
  json items = json::array();
  std::size_t skipped = 0;
  for (auto const &i : r.items) {
    json j = {{"label", i.label},
              {"p", i.p},
              {"d", i.d},
              {"order", i.order},
              {"brute", {{"verdict", i.brute}, {"nontrivial", i.nontrivial}}},
              {"sylow_conjugate", i.sylow_ok},
              {"agree", i.agree},
              {"timings_ms", {{"brute", i.brute_ms}, {"criterion", i.criterion_ms}}}};
    if (i.criterion_applicable)
      j["criterion"] = {{"verdict", i.criterion}, {"case", i.criterion_case}};
    else
      j["criterion"] = nullptr;
    if (!i.note.empty())
      j["note"] = i.note;
    if (i.skipped) {
      j["skipped"] = true;
      ++skipped;
    }
    items.push_back(std::move(j));
  }
  return {{"corpus", r.corpus},
          {"seed", r.seed},
          {"items", std::move(items)},
          {"summary",
           {{"items", r.items.size()},
            {"disagreements", r.disagreements()},
            {"skipped", skipped}}},
          {"properties", to_json(r.properties)},
          {"passed", r.passed()}};
}

} // namespace cpd
