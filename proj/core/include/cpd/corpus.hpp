#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpd/group_spec.hpp"
#include "cpd/properties.hpp"

namespace cpd
{

enum class CorpusCheck
{
  CriteriaAgree,   ///< brute force vs the applicable classification criterion
  ExpectedMember,  ///< brute force must confirm a known membership
};

struct CorpusItem
{
  std::string label;
  GroupSpec spec;
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  CorpusCheck check = CorpusCheck::CriteriaAgree;
};

/// "small", "semidirect" or "catalog"; BadInput for anything else.
std::vector<CorpusItem> corpus_items(std::string const &name);

struct ItemResult
{
  std::string label;
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  std::size_t order = 0;
  bool brute = false;
  bool nontrivial = false;
  bool criterion_applicable = false;
  bool criterion = false;
  std::string criterion_case;
  std::string note;  ///< hypothesis failure or cap message
  bool skipped = false;
  bool sylow_ok = true;  ///< seeded Sylow subgroup has full order and is conjugate
  bool agree = true;
  double brute_ms = 0;
  double criterion_ms = 0;
};

struct SuiteOptions
{
  std::uint64_t seed = 0;
  unsigned threads = 1;
  Caps caps;
  bool properties = true;
};

struct SuiteReport
{
  std::string corpus;
  std::uint64_t seed = 0;
  std::vector<ItemResult> items;
  PropertyReport properties;

  std::size_t disagreements() const;
  bool passed() const { return disagreements() == 0 && properties.passed(); }
};

/// Runs every item, on `threads` workers. Results are assembled by item index,
/// so the report does not depend on the thread count.
SuiteReport run_suite(std::string const &corpus, std::vector<CorpusItem> const &items,
                      SuiteOptions const &options);

nlohmann::json to_json(SuiteReport const &r);

} // namespace cpd
