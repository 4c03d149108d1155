#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpd/group.hpp"

namespace cpd
{

struct PropertyItem
{
  std::string label;
  std::shared_ptr<FiniteGroup const> group;
  std::uint32_t p = 2;
  std::uint32_t d = 1;
};

struct PropertyViolation
{
  std::string label;
  std::string check;
  std::string detail;
};

struct PropertyReport
{
  std::size_t items = 0;
  std::size_t members = 0;  ///< items confirmed as Cp^d-groups by brute force
  std::size_t checks = 0;
  std::vector<PropertyViolation> violations;
  std::vector<std::string> skipped;  ///< labels whose checks hit a cap

  bool passed() const { return violations.empty(); }
};

/// Structural consequences of membership, checked on every item that brute
/// force confirms as a Cp^d-group:
///  - subgroups_inherit: every subgroup is a Cp^d-group;
///  - quotient_descends: G/N is a Cp^(d-e)-group for normal N with |N|_p = p^e <= p^d;
///  - multiples_hold: G is a Cp^(md)-group for every m >= 0 up to the first
///    vacuous multiple;
/// and on every item regardless of membership:
///  - frattini_trivial: Φ(G) = 1 when O_p'(G) = 1 and the Sylow p-subgroup is
///    elementary abelian.
/// Any violation is a bug in this library. Items exceeding a cap are skipped.
PropertyReport property_suite(std::vector<PropertyItem> const &corpus, Caps const &caps = {});

nlohmann::json to_json(PropertyReport const &r);

} // namespace cpd
