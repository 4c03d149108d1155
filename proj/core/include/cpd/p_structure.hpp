#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpd/group.hpp"

namespace cpd
{

struct PrimePower
{
  std::uint32_t p = 2;
  std::uint32_t d = 0;
  std::uint64_t value = 1;

  /// Throws BadParameters when p is not prime or p^d overflows.
  static PrimePower of(std::uint32_t p, std::uint32_t d);
};

/// Largest power of p dividing m (m >= 1).
PrimePower p_part(std::uint64_t m, std::uint32_t p);

/// A Sylow p-subgroup, grown one normalizing p-element at a time. Without a
/// seed the p-elements are tried in index order; a seed shuffles that order,
/// which yields other (conjugate) Sylow subgroups.
SubgroupHandle sylow_p(FiniteGroup const &g, std::uint32_t p,
                       std::optional<std::uint64_t> seed = std::nullopt);

/// One representative per G-conjugacy class of subgroups of order p^d, sorted.
/// Enumerated layer by layer inside one Sylow p-subgroup, then fused under
/// G-conjugacy. Empty when p^d exceeds |G|_p.
std::vector<SubgroupHandle> subgroups_of_order_pd(FiniteGroup const &g, PrimePower const &pp,
                                                  Caps const &caps = {});

/// A subgroup of order |G|/|G|_p, or nullopt when none exists.
std::optional<SubgroupHandle> hall_pprime_complement(FiniteGroup const &g, std::uint32_t p,
                                                     Caps const &caps = {});

bool is_elementary_abelian(FiniteGroup const &g, SubgroupHandle const &h, std::uint32_t p);

/// True when n is a power of p (including p^0 = 1).
bool is_power_of(std::uint64_t n, std::uint32_t p);

} // namespace cpd
