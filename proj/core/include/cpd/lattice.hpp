#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpd/group.hpp"

namespace cpd
{

/// Which subgroup orders a lattice run should return. The run explores every
/// order dividing some target, since those are the stepping stones of the
/// cyclic-extension construction. An empty target list means all orders.
struct OrderFilter
{
  std::vector<std::uint64_t> targets;

  static OrderFilter all() { return {}; }
  static OrderFilter exactly(std::vector<std::uint64_t> orders) { return {std::move(orders)}; }

  bool keeps(std::uint64_t order) const;
  bool explores(std::uint64_t order) const;
};

/// One representative per conjugacy class of subgroups whose order passes the
/// filter, sorted by (order, member set). Each representative is the member-set
/// minimum of its class, so the output is canonical.
///
/// Non-perfect subgroups are reached by cyclic extension: H is extended by a
/// prime-power element g normalizing H with g^r in H. Non-solvable groups
/// additionally seed the search with all two-generator subgroups, which covers
/// the perfect ones. Throws CapExceeded when |G| exceeds caps.lattice.
std::vector<SubgroupHandle> subgroups_up_to_conjugacy(FiniteGroup const &g,
                                                      OrderFilter const &filter,
                                                      Caps const &caps = {});

/// Every conjugate of h, sorted, without duplicates.
std::vector<SubgroupHandle> conjugacy_class(FiniteGroup const &g, SubgroupHandle const &h);

/// Representatives of subgroups of order |G|/|H| that a complement search can
/// reuse across several H of the same order.
struct ComplementCandidates
{
  std::uint64_t order = 0;
  std::vector<std::vector<SubgroupHandle>> classes;  ///< full conjugacy classes
};

ComplementCandidates complement_candidates(FiniteGroup const &g, std::uint64_t order,
                                           Caps const &caps = {});

struct ComplementResult
{
  bool complemented = false;
  std::optional<SubgroupHandle> witness;
};

/// Searches for K with |K| = |G|/|H| and H ∩ K = 1. A bounded backtracking
/// search tries to build a witness first; a negative answer is only given after
/// the exhaustive sweep over all subgroups of the complement order.
ComplementResult is_complemented(FiniteGroup const &g, SubgroupHandle const &h,
                                 Caps const &caps = {});
ComplementResult is_complemented(FiniteGroup const &g, SubgroupHandle const &h,
                                 ComplementCandidates const &candidates);

/// The generator-growth search alone; nullopt means "gave up", not "none".
std::optional<SubgroupHandle> find_complement_fast(FiniteGroup const &g,
                                                   SubgroupHandle const &h,
                                                   std::size_t budget = 2000);

/// Conjugacy-class representatives of the maximal subgroups.
std::vector<SubgroupHandle> maximal_subgroups(FiniteGroup const &g, Caps const &caps = {});

/// Intersection of all maximal subgroups.
SubgroupHandle frattini(FiniteGroup const &g, Caps const &caps = {});

/// Intersection of all conjugates of h.
SubgroupHandle core(FiniteGroup const &g, SubgroupHandle const &h);

/// Largest normal subgroup of order coprime to p.
SubgroupHandle o_pprime(FiniteGroup const &g, std::uint32_t p);

/// All minimal normal subgroups, sorted.
std::vector<SubgroupHandle> minimal_normal_subgroups(FiniteGroup const &g,
                                                     Caps const &caps = {});

/// All normal subgroups, sorted.
std::vector<SubgroupHandle> normal_subgroups(FiniteGroup const &g, Caps const &caps = {});

/// Every maximal subgroup has prime index.
bool is_supersolvable(FiniteGroup const &g, Caps const &caps = {});

} // namespace cpd
