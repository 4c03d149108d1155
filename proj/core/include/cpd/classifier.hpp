#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpd/group.hpp"
#include "cpd/modrep.hpp"
#include "cpd/p_structure.hpp"

namespace cpd
{

enum class Method
{
  BruteForce,
  SemidirectCriterion,  ///< H ⋉ V with V elementary abelian, d < n
  LargeSylowCriterion,  ///< O_p'(G) = 1 and |G|_p >= p^(2d)
  FrattiniQuotient,     ///< necessary condition on G/Φ(G)
};

std::string to_string(Method m);

struct ComplementEntry
{
  SubgroupHandle subgroup;    ///< class representative of order p^d
  SubgroupHandle complement;
};

struct CpdVerdict
{
  bool is_cpd = true;
  bool nontrivial = false;  ///< p^d <= |G|_p
  PrimePower pd;
  std::optional<SubgroupHandle> uncomplemented_witness;
  std::vector<ComplementEntry> complement_table;
  Method method = Method::BruteForce;
};

/// Every subgroup of order p^d has a complement. Checks one subgroup per
/// conjugacy class, which suffices because K complements H iff K^x
/// complements H^x.
CpdVerdict brute_force_cpd(FiniteGroup const &g, std::uint32_t p, std::uint32_t d,
                           Caps const &caps = {});

enum class CaseKind
{
  Supersolvable,
  PrimeOrderComplemented,  ///< every subgroup of order p is complemented
  HomogeneousCyclic,
  NotMember,
  Degenerate,              ///< d <= s in the Frattini quotient check
  BoundaryFull,            ///< d = n: the unique subgroup of order p^n is complemented
  Vacuous,                 ///< p^d > |G|_p
};

std::string to_string(CaseKind k);

struct ClassificationReport
{
  Method method = Method::SemidirectCriterion;
  CaseKind kind = CaseKind::NotMember;
  bool member = false;
  /// The result only refutes membership when false; true proves nothing.
  bool necessary_only = false;
  std::string reason;  ///< first failed condition, or a note

  std::uint32_t p = 2;
  std::uint32_t d = 0;
  std::size_t n = 0;  ///< log_p of the normal Sylow subgroup (or of V)
  std::size_t e = 0;
  std::size_t t = 0;
  std::size_t s = 0;  ///< log_p |Φ(G)|_p, Frattini quotient check only
  std::vector<std::size_t> component_dims;
  bool acting_group_cyclic = false;

  std::optional<SubgroupHandle> sylow;
  std::optional<SubgroupHandle> hall;
};

/// Membership of H ⋉ V in the nontrivial Cp^d-groups for 1 <= d < n, with V
/// the module m. Member iff every irreducible component has dimension 1, or
/// H is cyclic and V is homogeneous with component dimension e > 1 dividing
/// both d and n. Throws HypothesisViolated unless 1 <= d < n.
ClassificationReport classify_semidirect(HModule const &m, std::uint32_t d,
                                         Caps const &caps = {});

/// Membership for groups with O_p'(G) = 1 and |G|_p >= p^(2d): either every
/// subgroup of order p is complemented (decided by brute force), or
/// G = H ⋉ P with H a cyclic Hall p'-subgroup and P a faithful homogeneous
/// module with component dimension e > 1 dividing d and log_p|P|.
/// Throws HypothesisViolated when the hypotheses fail.
ClassificationReport classify_large_sylow(FiniteGroup const &g, std::uint32_t p,
                                          std::uint32_t d, Caps const &caps = {});

/// Necessary condition for G = H ⋉ P (P a normal Sylow p-subgroup acted on
/// faithfully) to be a nontrivial Cp^d-group with d < n: G/Φ(G) is
/// supersolvable, or H is cyclic and P/Φ(G) is homogeneous with component
/// dimension e > 1 dividing d - s and n - s, where p^s = |Φ(G)|_p. Reports
/// Degenerate when d <= s. Throws HypothesisViolated when G is not of that
/// shape.
ClassificationReport frattini_quotient_necessary(FiniteGroup const &g, std::uint32_t p,
                                                 std::uint32_t d, Caps const &caps = {});

/// The action of h on the elementary abelian normal subgroup p by conjugation,
/// written additively on a basis chosen greedily from p's members. Throws
/// NotFaithful when some nonidentity element of h centralizes p.
HModule conjugation_module(FiniteGroup const &g, SubgroupHandle const &p_sub,
                           SubgroupHandle const &h, std::uint32_t p, Caps const &caps = {});

/// The criterion that applies to (G, p, d): Vacuous when p^d > |G|_p; for a
/// semidirect H ⋉ F_p^n over the same prime, BoundaryFull at d = n and the
/// semidirect criterion below it; the large-Sylow criterion otherwise.
/// Throws HypothesisViolated when no criterion applies.
ClassificationReport classify_by_criteria(FiniteGroup const &g, std::uint32_t p, std::uint32_t d,
                                          Caps const &caps = {});

/// The module of a group built by the semidirect backend.
HModule module_of(FiniteGroup const &g, Caps const &caps = {});

} // namespace cpd
