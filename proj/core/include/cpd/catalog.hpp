#pragma once

#include <string>
#include <vector>

#include "cpd/group_spec.hpp"

namespace cpd
{

struct Membership
{
  std::uint32_t p = 2;
  std::uint32_t d = 1;

  friend bool operator==(Membership const &, Membership const &) = default;
};

struct CatalogEntry
{
  std::string name;         ///< canonical spelling
  std::string description;
  GroupSpec spec;           ///< permutation or semidirect form
  /// (p, d) at which the group is known to be a nontrivial Cp^d-group.
  std::vector<Membership> memberships;
};

/// Names: A4, S3, D8, A7, PSL(2,7), PSL(3,2), PSL(2,11), M11, Q8_GL23,
/// singer(p,e,m) or singer(p,e,m,t), diag(p,a1,...,an). Whitespace is ignored.
/// Throws UnknownName.
CatalogEntry catalog(std::string const &name);

/// The fixed names, without the parametrized families.
std::vector<std::string> catalog_names();

/// Projective special linear group PSL(2,q) on the q+1 points of the
/// projective line, q an odd prime; point q is infinity.
PermutationSpec psl2_on_projective_line(std::uint32_t q);

/// Matrix group acting on the nonzero vectors of F_p^n, point i being the
/// vector with code i + 1.
PermutationSpec permutation_group_from_matrices(std::uint32_t p, std::size_t n,
                                                std::vector<FpMatrix> const &gens);

/// Q_8 inside GL(2,3).
HModule quaternion_module(Caps const &caps = {});

} // namespace cpd
