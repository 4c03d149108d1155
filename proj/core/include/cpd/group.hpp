#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cpd/common.hpp"
#include "cpd/fp_matrix.hpp"

namespace cpd
{

class SubgroupHandle;

/// Permutations act on the right: point i goes to images[i], and the product
/// a*b applies a first.
using Permutation = std::vector<std::uint16_t>;

struct PermutationBackend
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  ///< element i of the group, by canonical index
};

/// H ⋉ F_p^n with (h1, v1)(h2, v2) = (h1 h2, v1 ρ(h2) + v2).
struct SemidirectBackend
{
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<FpMatrix> h_generators;
  std::vector<FpMatrix> h_elements;  ///< canonical closure order, identity first
  /// element i is (h_index[i], vector with code v_code[i])
  std::vector<std::uint32_t> h_index;
  std::vector<std::uint64_t> v_code;
};

/// Groups built from another group: quotients (labels are coset
/// representatives in the parent) and subgroups (labels are parent elements).
struct DerivedBackend
{
  enum class Kind { Quotient, Subgroup };
  Kind kind = Kind::Subgroup;
  std::vector<ElementId> parent_labels;
  /// quotients only: parent element -> quotient element
  std::shared_ptr<std::vector<ElementId> const> coset_of_parent;
};

using GroupBackend = std::variant<PermutationBackend, SemidirectBackend, DerivedBackend>;

/// A finite group with its full multiplication table.
///
/// Elements are numbered by breadth-first closure from the generators in
/// input order; each BFS level is sorted by the backend's native comparison
/// (permutation images lexicographically, semidirect pairs by H-index then
/// vector). Immutable after construction.
class FiniteGroup
{
public:
  static FiniteGroup from_permutations(std::size_t degree,
                                       std::vector<Permutation> const &generators,
                                       Caps const &caps = {});

  /// `h_elements` must be the canonical closure of `h_generators`.
  static FiniteGroup semidirect(std::uint32_t p, std::size_t n,
                                std::vector<FpMatrix> const &h_generators,
                                std::vector<FpMatrix> const &h_elements,
                                Caps const &caps = {});

  std::size_t order() const { return _order; }
  ElementId identity() const { return 0; }

  ElementId mul(ElementId a, ElementId b) const
  { return _table[std::size_t{a} * _order + b]; }
  ElementId inv(ElementId a) const { return _inverse[a]; }
  ElementId conj(ElementId a, ElementId x) const  ///< x^-1 a x
  { return mul(mul(inv(x), a), x); }
  ElementId pow(ElementId a, std::int64_t k) const;
  ElementId commutator(ElementId a, ElementId b) const;  ///< a^-1 b^-1 a b
  std::uint32_t element_order(ElementId a) const { return _element_order[a]; }

  std::span<ElementId const> generators() const { return _generators; }
  GroupBackend const &backend() const { return *_backend; }

  /// Human-readable form of an element (cycle notation, (h, v) pairs, ...).
  std::string describe(ElementId a) const;

  bool is_abelian() const;

private:
  friend FiniteGroup quotient_group(FiniteGroup const &, SubgroupHandle const &);
  friend FiniteGroup subgroup_as_group(FiniteGroup const &, SubgroupHandle const &);

  FiniteGroup() = default;

  std::size_t _order = 0;
  std::vector<std::uint16_t> _table;
  std::vector<ElementId> _inverse;
  std::vector<std::uint32_t> _element_order;
  std::vector<ElementId> _generators;
  std::shared_ptr<GroupBackend const> _backend;

  template <typename Native, typename Mul, typename Less, typename Hash>
  static FiniteGroup build(std::vector<Native> const &gens, Native const &identity,
                           Mul mul, Less less, Hash hash, std::size_t cap,
                           std::vector<Native> *elements_out);

  void finish_tables();
};

/// A subgroup stored canonically by its sorted member set, plus a generating
/// set and a membership mask.
class SubgroupHandle
{
public:
  SubgroupHandle() = default;

  /// `members` must be a subgroup; it is sorted here. Generators are optional
  /// and computed greedily when empty.
  static SubgroupHandle from_members(FiniteGroup const &g, std::vector<ElementId> members,
                                     std::vector<ElementId> generators = {});

  std::size_t order() const { return _members.size(); }
  std::span<ElementId const> members() const { return _members; }
  std::span<ElementId const> generators() const { return _generators; }
  bool contains(ElementId x) const { return (_mask[x >> 6] >> (x & 63u)) & 1u; }
  bool is_trivial() const { return _members.size() == 1; }

  std::vector<std::uint64_t> const &mask() const { return _mask; }

  friend bool operator==(SubgroupHandle const &a, SubgroupHandle const &b)
  { return a._members == b._members; }
  friend bool operator<(SubgroupHandle const &a, SubgroupHandle const &b)
  {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a._members < b._members;
  }

private:
  friend SubgroupHandle closure(FiniteGroup const &, std::span<ElementId const>);

  std::vector<ElementId> _members;
  std::vector<ElementId> _generators;
  std::vector<std::uint64_t> _mask;
};

struct MemberSetHash
{
  std::size_t operator()(std::vector<ElementId> const &m) const;
};

/// Smallest subgroup containing the generators (trivial for an empty list).
SubgroupHandle closure(FiniteGroup const &g, std::span<ElementId const> generators);
SubgroupHandle closure(FiniteGroup const &g, std::initializer_list<ElementId> generators);

/// As closure(), but gives up (returns nullopt) as soon as the subgroup grows
/// beyond max_order elements.
std::optional<SubgroupHandle> bounded_closure(FiniteGroup const &g,
                                              std::span<ElementId const> generators,
                                              std::size_t max_order);

SubgroupHandle whole_group(FiniteGroup const &g);
SubgroupHandle trivial_subgroup(FiniteGroup const &g);

bool is_subgroup_of(SubgroupHandle const &h, SubgroupHandle const &k);
bool intersects_trivially(SubgroupHandle const &h, SubgroupHandle const &k);
SubgroupHandle intersection(FiniteGroup const &g, SubgroupHandle const &h,
                            SubgroupHandle const &k);
SubgroupHandle join(FiniteGroup const &g, SubgroupHandle const &h, SubgroupHandle const &k);

SubgroupHandle conjugate(FiniteGroup const &g, SubgroupHandle const &h, ElementId x);
bool is_normal(FiniteGroup const &g, SubgroupHandle const &h);
bool normalizes(FiniteGroup const &g, SubgroupHandle const &h, ElementId x);
SubgroupHandle normalizer(FiniteGroup const &g, SubgroupHandle const &h);
SubgroupHandle normal_closure(FiniteGroup const &g, SubgroupHandle const &h);
SubgroupHandle centralizer(FiniteGroup const &g, ElementId x);

/// Conjugacy classes of elements; each class sorted, classes ordered by their
/// smallest member.
std::vector<std::vector<ElementId>> conjugacy_classes(FiniteGroup const &g);

/// G/N on canonical coset representatives. Throws NotNormal.
FiniteGroup quotient_group(FiniteGroup const &g, SubgroupHandle const &n);

/// The subgroup H as a group in its own right; element labels map back to G.
FiniteGroup subgroup_as_group(FiniteGroup const &g, SubgroupHandle const &h);

/// Label of each element of a derived group in its parent.
std::span<ElementId const> parent_labels(FiniteGroup const &derived);

SubgroupHandle derived_subgroup(FiniteGroup const &g, SubgroupHandle const &h);
bool is_solvable(FiniteGroup const &g);
bool is_cyclic(FiniteGroup const &g, SubgroupHandle const &h);
bool is_abelian(FiniteGroup const &g, SubgroupHandle const &h);

} // namespace cpd
