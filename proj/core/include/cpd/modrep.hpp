#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpd/common.hpp"
#include "cpd/fp_matrix.hpp"
#include "cpd/group.hpp"

namespace cpd
{

/// A p'-group H given as a group of invertible n×n matrices over F_p, acting on
/// row vectors of F_p^n. The acting group is the matrix group itself, so the
/// action is faithful by construction.
class HModule
{
public:
  /// Closes the generators into the acting group. Throws BadParameters for
  /// non-invertible or wrongly sized matrices, HypothesisViolated when p
  /// divides |H|, and CapExceeded past caps.elements matrices.
  static HModule from_generators(std::uint32_t p, std::size_t n, std::vector<FpMatrix> generators,
                                 Caps const &caps = {});

  std::uint32_t p() const { return _p; }
  std::size_t n() const { return _n; }
  std::vector<FpMatrix> const &generators() const { return _generators; }
  /// Canonical closure order, identity first.
  std::vector<FpMatrix> const &elements() const { return _elements; }
  std::size_t h_order() const { return _elements.size(); }

  /// The acting matrix group is generated by a single element.
  bool acting_group_is_cyclic() const;

private:
  std::uint32_t _p = 2;
  std::size_t _n = 0;
  std::vector<FpMatrix> _generators;
  std::vector<FpMatrix> _elements;
};

/// An invariant subspace stored by its RREF basis, so equal subspaces have
/// identical bases.
struct SubmoduleBasis
{
  FpMatrix basis;

  std::size_t dim() const { return basis.rows(); }

  friend bool operator==(SubmoduleBasis const &a, SubmoduleBasis const &b) = default;
};

/// Smallest invariant subspace containing v.
SubmoduleBasis spin(HModule const &m, FpVector const &v);

bool is_invariant(HModule const &m, FpMatrix const &subspace);

/// Every nonzero vector spins to the whole space. Throws CapExceeded when
/// p^n exceeds caps.spin.
bool is_irreducible(HModule const &m, Caps const &caps = {});

/// An invariant complement of w, obtained by averaging a projection onto w
/// over the acting group. Throws NotInvariant when w is not invariant.
SubmoduleBasis maschke_complement(HModule const &m, SubmoduleBasis const &w);

/// Irreducible submodules whose direct sum is the whole space. Each step takes
/// the smallest spin over the nonzero vectors of the current invariant
/// remainder (ties: lexicographically smallest vector), then passes to a
/// Maschke complement of everything found so far.
std::vector<SubmoduleBasis> decompose(HModule const &m, Caps const &caps = {});

/// The action on w written in the coordinates of w's RREF basis. Generators
/// correspond one to one with those of m.
HModule restrict_to(HModule const &m, SubmoduleBasis const &w);

/// An invertible X with ρ_a(g) X = X ρ_b(g) for every generator, or nullopt.
/// Both modules must list corresponding generators.
std::optional<FpMatrix> find_isomorphism(HModule const &a, HModule const &b);

/// Basis (as flattened row-major rows) of all X with ρ_a(g) X = X ρ_b(g).
FpMatrix intertwiner_space(HModule const &a, HModule const &b);

struct Homogeneity
{
  bool homogeneous = false;
  std::size_t e = 0;  ///< dimension of the first component
  std::size_t t = 0;  ///< number of components
  std::vector<SubmoduleBasis> components;
};

Homogeneity is_homogeneous(HModule const &m, Caps const &caps = {});

/// Dimension of the commutant { A : A ρ(g) = ρ(g) A }.
std::size_t endomorphism_algebra_dim(HModule const &m);

bool is_absolutely_irreducible(HModule const &m, Caps const &caps = {});

/// Number of distinct irreducible submodules, found as the cyclic submodules
/// that contain no smaller cyclic submodule.
std::uint64_t count_irreducible_submodules(HModule const &m, Caps const &caps = {});

/// Arithmetic in GF(p^e) on polynomial coordinates (entry i is the
/// coefficient of x^i), modulo the lexicographically smallest monic
/// irreducible polynomial of degree e.
class GaloisField
{
public:
  GaloisField(std::uint32_t p, std::size_t e);

  std::uint32_t p() const { return _p; }
  std::size_t degree() const { return _e; }
  std::uint64_t size() const { return _size; }
  FpVector const &modulus() const { return _modulus; }  ///< monic, length e + 1

  FpVector one() const;
  FpVector element(std::uint64_t code) const;  ///< coefficient i is digit i base p
  FpVector mul(FpVector const &a, FpVector const &b) const;
  FpVector pow(FpVector const &a, std::uint64_t k) const;
  std::uint64_t multiplicative_order(FpVector const &a) const;

  /// Generator of the multiplicative group with the smallest code.
  FpVector primitive_element() const;

  /// Matrix of y -> y * a on the basis 1, x, ..., x^(e-1).
  FpMatrix multiplication_matrix(FpVector const &a) const;
  /// Matrix of y -> y^(p^k).
  FpMatrix frobenius_matrix(std::size_t k) const;

private:
  std::uint32_t _p;
  std::size_t _e;
  std::uint64_t _size;
  FpVector _modulus;
};

/// Cyclic group of order m acting on F_p^e through the companion matrix of the
/// minimal polynomial of an element of order m in GF(p^e). Requires m | p^e - 1
/// and ord_m(p) = e (BadParameters otherwise); the result is irreducible.
HModule singer_module(std::uint32_t p, std::size_t e, std::uint64_t m, Caps const &caps = {});

/// H acting by diagonal matrices; one generator per entry list.
HModule diagonal_module(std::uint32_t p, std::vector<std::vector<std::uint32_t>> const &diagonals,
                        Caps const &caps = {});

/// Trivial action on F_p^n with `generator_count` identity generators, for
/// padding direct sums.
HModule trivial_module(std::uint32_t p, std::size_t n, std::size_t generator_count = 1);

/// Block-diagonal sum; both modules must have the same generator count.
HModule direct_sum(HModule const &a, HModule const &b, Caps const &caps = {});

/// t copies of w.
HModule homogeneous_sum(HModule const &w, std::size_t t, Caps const &caps = {});

/// H ⋉ F_p^n with the semidirect backend.
FiniteGroup semidirect_group(HModule const &m, Caps const &caps = {});

} // namespace cpd
