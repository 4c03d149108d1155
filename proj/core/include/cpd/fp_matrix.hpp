#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpd/common.hpp"

namespace cpd
{

/// Residues mod p, stored as entries in [0, p).
using FpVector = std::vector<std::uint32_t>;

namespace fp
{

bool is_prime(std::uint64_t n);

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{ return a >= b ? a - b : a + p - b; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{ return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Multiplicative inverse; a must be nonzero mod p.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

std::uint32_t reduce(std::int64_t a, std::uint32_t p);

/// Multiplicative order of a modulo m (gcd(a, m) = 1 required). ord_1 = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Scales v so that its first nonzero entry is 1. Returns false for the zero vector.
bool normalize(FpVector &v, std::uint32_t p);

FpVector add_vectors(FpVector const &a, FpVector const &b, std::uint32_t p);

/// Integer code of v with the first coordinate most significant, so that codes
/// order vectors lexicographically.
std::uint64_t encode(FpVector const &v, std::uint32_t p);
FpVector decode(std::uint64_t code, std::size_t n, std::uint32_t p);

} // namespace fp

/// Dense matrix over F_p, row-major. Acts on row vectors from the right.
class FpMatrix
{
public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  /// Entries are reduced mod p (negative values allowed).
  static FpMatrix from_entries(std::uint32_t p, std::size_t rows, std::size_t cols,
                               std::span<std::int64_t const> entries);
  static FpMatrix from_rows(std::uint32_t p, std::size_t cols,
                            std::vector<FpVector> const &rows);
  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix block_diagonal(std::vector<FpMatrix> const &blocks);

  std::uint32_t p() const { return _p; }
  std::size_t rows() const { return _rows; }
  std::size_t cols() const { return _cols; }
  bool is_square() const { return _rows == _cols; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const
  { return _entries[r * _cols + c]; }
  std::uint32_t &operator()(std::size_t r, std::size_t c)
  { return _entries[r * _cols + c]; }

  std::span<std::uint32_t const> row(std::size_t r) const
  { return {_entries.data() + r * _cols, _cols}; }
  FpVector row_vector(std::size_t r) const
  { return FpVector(row(r).begin(), row(r).end()); }

  std::vector<std::uint32_t> const &entries() const { return _entries; }

  FpMatrix operator*(FpMatrix const &rhs) const;
  FpMatrix operator+(FpMatrix const &rhs) const;
  FpMatrix scaled(std::uint32_t s) const;
  FpMatrix transposed() const;

  /// Row vector times matrix.
  FpVector apply(std::span<std::uint32_t const> v) const;

  /// Reduced row-echelon form with zero rows dropped; pivots are leading 1s in
  /// increasing column order.
  FpMatrix rref() const;
  std::size_t rank() const;

  std::optional<FpMatrix> inverse() const;
  bool is_invertible() const { return is_square() && rank() == _rows; }
  bool is_identity() const;

  /// Basis (in RREF) of { v : v * A = 0 }.
  FpMatrix left_nullspace() const;
  /// Basis (in RREF) of { x : A * x^T = 0 }, returned as rows.
  FpMatrix right_nullspace() const;

  /// Stacks the rows of both matrices.
  FpMatrix stacked(FpMatrix const &below) const;

  std::uint64_t hash() const;

  friend bool operator==(FpMatrix const &a, FpMatrix const &b) = default;
  friend bool operator<(FpMatrix const &a, FpMatrix const &b)
  { return a._entries < b._entries; }

private:
  std::uint32_t _p = 2;
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<std::uint32_t> _entries;
};

/// Elements of the matrix group generated by gens, in canonical order: breadth
/// first from the generators in input order, each level sorted by entries. The
/// identity comes first. Throws CapExceeded past `cap` elements.
std::vector<FpMatrix> matrix_group_closure(std::uint32_t p, std::size_t n,
                                           std::vector<FpMatrix> const &gens,
                                           std::size_t cap);

/// Multiplicative order of an invertible matrix.
std::uint64_t matrix_order(FpMatrix const &a);

} // namespace cpd
