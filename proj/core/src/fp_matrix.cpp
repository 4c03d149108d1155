#include "cpd/fp_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace cpd
{

namespace fp
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p)
{
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e) {
    if (e & 1u)
      result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p)
{
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1)
    throw BadParameters("element not invertible mod p");
  return reduce(t, p);
}

std::uint32_t reduce(std::int64_t a, std::uint32_t p)
{
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0)
    r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m)
{
  if (m == 1)
    return 1;
  if (std::gcd(a, m) != 1)
    throw BadParameters("multiplicative order requires gcd(a, m) = 1");
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

bool normalize(FpVector &v, std::uint32_t p)
{
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end())
    return false;
  if (*it != 1) {
    std::uint32_t s = inv(*it, p);
    for (auto &x : v)
      x = mul(x, s, p);
  }
  return true;
}

FpVector add_vectors(FpVector const &a, FpVector const &b, std::uint32_t p)
{
  assert(a.size() == b.size());
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = add(a[i], b[i], p);
  return out;
}

std::uint64_t encode(FpVector const &v, std::uint32_t p)
{
  std::uint64_t code = 0;
  for (auto x : v)
    code = code * p + x;
  return code;
}

FpVector decode(std::uint64_t code, std::size_t n, std::uint32_t p)
{
  FpVector v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

} // namespace fp

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
: _p(p), _rows(rows), _cols(cols), _entries(rows * cols, 0u)
{
  if (!fp::is_prime(p))
    throw BadParameters("matrix modulus must be prime");
}

FpMatrix FpMatrix::from_entries(std::uint32_t p, std::size_t rows, std::size_t cols,
                                std::span<std::int64_t const> entries)
{
  if (entries.size() != rows * cols)
    throw BadParameters("matrix entry count does not match its shape");
  FpMatrix m(p, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m._entries[i] = fp::reduce(entries[i], p);
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::size_t cols,
                             std::vector<FpVector> const &rows)
{
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    std::copy(rows[r].begin(), rows[r].end(), m._entries.begin() + r * cols);
  }
  return m;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n)
{
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::block_diagonal(std::vector<FpMatrix> const &blocks)
{
  if (blocks.empty())
    throw BadParameters("block_diagonal needs at least one block");
  std::size_t n = 0;
  for (auto const &b : blocks) {
    if (!b.is_square() || b.p() != blocks.front().p())
      throw BadParameters("block_diagonal needs square blocks over one field");
    n += b.rows();
  }
  FpMatrix m(blocks.front().p(), n, n);
  std::size_t offset = 0;
  for (auto const &b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c)
        m(offset + r, offset + c) = b(r, c);
    }
    offset += b.rows();
  }
  return m;
}

FpMatrix FpMatrix::operator*(FpMatrix const &rhs) const
{
  assert(_cols == rhs._rows && _p == rhs._p);
  FpMatrix out(_p, _rows, rhs._cols);
  for (std::size_t i = 0; i < _rows; ++i) {
    for (std::size_t k = 0; k < _cols; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a)
        continue;
      for (std::size_t j = 0; j < rhs._cols; ++j)
        out(i, j) = static_cast<std::uint32_t>((out(i, j) + a * rhs(k, j)) % _p);
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(FpMatrix const &rhs) const
{
  assert(_rows == rhs._rows && _cols == rhs._cols && _p == rhs._p);
  FpMatrix out(*this);
  for (std::size_t i = 0; i < _entries.size(); ++i)
    out._entries[i] = fp::add(_entries[i], rhs._entries[i], _p);
  return out;
}

FpMatrix FpMatrix::scaled(std::uint32_t s) const
{
  FpMatrix out(*this);
  for (auto &x : out._entries)
    x = fp::mul(x, s % _p, _p);
  return out;
}

FpMatrix FpMatrix::transposed() const
{
  FpMatrix out(_p, _cols, _rows);
  for (std::size_t i = 0; i < _rows; ++i) {
    for (std::size_t j = 0; j < _cols; ++j)
      out(j, i) = (*this)(i, j);
  }
  return out;
}

FpVector FpMatrix::apply(std::span<std::uint32_t const> v) const
{
  assert(v.size() == _rows);
  std::vector<std::uint64_t> acc(_cols, 0);
  for (std::size_t i = 0; i < _rows; ++i) {
    if (!v[i])
      continue;
    for (std::size_t j = 0; j < _cols; ++j)
      acc[j] += std::uint64_t{v[i]} * (*this)(i, j);
  }
  FpVector out(_cols);
  for (std::size_t j = 0; j < _cols; ++j)
    out[j] = static_cast<std::uint32_t>(acc[j] % _p);
  return out;
}

FpMatrix FpMatrix::rref() const
{
  FpMatrix m(*this);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < _cols && pivot_row < _rows; ++c) {
    std::size_t r = pivot_row;
    while (r < _rows && m(r, c) == 0)
      ++r;
    if (r == _rows)
      continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < _cols; ++j)
        std::swap(m(r, j), m(pivot_row, j));
    }
    std::uint32_t s = fp::inv(m(pivot_row, c), _p);
    for (std::size_t j = 0; j < _cols; ++j)
      m(pivot_row, j) = fp::mul(m(pivot_row, j), s, _p);
    for (std::size_t i = 0; i < _rows; ++i) {
      if (i == pivot_row || m(i, c) == 0)
        continue;
      std::uint32_t f = m(i, c);
      for (std::size_t j = 0; j < _cols; ++j)
        m(i, j) = fp::sub(m(i, j), fp::mul(f, m(pivot_row, j), _p), _p);
    }
    ++pivot_row;
  }
  m._entries.resize(pivot_row * _cols);
  m._rows = pivot_row;
  return m;
}

std::size_t FpMatrix::rank() const { return rref().rows(); }

std::optional<FpMatrix> FpMatrix::inverse() const
{
  if (!is_square())
    return std::nullopt;
  std::size_t n = _rows;
  FpMatrix aug(_p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  FpMatrix red = aug.rref();
  if (red.rows() < n)
    return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (red(i, i) != 1)
      return std::nullopt;
  }
  FpMatrix out(_p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = red(i, n + j);
  }
  return out;
}

bool FpMatrix::is_identity() const
{ return is_square() && *this == identity(_p, _rows); }

FpMatrix FpMatrix::right_nullspace() const
{
  FpMatrix red = rref();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t c = 0;
    while (red(r, c) == 0)
      ++c;
    pivots.push_back(c);
  }
  std::vector<FpVector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < _cols; ++free) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    FpVector x(_cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[pivots[r]] = fp::sub(0, red(r, free), _p);
    basis.push_back(std::move(x));
  }
  return FpMatrix::from_rows(_p, _cols, basis).rref();
}

FpMatrix FpMatrix::left_nullspace() const { return transposed().right_nullspace(); }

FpMatrix FpMatrix::stacked(FpMatrix const &below) const
{
  assert(_cols == below._cols && _p == below._p);
  FpMatrix out(_p, _rows + below._rows, _cols);
  std::copy(_entries.begin(), _entries.end(), out._entries.begin());
  std::copy(below._entries.begin(), below._entries.end(),
            out._entries.begin() + _entries.size());
  return out;
}

std::uint64_t FpMatrix::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : _entries) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

namespace
{

struct MatrixHash
{
  std::size_t operator()(FpMatrix const &m) const { return m.hash(); }
};

} // namespace

std::vector<FpMatrix> matrix_group_closure(std::uint32_t p, std::size_t n,
                                           std::vector<FpMatrix> const &gens,
                                           std::size_t cap)
{
  std::vector<FpMatrix> elements{FpMatrix::identity(p, n)};
  std::unordered_map<FpMatrix, std::size_t, MatrixHash> seen{{elements.front(), 0}};

  std::size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    std::vector<FpMatrix> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto const &g : gens) {
        FpMatrix y = elements[i] * g;
        if (seen.emplace(y, 0).second)
          next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    if (elements.size() + next.size() > cap)
      throw CapExceeded("matrix group exceeds element cap");
    for (auto &y : next) {
      seen[y] = elements.size();
      elements.push_back(std::move(y));
    }
    level_begin = level_end;
    level_end = elements.size();
  }
  return elements;
}

std::uint64_t matrix_order(FpMatrix const &a)
{
  if (!a.is_invertible())
    throw BadParameters("matrix_order of a singular matrix");
  FpMatrix x = a;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * a;
    ++k;
  }
  return k;
}

} // namespace cpd
