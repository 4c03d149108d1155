#include "cpd/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cpd
{

HModule HModule::from_generators(std::uint32_t p, std::size_t n, std::vector<FpMatrix> generators,
                                 Caps const &caps)
{
  if (!fp::is_prime(p))
    throw BadParameters(std::to_string(p) + " is not prime");
  if (n == 0)
    throw BadParameters("module dimension must be positive");
  for (auto const &g : generators) {
    if (g.p() != p || g.rows() != n || g.cols() != n)
      throw BadParameters("generator matrix has the wrong shape or field");
    if (!g.is_invertible())
      throw BadParameters("generator matrix is not invertible");
  }

  HModule m;
  m._p = p;
  m._n = n;
  m._elements = matrix_group_closure(p, n, generators, caps.elements);
  m._generators = std::move(generators);
  if (m._elements.size() % p == 0)
    throw HypothesisViolated("acting group has order " + std::to_string(m._elements.size()) +
                             ", divisible by p = " + std::to_string(p));
  return m;
}

bool HModule::acting_group_is_cyclic() const
{
  return std::any_of(_elements.begin(), _elements.end(),
                     [&](FpMatrix const &a) { return matrix_order(a) == _elements.size(); });
}

namespace
{

/// Incrementally maintained semi-echelon basis: row i has a leading 1 in
/// column pivots[i] and later rows vanish there.
class EchelonBuilder
{
public:
  EchelonBuilder(std::uint32_t p, std::size_t n) : _p(p), _n(n) {}

  /// Reduces v against the basis; appends it and returns true when it is new.
  bool add(FpVector v)
  {
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      std::uint32_t c = v[_pivots[i]];
      if (!c)
        continue;
      for (std::size_t j = 0; j < _n; ++j)
        v[j] = fp::sub(v[j], fp::mul(c, _rows[i][j], _p), _p);
    }
    auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (lead == v.end())
      return false;
    fp::normalize(v, _p);
    _pivots.push_back(static_cast<std::size_t>(lead - v.begin()));
    _rows.push_back(std::move(v));
    return true;
  }

  std::size_t size() const { return _rows.size(); }
  FpVector const &row(std::size_t i) const { return _rows[i]; }
  FpMatrix matrix() const { return FpMatrix::from_rows(_p, _n, _rows).rref(); }

private:
  std::uint32_t _p;
  std::size_t _n;
  std::vector<FpVector> _rows;
  std::vector<std::size_t> _pivots;
};

void check_spin_cap(HModule const &m, std::size_t dim, Caps const &caps)
{
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    size *= m.p();
    if (size > caps.spin)
      throw CapExceeded("exhaustive spinning over " + std::to_string(m.p()) + "^" +
                        std::to_string(dim) + " vectors exceeds the spin cap");
  }
}

/// Calls f on c·basis for every normalized coefficient vector c, in
/// lexicographic order of c. For an RREF basis this is also the lexicographic
/// order of the resulting vectors. Stops early when f returns false.
template <typename F>
void for_each_normalized_vector(FpMatrix const &basis, F &&f)
{
  std::uint32_t p = basis.p();
  std::size_t k = basis.rows();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i)
    count *= p;
  for (std::uint64_t code = 1; code < count; ++code) {
    FpVector c = fp::decode(code, k, p);
    auto lead = std::find_if(c.begin(), c.end(), [](std::uint32_t x) { return x != 0; });
    if (*lead != 1)
      continue;
    FpVector v(basis.cols(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!c[i])
        continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = fp::add(v[j], fp::mul(c[i], basis(i, j), p), p);
    }
    if (!f(v))
      return;
  }
}

SubmoduleBasis zero_submodule(HModule const &m) { return {FpMatrix(m.p(), 0, m.n())}; }

SubmoduleBasis whole_space(HModule const &m) { return {FpMatrix::identity(m.p(), m.n())}; }

bool contains(FpMatrix const &big, FpMatrix const &small)
{
  return big.stacked(small).rank() == big.rows();
}

} // namespace

SubmoduleBasis spin(HModule const &m, FpVector const &v)
{
  if (v.size() != m.n())
    throw BadParameters("vector length does not match the module dimension");
  EchelonBuilder eb(m.p(), m.n());
  eb.add(v);
  for (std::size_t i = 0; i < eb.size(); ++i) {
    for (auto const &g : m.generators())
      eb.add(g.apply(eb.row(i)));
  }
  return {eb.matrix()};
}

bool is_invariant(HModule const &m, FpMatrix const &subspace)
{
  for (auto const &g : m.generators()) {
    if (!contains(subspace, subspace * g))
      return false;
  }
  return true;
}

bool is_irreducible(HModule const &m, Caps const &caps)
{
  check_spin_cap(m, m.n(), caps);
  bool irreducible = true;
  for_each_normalized_vector(FpMatrix::identity(m.p(), m.n()), [&](FpVector const &v) {
    irreducible = spin(m, v).dim() == m.n();
    return irreducible;
  });
  return irreducible;
}

SubmoduleBasis maschke_complement(HModule const &m, SubmoduleBasis const &w)
{
  FpMatrix const &wb = w.basis;
  if (wb.cols() != m.n() || !is_invariant(m, wb))
    throw NotInvariant("subspace is not invariant under the acting group");
  std::size_t k = wb.rows();
  if (k == 0)
    return whole_space(m);
  if (k == m.n())
    return zero_submodule(m);

  // B = basis of W followed by the standard vectors at the non-pivot columns of
  // W's RREF basis; P = B^-1 D B projects onto W along their span.
  std::vector<bool> pivot(m.n(), false);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m.n(); ++c) {
      if (wb(r, c)) {
        pivot[c] = true;
        break;
      }
    }
  }
  FpMatrix b = wb;
  for (std::size_t c = 0; c < m.n(); ++c) {
    if (!pivot[c]) {
      FpVector e(m.n(), 0);
      e[c] = 1;
      b = b.stacked(FpMatrix::from_rows(m.p(), m.n(), {e}));
    }
  }
  FpMatrix d(m.p(), m.n(), m.n());
  for (std::size_t i = 0; i < k; ++i)
    d(i, i) = 1;
  FpMatrix proj = *b.inverse() * d * b;

  FpMatrix avg(m.p(), m.n(), m.n());
  for (auto const &h : m.elements())
    avg = avg + *h.inverse() * proj * h;
  avg = avg.scaled(fp::inv(static_cast<std::uint32_t>(m.h_order() % m.p()), m.p()));
  return {avg.left_nullspace()};
}

std::vector<SubmoduleBasis> decompose(HModule const &m, Caps const &caps)
{
  check_spin_cap(m, m.n(), caps);
  std::vector<SubmoduleBasis> components;
  FpMatrix found(m.p(), 0, m.n());
  SubmoduleBasis remainder = whole_space(m);
  while (remainder.dim() > 0) {
    std::optional<SubmoduleBasis> best;
    for_each_normalized_vector(remainder.basis, [&](FpVector const &v) {
      SubmoduleBasis s = spin(m, v);
      if (!best || s.dim() < best->dim())
        best = std::move(s);
      return best->dim() > 1;
    });
    found = found.stacked(best->basis).rref();
    components.push_back(std::move(*best));
    remainder = maschke_complement(m, {found});
  }
  return components;
}

HModule restrict_to(HModule const &m, SubmoduleBasis const &w)
{
  FpMatrix const &wb = w.basis;
  std::size_t k = wb.rows();
  if (k == 0)
    throw BadParameters("cannot restrict to the zero submodule");
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m.n(); ++c) {
      if (wb(r, c)) {
        pivots.push_back(c);
        break;
      }
    }
  }
  // In RREF the coordinate of a vector of W along basis row r is its entry at
  // pivot column r.
  std::vector<FpMatrix> gens;
  for (auto const &g : m.generators()) {
    FpMatrix image = wb * g;
    FpMatrix local(m.p(), k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c)
        local(r, c) = image(r, pivots[c]);
    }
    gens.push_back(std::move(local));
  }
  return HModule::from_generators(m.p(), k, std::move(gens));
}

FpMatrix intertwiner_space(HModule const &a, HModule const &b)
{
  if (a.p() != b.p() || a.generators().size() != b.generators().size())
    throw BadParameters("modules must share the field and the generator list");
  std::uint32_t p = a.p();
  std::size_t ra = a.n(), cb = b.n();
  std::size_t unknowns = ra * cb;
  std::vector<FpVector> equations;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    FpMatrix const &ag = a.generators()[g];
    FpMatrix const &bg = b.generators()[g];
    // (A_g X - X B_g)[i][j] = sum_k A_g[i][k] X[k][j] - sum_k X[i][k] B_g[k][j]
    for (std::size_t i = 0; i < ra; ++i) {
      for (std::size_t j = 0; j < cb; ++j) {
        FpVector eq(unknowns, 0);
        for (std::size_t k = 0; k < ra; ++k)
          eq[k * cb + j] = fp::add(eq[k * cb + j], ag(i, k), p);
        for (std::size_t k = 0; k < cb; ++k)
          eq[i * cb + k] = fp::sub(eq[i * cb + k], bg(k, j), p);
        equations.push_back(std::move(eq));
      }
    }
  }
  if (equations.empty())
    return FpMatrix::identity(p, unknowns);
  return FpMatrix::from_rows(p, unknowns, equations).right_nullspace();
}

std::optional<FpMatrix> find_isomorphism(HModule const &a, HModule const &b)
{
  if (a.n() != b.n())
    return std::nullopt;
  FpMatrix space = intertwiner_space(a, b);
  for (std::size_t r = 0; r < space.rows(); ++r) {
    auto row = space.row(r);
    std::vector<std::int64_t> entries(row.begin(), row.end());
    FpMatrix x = FpMatrix::from_entries(a.p(), a.n(), b.n(), entries);
    if (x.is_invertible())
      return x;
  }
  return std::nullopt;
}

Homogeneity is_homogeneous(HModule const &m, Caps const &caps)
{
  Homogeneity out;
  out.components = decompose(m, caps);
  out.t = out.components.size();
  out.e = out.components.front().dim();
  HModule first = restrict_to(m, out.components.front());
  out.homogeneous = std::all_of(out.components.begin() + 1, out.components.end(),
                                [&](SubmoduleBasis const &c) {
                                  return find_isomorphism(first, restrict_to(m, c)).has_value();
                                });
  return out;
}

std::size_t endomorphism_algebra_dim(HModule const &m)
{
  return intertwiner_space(m, m).rows();
}

bool is_absolutely_irreducible(HModule const &m, Caps const &caps)
{
  return is_irreducible(m, caps) && endomorphism_algebra_dim(m) == 1;
}

std::uint64_t count_irreducible_submodules(HModule const &m, Caps const &caps)
{
  check_spin_cap(m, m.n(), caps);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SubmoduleBasis> spins;
  for_each_normalized_vector(FpMatrix::identity(m.p(), m.n()), [&](FpVector const &v) {
    SubmoduleBasis s = spin(m, v);
    if (seen.insert(s.basis.entries()).second)
      spins.push_back(std::move(s));
    return true;
  });
  return static_cast<std::uint64_t>(
    std::count_if(spins.begin(), spins.end(), [&](SubmoduleBasis const &s) {
      return std::none_of(spins.begin(), spins.end(), [&](SubmoduleBasis const &t) {
        return t.dim() < s.dim() && contains(s.basis, t.basis);
      });
    }));
}

namespace
{

/// Remainder of a modulo the monic polynomial f (coefficients low to high).
FpVector poly_mod(FpVector a, FpVector const &f, std::uint32_t p)
{
  std::size_t df = f.size() - 1;
  for (std::size_t i = a.size(); i-- > df;) {
    std::uint32_t c = a[i];
    if (!c)
      continue;
    for (std::size_t j = 0; j <= df; ++j)
      a[i - df + j] = fp::sub(a[i - df + j], fp::mul(c, f[j], p), p);
  }
  a.resize(std::min(a.size(), df));
  a.resize(df, 0);
  return a;
}

FpVector poly_mul(FpVector const &a, FpVector const &b, std::uint32_t p)
{
  FpVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i])
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = fp::add(out[i + j], fp::mul(a[i], b[j], p), p);
  }
  return out;
}

FpVector digits(std::uint64_t code, std::size_t n, std::uint32_t p)
{
  FpVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e)
{
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= b;
  return r;
}

/// Monic f of degree e is irreducible iff no monic polynomial of degree
/// 1..e/2 divides it.
bool is_irreducible_poly(FpVector const &f, std::uint32_t p)
{
  std::size_t e = f.size() - 1;
  for (std::size_t deg = 1; deg <= e / 2; ++deg) {
    for (std::uint64_t code = 0; code < ipow(p, deg); ++code) {
      FpVector g = digits(code, deg, p);
      g.push_back(1);
      FpVector r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; }))
        return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0)
        n /= q;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace

GaloisField::GaloisField(std::uint32_t p, std::size_t e) : _p(p), _e(e), _size(ipow(p, e))
{
  if (!fp::is_prime(p) || e == 0)
    throw BadParameters("GF(p^e) needs a prime p and e >= 1");
  for (std::uint64_t code = 0;; ++code) {
    FpVector f = digits(code, e, p);
    f.push_back(1);
    if (is_irreducible_poly(f, p)) {
      _modulus = std::move(f);
      break;
    }
  }
}

FpVector GaloisField::one() const
{
  FpVector v(_e, 0);
  v[0] = 1;
  return v;
}

FpVector GaloisField::element(std::uint64_t code) const { return digits(code, _e, _p); }

FpVector GaloisField::mul(FpVector const &a, FpVector const &b) const
{
  return poly_mod(poly_mul(a, b, _p), _modulus, _p);
}

FpVector GaloisField::pow(FpVector const &a, std::uint64_t k) const
{
  FpVector result = one();
  FpVector base = a;
  while (k) {
    if (k & 1u)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

std::uint64_t GaloisField::multiplicative_order(FpVector const &a) const
{
  std::uint64_t order = _size - 1;
  for (auto q : prime_factors(_size - 1)) {
    while (order % q == 0 && pow(a, order / q) == one())
      order /= q;
  }
  return order;
}

FpVector GaloisField::primitive_element() const
{
  for (std::uint64_t code = 1; code < _size; ++code) {
    FpVector a = element(code);
    if (multiplicative_order(a) == _size - 1)
      return a;
  }
  throw BadParameters("no primitive element");  // unreachable for a field
}

FpMatrix GaloisField::multiplication_matrix(FpVector const &a) const
{
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < _e; ++i) {
    FpVector basis(_e, 0);
    basis[i] = 1;
    rows.push_back(mul(basis, a));
  }
  return FpMatrix::from_rows(_p, _e, rows);
}

FpMatrix GaloisField::frobenius_matrix(std::size_t k) const
{
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < _e; ++i) {
    FpVector basis(_e, 0);
    basis[i] = 1;
    rows.push_back(pow(basis, ipow(_p, k)));
  }
  return FpMatrix::from_rows(_p, _e, rows);
}

HModule singer_module(std::uint32_t p, std::size_t e, std::uint64_t m, Caps const &caps)
{
  if (!fp::is_prime(p) || e == 0 || m == 0)
    throw BadParameters("singer module needs a prime p, e >= 1 and m >= 1");
  std::uint64_t q = ipow(p, e);
  if ((q - 1) % m != 0 || std::gcd<std::uint64_t>(p, m) != 1 ||
      fp::multiplicative_order(p, m) != e)
    throw BadParameters("singer module needs m | p^e - 1 and ord_m(p) = e (p=" +
                        std::to_string(p) + ", e=" + std::to_string(e) +
                        ", m=" + std::to_string(m) + ")");

  GaloisField field(p, e);
  FpVector alpha = field.pow(field.primitive_element(), (q - 1) / m);

  // Minimal polynomial prod_i (x - alpha^(p^i)), computed with coefficients in
  // the field; they land in the prime field.
  std::vector<FpVector> poly{field.one()};
  FpVector root = alpha;
  for (std::size_t i = 0; i < e; ++i) {
    std::vector<FpVector> next(poly.size() + 1, FpVector(e, 0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = fp::add_vectors(next[j + 1], poly[j], p);
      FpVector t = field.mul(poly[j], root);
      for (auto &x : t)
        x = fp::sub(0, x, p);
      next[j] = fp::add_vectors(next[j], t, p);
    }
    poly = std::move(next);
    root = field.pow(root, p);
  }

  // Companion matrix: e_i -> e_(i+1), e_(e-1) -> -(c_0, ..., c_(e-1)).
  FpMatrix companion(p, e, e);
  for (std::size_t i = 0; i + 1 < e; ++i)
    companion(i, i + 1) = 1;
  for (std::size_t j = 0; j < e; ++j)
    companion(e - 1, j) = fp::sub(0, poly[j][0], p);
  return HModule::from_generators(p, e, {companion}, caps);
}

HModule diagonal_module(std::uint32_t p, std::vector<std::vector<std::uint32_t>> const &diagonals,
                        Caps const &caps)
{
  if (diagonals.empty() || diagonals.front().empty())
    throw BadParameters("diagonal module needs at least one nonempty diagonal");
  std::size_t n = diagonals.front().size();
  std::vector<FpMatrix> gens;
  for (auto const &diag : diagonals) {
    if (diag.size() != n)
      throw BadParameters("diagonals must have equal length");
    FpMatrix g(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      g(i, i) = diag[i] % p;
    gens.push_back(std::move(g));
  }
  return HModule::from_generators(p, n, std::move(gens), caps);
}

HModule trivial_module(std::uint32_t p, std::size_t n, std::size_t generator_count)
{
  return HModule::from_generators(
    p, n, std::vector<FpMatrix>(generator_count, FpMatrix::identity(p, n)));
}

HModule direct_sum(HModule const &a, HModule const &b, Caps const &caps)
{
  if (a.p() != b.p() || a.generators().size() != b.generators().size())
    throw BadParameters("direct sum needs the same field and generator count");
  std::vector<FpMatrix> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    gens.push_back(FpMatrix::block_diagonal({a.generators()[i], b.generators()[i]}));
  return HModule::from_generators(a.p(), a.n() + b.n(), std::move(gens), caps);
}

HModule homogeneous_sum(HModule const &w, std::size_t t, Caps const &caps)
{
  if (t == 0)
    throw BadParameters("multiplicity must be positive");
  std::vector<FpMatrix> gens;
  for (auto const &g : w.generators())
    gens.push_back(FpMatrix::block_diagonal(std::vector<FpMatrix>(t, g)));
  return HModule::from_generators(w.p(), w.n() * t, std::move(gens), caps);
}

FiniteGroup semidirect_group(HModule const &m, Caps const &caps)
{
  return FiniteGroup::semidirect(m.p(), m.n(), m.generators(), m.elements(), caps);
}

} // namespace cpd
