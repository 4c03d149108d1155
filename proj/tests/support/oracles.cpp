#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oracle
{

using cpd::ElementId;
using cpd::FiniteGroup;
using cpd::FpMatrix;
using cpd::FpVector;
using cpd::HModule;

Members naive_closure(FiniteGroup const &g, std::vector<ElementId> const &gens)
{
  std::set<ElementId> seen{0};
  std::deque<ElementId> queue{0};
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      ElementId y = g.mul(x, s);
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::set<Members> all_subgroups(FiniteGroup const &g)
{
  std::set<Members> subs;
  auto n = static_cast<ElementId>(g.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b)
      subs.insert(naive_closure(g, {a, b}));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Members> list(subs.begin(), subs.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        std::vector<ElementId> gens = list[i];
        gens.insert(gens.end(), list[j].begin(), list[j].end());
        if (subs.insert(naive_closure(g, gens)).second)
          grew = true;
      }
    }
  }
  return subs;
}

namespace
{

Members conjugate(FiniteGroup const &g, Members const &h, ElementId x)
{
  Members out;
  for (auto y : h)
    out.push_back(g.mul(g.mul(g.inv(x), y), x));
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(Members const &a, Members const &b)
{
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Members intersect(Members const &a, Members const &b)
{
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0)
      return false;
  }
  return true;
}

} // namespace

std::vector<std::set<Members>> conjugacy_partition(FiniteGroup const &g,
                                                   std::set<Members> const &subgroups)
{
  std::vector<std::set<Members>> out;
  std::set<Members> done;
  for (auto const &h : subgroups) {
    if (done.count(h))
      continue;
    std::set<Members> cls;
    for (ElementId x = 0; x < g.order(); ++x)
      cls.insert(conjugate(g, h, x));
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_normal(FiniteGroup const &g, Members const &h)
{
  for (ElementId x = 0; x < g.order(); ++x) {
    if (conjugate(g, h, x) != h)
      return false;
  }
  return true;
}

bool has_complement(std::set<Members> const &subgroups, Members const &h, std::size_t order)
{
  return std::any_of(subgroups.begin(), subgroups.end(), [&](Members const &k) {
    return k.size() * h.size() == order && intersect(h, k).size() == 1;
  });
}

std::vector<Members> maximal(std::set<Members> const &subgroups, std::size_t order)
{
  std::vector<Members> out;
  for (auto const &k : subgroups) {
    if (k.size() == order)
      continue;
    bool covered = std::any_of(subgroups.begin(), subgroups.end(), [&](Members const &l) {
      return l.size() != order && l.size() > k.size() && subset(k, l);
    });
    if (!covered)
      out.push_back(k);
  }
  return out;
}

Members frattini(FiniteGroup const &g)
{
  Members phi(g.order());
  std::iota(phi.begin(), phi.end(), ElementId{0});
  for (auto const &m : maximal(all_subgroups(g), g.order()))
    phi = intersect(phi, m);
  return phi;
}

std::vector<Members> normal_subgroups(FiniteGroup const &g)
{
  std::vector<Members> out;
  for (auto const &h : all_subgroups(g)) {
    if (is_normal(g, h))
      out.push_back(h);
  }
  return out;
}

std::vector<Members> minimal_normal(FiniteGroup const &g)
{
  auto normals = normal_subgroups(g);
  std::vector<Members> out;
  for (auto const &n : normals) {
    if (n.size() == 1)
      continue;
    bool minimal = std::none_of(normals.begin(), normals.end(), [&](Members const &m) {
      return m.size() > 1 && m.size() < n.size() && subset(m, n);
    });
    if (minimal)
      out.push_back(n);
  }
  return out;
}

Members o_pprime(FiniteGroup const &g, std::uint32_t p)
{
  Members best{0};
  for (auto const &n : normal_subgroups(g)) {
    if (n.size() % p != 0 && n.size() > best.size())
      best = n;
  }
  return best;
}

bool is_cpd(FiniteGroup const &g, std::uint32_t p, std::uint32_t d)
{
  std::size_t pd = 1;
  for (std::uint32_t k = 0; k < d; ++k)
    pd *= p;
  auto subs = all_subgroups(g);
  for (auto const &h : subs) {
    if (h.size() == pd && !has_complement(subs, h, g.order()))
      return false;
  }
  return true;
}

bool supersolvable(FiniteGroup const &g)
{
  for (auto const &m : maximal(all_subgroups(g), g.order())) {
    if (!is_prime(g.order() / m.size()))
      return false;
  }
  return true;
}

std::uint64_t psl2_order(std::uint64_t q)
{
  return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
}

namespace
{

std::uint64_t code_of(FpVector const &v, std::uint32_t p)
{
  std::uint64_t c = 0;
  for (auto x : v)
    c = c * p + x;
  return c;
}

FpVector vector_of(std::uint64_t c, std::size_t n, std::uint32_t p)
{
  FpVector v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(c % p);
    c /= p;
  }
  return v;
}

std::uint64_t power(std::uint64_t b, std::size_t e)
{
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

} // namespace

std::set<std::uint64_t> span_closure(HModule const &m, FpVector const &v)
{
  std::uint32_t p = m.p();
  std::set<std::uint64_t> seen{0};
  std::deque<FpVector> queue;
  auto visit = [&](FpVector const &w) {
    if (seen.insert(code_of(w, p)).second)
      queue.push_back(w);
  };
  visit(v);
  while (!queue.empty()) {
    FpVector w = queue.front();
    queue.pop_front();
    for (auto const &a : m.generators())
      visit(a.apply(w));
    std::vector<std::uint64_t> current(seen.begin(), seen.end());
    for (auto c : current) {
      FpVector u = vector_of(c, m.n(), p);
      for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = (u[i] + w[i]) % p;
      visit(u);
    }
  }
  return seen;
}

bool irreducible(HModule const &m)
{
  std::uint64_t size = power(m.p(), m.n());
  for (std::uint64_t c = 1; c < size; ++c) {
    if (span_closure(m, vector_of(c, m.n(), m.p())).size() != size)
      return false;
  }
  return true;
}

std::size_t commutant_dim(HModule const &m)
{
  std::size_t n = m.n();
  std::uint32_t p = m.p();
  std::uint64_t total = power(p, n * n);
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < total; ++c) {
    FpVector e = vector_of(c, n * n, p);
    std::vector<std::int64_t> entries(e.begin(), e.end());
    FpMatrix x = FpMatrix::from_entries(p, n, n, entries);
    bool commutes = std::all_of(m.generators().begin(), m.generators().end(),
                                [&](FpMatrix const &a) { return a * x == x * a; });
    if (commutes)
      ++count;
  }
  std::size_t k = 0;
  while (count > 1) {
    count /= p;
    ++k;
  }
  return k;
}

std::size_t minimal_submodule_count(HModule const &m)
{
  std::uint64_t size = power(m.p(), m.n());
  std::set<std::set<std::uint64_t>> minimal;
  for (std::uint64_t c = 1; c < size; ++c) {
    auto s = span_closure(m, vector_of(c, m.n(), m.p()));
    bool is_min = std::all_of(s.begin(), s.end(), [&](std::uint64_t w) {
      return w == 0 || span_closure(m, vector_of(w, m.n(), m.p())).size() == s.size();
    });
    if (is_min)
      minimal.insert(std::move(s));
  }
  return minimal.size();
}

namespace
{

std::vector<FpMatrix> matrix_elements(HModule const &m)
{
  std::set<FpMatrix> seen{FpMatrix::identity(m.p(), m.n())};
  std::deque<FpMatrix> queue{*seen.begin()};
  while (!queue.empty()) {
    FpMatrix x = queue.front();
    queue.pop_front();
    for (auto const &a : m.generators()) {
      FpMatrix y = x * a;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace

std::size_t acting_order(HModule const &m) { return matrix_elements(m).size(); }

bool acting_cyclic(HModule const &m)
{
  auto elements = matrix_elements(m);
  FpMatrix id = FpMatrix::identity(m.p(), m.n());
  for (auto const &x : elements) {
    std::size_t k = 1;
    for (FpMatrix y = x; !(y == id); y = y * x)
      ++k;
    if (k == elements.size())
      return true;
  }
  return false;
}

} // namespace oracle
