#include "cpd/group.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cpd
{

namespace
{

constexpr std::size_t table_limit = std::numeric_limits<std::uint16_t>::max();

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t x)
{
  h ^= x;
  return h * 1099511628211ull;
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const
  {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p)
      h = fnv_mix(h, x);
    return h;
  }
};

struct PairHash
{
  std::size_t operator()(std::pair<std::uint32_t, std::uint64_t> const &x) const
  { return fnv_mix(fnv_mix(1469598103934665603ull, x.first), x.second); }
};

std::vector<std::uint64_t> make_mask(std::size_t order)
{ return std::vector<std::uint64_t>((order + 63) / 64, 0); }

void set_bit(std::vector<std::uint64_t> &mask, ElementId x)
{ mask[x >> 6] |= std::uint64_t{1} << (x & 63u); }

bool test_bit(std::vector<std::uint64_t> const &mask, ElementId x)
{ return (mask[x >> 6] >> (x & 63u)) & 1u; }

std::string cycle_notation(Permutation const &perm)
{
  std::ostringstream out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i)
      continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out << ' ';
      out << j;
      first = false;
      j = perm[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

} // namespace

std::size_t MemberSetHash::operator()(std::vector<ElementId> const &m) const
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : m)
    h = fnv_mix(h, x);
  return h;
}

template <typename Native, typename Mul, typename Less, typename Hash>
FiniteGroup FiniteGroup::build(std::vector<Native> const &gens, Native const &identity,
                               Mul mul, Less less, Hash hash, std::size_t cap,
                               std::vector<Native> *elements_out)
{
  std::size_t limit = std::min(cap, table_limit);

  std::vector<Native> elements{identity};
  std::unordered_map<Native, std::uint32_t, Hash> index(16, hash);
  index.emplace(identity, 0u);
  // element b (b > 0) is parent[b] * gens[via[b]], with parent[b] < b
  std::vector<std::uint32_t> parent{0}, via{0};

  std::size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    struct Found
    {
      Native value;
      std::uint32_t parent;
      std::uint32_t via;
    };
    std::vector<Found> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
        Native y = mul(elements[i], gens[gi]);
        if (index.emplace(y, std::numeric_limits<std::uint32_t>::max()).second)
          next.push_back({std::move(y), static_cast<std::uint32_t>(i), gi});
      }
    }
    std::sort(next.begin(), next.end(),
              [&](Found const &a, Found const &b) { return less(a.value, b.value); });
    if (elements.size() + next.size() > limit)
      throw CapExceeded("group order exceeds element cap of " + std::to_string(limit));
    for (auto &f : next) {
      index[f.value] = static_cast<std::uint32_t>(elements.size());
      elements.push_back(std::move(f.value));
      parent.push_back(f.parent);
      via.push_back(f.via);
    }
    level_begin = level_end;
    level_end = elements.size();
  }

  FiniteGroup g;
  g._order = elements.size();
  std::size_t n = g._order;

  std::vector<std::vector<std::uint32_t>> right(gens.size(), std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      right[gi][x] = index.at(mul(elements[x], gens[gi]));
  }

  g._table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t *row = g._table.data() + a * n;
    row[0] = static_cast<std::uint16_t>(a);
    for (std::size_t b = 1; b < n; ++b)
      row[b] = static_cast<std::uint16_t>(right[via[b]][row[parent[b]]]);
  }

  for (auto const &gen : gens) {
    ElementId id = index.at(gen);
    if (id != 0 && std::find(g._generators.begin(), g._generators.end(), id) ==
                       g._generators.end())
      g._generators.push_back(id);
  }

  g.finish_tables();
  if (elements_out)
    *elements_out = std::move(elements);
  return g;
}

void FiniteGroup::finish_tables()
{
  std::size_t n = _order;
  _inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t const *row = _table.data() + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == 0) {
        _inverse[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }
  _element_order.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    ElementId x = static_cast<ElementId>(a);
    std::uint32_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<ElementId>(a));
      ++k;
    }
    _element_order[a] = k;
  }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           std::vector<Permutation> const &generators,
                                           Caps const &caps)
{
  if (degree == 0 || degree > table_limit)
    throw BadInput("permutation degree out of range");
  for (auto const &perm : generators) {
    if (perm.size() != degree)
      throw BadInput("permutation generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : perm) {
      if (x >= degree || hit[x])
        throw BadInput("permutation generator is not a bijection");
      hit[x] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});

  auto mul = [](Permutation const &a, Permutation const &b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[i] = b[a[i]];
    return c;
  };

  PermutationBackend backend;
  backend.degree = degree;
  backend.generators = generators;
  FiniteGroup g = build(generators, id, mul, std::less<Permutation>{}, PermutationHash{},
                        caps.elements, &backend.elements);
  g._backend = std::make_shared<GroupBackend const>(std::move(backend));
  return g;
}

FiniteGroup FiniteGroup::semidirect(std::uint32_t p, std::size_t n,
                                    std::vector<FpMatrix> const &h_generators,
                                    std::vector<FpMatrix> const &h_elements,
                                    Caps const &caps)
{
  std::uint64_t vcount = 1;
  for (std::size_t i = 0; i < n; ++i) {
    vcount *= p;
    if (vcount > caps.elements)
      throw CapExceeded("semidirect product exceeds element cap");
  }
  if (h_elements.empty() || vcount * h_elements.size() > std::min(caps.elements, table_limit))
    throw CapExceeded("semidirect product exceeds element cap");

  std::size_t hn = h_elements.size();
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
  for (std::uint32_t i = 0; i < hn; ++i)
    by_hash[h_elements[i].hash()].push_back(i);
  auto h_index_of = [&](FpMatrix const &m) -> std::uint32_t {
    auto it = by_hash.find(m.hash());
    if (it != by_hash.end()) {
      for (auto i : it->second) {
        if (h_elements[i] == m)
          return i;
      }
    }
    throw BadParameters("matrix group is not closed");
  };

  std::vector<std::uint32_t> h_table(hn * hn);
  for (std::size_t a = 0; a < hn; ++a) {
    for (std::size_t b = 0; b < hn; ++b)
      h_table[a * hn + b] = h_index_of(h_elements[a] * h_elements[b]);
  }

  using Native = std::pair<std::uint32_t, std::uint64_t>;
  auto mul = [&](Native const &a, Native const &b) {
    FpVector v1 = fp::decode(a.second, n, p);
    FpVector v2 = fp::decode(b.second, n, p);
    FpVector w = fp::add_vectors(h_elements[b.first].apply(v1), v2, p);
    return Native{h_table[std::size_t{a.first} * hn + b.first], fp::encode(w, p)};
  };

  std::vector<Native> gens;
  for (auto const &m : h_generators)
    gens.push_back({h_index_of(m), 0});
  for (std::size_t j = 0; j < n; ++j) {
    FpVector e(n, 0);
    e[j] = 1;
    gens.push_back({0, fp::encode(e, p)});
  }

  std::vector<Native> elements;
  FiniteGroup g = build(gens, Native{0, 0}, mul, std::less<Native>{}, PairHash{},
                        caps.elements, &elements);

  SemidirectBackend backend;
  backend.p = p;
  backend.n = n;
  backend.h_generators = h_generators;
  backend.h_elements = h_elements;
  for (auto const &[h, v] : elements) {
    backend.h_index.push_back(h);
    backend.v_code.push_back(v);
  }
  g._backend = std::make_shared<GroupBackend const>(std::move(backend));
  return g;
}

ElementId FiniteGroup::pow(ElementId a, std::int64_t k) const
{
  std::int64_t ord = _element_order[a];
  k %= ord;
  if (k < 0)
    k += ord;
  ElementId result = 0, base = a;
  while (k) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const
{ return mul(mul(inv(a), inv(b)), mul(a, b)); }

std::string FiniteGroup::describe(ElementId a) const
{
  return std::visit(
    [&](auto const &b) -> std::string {
      using B = std::decay_t<decltype(b)>;
      if constexpr (std::is_same_v<B, PermutationBackend>) {
        return cycle_notation(b.elements[a]);
      } else if constexpr (std::is_same_v<B, SemidirectBackend>) {
        std::ostringstream out;
        out << "(h" << b.h_index[a] << "|";
        FpVector v = fp::decode(b.v_code[a], b.n, b.p);
        for (std::size_t i = 0; i < v.size(); ++i)
          out << (i ? "," : "") << v[i];
        out << ")";
        return out.str();
      } else {
        std::string prefix = b.kind == DerivedBackend::Kind::Quotient ? "coset#" : "elt#";
        return prefix + std::to_string(b.parent_labels[a]);
      }
    },
    *_backend);
}

bool FiniteGroup::is_abelian() const
{
  for (auto a : _generators) {
    for (auto b : _generators) {
      if (mul(a, b) != mul(b, a))
        return false;
    }
  }
  return true;
}

SubgroupHandle SubgroupHandle::from_members(FiniteGroup const &g,
                                            std::vector<ElementId> members,
                                            std::vector<ElementId> generators)
{
  std::sort(members.begin(), members.end());
  SubgroupHandle h;
  h._mask = make_mask(g.order());
  for (auto x : members)
    set_bit(h._mask, x);
  h._members = std::move(members);

  if (generators.empty() && h._members.size() > 1) {
    std::vector<std::uint64_t> reached = make_mask(g.order());
    set_bit(reached, 0);
    for (auto x : h._members) {
      if (test_bit(reached, x))
        continue;
      generators.push_back(x);
      SubgroupHandle partial = closure(g, generators);
      reached = partial._mask;
    }
  }
  h._generators = std::move(generators);
  return h;
}

namespace
{

std::vector<ElementId> distinct_nontrivial(std::span<ElementId const> gens)
{
  std::vector<ElementId> out;
  for (auto x : gens) {
    if (x != 0 && std::find(out.begin(), out.end(), x) == out.end())
      out.push_back(x);
  }
  return out;
}

} // namespace

std::optional<SubgroupHandle> bounded_closure(FiniteGroup const &g,
                                              std::span<ElementId const> generators,
                                              std::size_t max_order)
{
  std::vector<ElementId> gens = distinct_nontrivial(generators);
  std::vector<std::uint64_t> mask = make_mask(g.order());
  std::vector<ElementId> members{0};
  set_bit(mask, 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      ElementId y = g.mul(members[i], s);
      if (!test_bit(mask, y)) {
        set_bit(mask, y);
        members.push_back(y);
        if (members.size() > max_order)
          return std::nullopt;
      }
    }
  }
  return SubgroupHandle::from_members(g, std::move(members), std::move(gens));
}

SubgroupHandle closure(FiniteGroup const &g, std::span<ElementId const> generators)
{ return *bounded_closure(g, generators, g.order()); }

SubgroupHandle closure(FiniteGroup const &g, std::initializer_list<ElementId> generators)
{ return closure(g, std::span<ElementId const>(generators.begin(), generators.size())); }

SubgroupHandle whole_group(FiniteGroup const &g)
{
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  std::vector<ElementId> gens(g.generators().begin(), g.generators().end());
  return SubgroupHandle::from_members(g, std::move(all), std::move(gens));
}

SubgroupHandle trivial_subgroup(FiniteGroup const &g)
{ return SubgroupHandle::from_members(g, {0}); }

bool is_subgroup_of(SubgroupHandle const &h, SubgroupHandle const &k)
{
  if (h.order() > k.order() || k.order() % h.order() != 0)
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](ElementId x) { return k.contains(x); });
}

bool intersects_trivially(SubgroupHandle const &h, SubgroupHandle const &k)
{
  SubgroupHandle const &small = h.order() <= k.order() ? h : k;
  SubgroupHandle const &large = h.order() <= k.order() ? k : h;
  for (auto x : small.members()) {
    if (x != 0 && large.contains(x))
      return false;
  }
  return true;
}

SubgroupHandle intersection(FiniteGroup const &g, SubgroupHandle const &h,
                            SubgroupHandle const &k)
{
  std::vector<ElementId> common;
  for (auto x : h.members()) {
    if (k.contains(x))
      common.push_back(x);
  }
  return SubgroupHandle::from_members(g, std::move(common));
}

SubgroupHandle join(FiniteGroup const &g, SubgroupHandle const &h, SubgroupHandle const &k)
{
  std::vector<ElementId> gens(h.generators().begin(), h.generators().end());
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return closure(g, gens);
}

SubgroupHandle conjugate(FiniteGroup const &g, SubgroupHandle const &h, ElementId x)
{
  std::vector<ElementId> members;
  members.reserve(h.order());
  for (auto m : h.members())
    members.push_back(g.conj(m, x));
  std::vector<ElementId> gens;
  for (auto s : h.generators())
    gens.push_back(g.conj(s, x));
  return SubgroupHandle::from_members(g, std::move(members), std::move(gens));
}

bool normalizes(FiniteGroup const &g, SubgroupHandle const &h, ElementId x)
{
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](ElementId s) { return h.contains(g.conj(s, x)); });
}

bool is_normal(FiniteGroup const &g, SubgroupHandle const &h)
{
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](ElementId x) { return normalizes(g, h, x); });
}

SubgroupHandle normalizer(FiniteGroup const &g, SubgroupHandle const &h)
{
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (normalizes(g, h, x))
      members.push_back(x);
  }
  return SubgroupHandle::from_members(g, std::move(members));
}

namespace
{

/// Smallest subgroup containing `seed` and normalized by every element of
/// `by`.
SubgroupHandle close_under_conjugation(FiniteGroup const &g, std::vector<ElementId> seed,
                                       std::span<ElementId const> by)
{
  SubgroupHandle n = closure(g, seed);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementId> gens(n.generators().begin(), n.generators().end());
    for (auto s : n.generators()) {
      for (auto x : by) {
        ElementId c = g.conj(s, x);
        if (!n.contains(c)) {
          gens.push_back(c);
          changed = true;
        }
      }
    }
    if (changed)
      n = closure(g, gens);
  }
  return n;
}

} // namespace

SubgroupHandle normal_closure(FiniteGroup const &g, SubgroupHandle const &h)
{
  return close_under_conjugation(
    g, std::vector<ElementId>(h.generators().begin(), h.generators().end()), g.generators());
}

SubgroupHandle centralizer(FiniteGroup const &g, ElementId x)
{
  std::vector<ElementId> members;
  for (ElementId y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x))
      members.push_back(y);
  }
  return SubgroupHandle::from_members(g, std::move(members));
}

std::vector<std::vector<ElementId>> conjugacy_classes(FiniteGroup const &g)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<ElementId> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto s : g.generators()) {
        ElementId y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

FiniteGroup quotient_group(FiniteGroup const &g, SubgroupHandle const &n)
{
  if (!is_normal(g, n))
    throw NotNormal("quotient by a subgroup that is not normal");

  constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  auto coset_of = std::make_shared<std::vector<ElementId>>(g.order(), unset);
  std::vector<ElementId> rep;
  for (ElementId x = 0; x < g.order(); ++x) {
    if ((*coset_of)[x] != unset)
      continue;
    ElementId c = static_cast<ElementId>(rep.size());
    rep.push_back(x);
    for (auto m : n.members())
      (*coset_of)[g.mul(x, m)] = c;
  }

  std::vector<std::uint32_t> gens;
  for (auto s : g.generators())
    gens.push_back((*coset_of)[s]);

  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    return (*coset_of)[g.mul(rep[a], rep[b])];
  };
  auto less = [&](std::uint32_t a, std::uint32_t b) { return rep[a] < rep[b]; };

  std::vector<std::uint32_t> natives;
  FiniteGroup q = FiniteGroup::build(gens, std::uint32_t{0}, mul, less,
                                     std::hash<std::uint32_t>{}, g.order(), &natives);
  DerivedBackend backend;
  backend.kind = DerivedBackend::Kind::Quotient;
  for (auto c : natives)
    backend.parent_labels.push_back(rep[c]);
  // coset_of maps parent elements to quotient elements
  auto to_quotient = std::make_shared<std::vector<ElementId>>(g.order());
  std::vector<ElementId> native_to_index(rep.size());
  for (std::size_t i = 0; i < natives.size(); ++i)
    native_to_index[natives[i]] = static_cast<ElementId>(i);
  for (ElementId x = 0; x < g.order(); ++x)
    (*to_quotient)[x] = native_to_index[(*coset_of)[x]];
  backend.coset_of_parent = std::move(to_quotient);
  q._backend = std::make_shared<GroupBackend const>(std::move(backend));
  return q;
}

FiniteGroup subgroup_as_group(FiniteGroup const &g, SubgroupHandle const &h)
{
  std::vector<ElementId> gens(h.generators().begin(), h.generators().end());
  auto mul = [&](ElementId a, ElementId b) { return g.mul(a, b); };
  std::vector<ElementId> natives;
  FiniteGroup s = FiniteGroup::build(gens, ElementId{0}, mul, std::less<ElementId>{},
                                     std::hash<ElementId>{}, g.order(), &natives);
  DerivedBackend backend;
  backend.kind = DerivedBackend::Kind::Subgroup;
  backend.parent_labels = std::move(natives);
  s._backend = std::make_shared<GroupBackend const>(std::move(backend));
  return s;
}

std::span<ElementId const> parent_labels(FiniteGroup const &derived)
{
  auto const *b = std::get_if<DerivedBackend>(&derived.backend());
  if (!b)
    throw BadParameters("parent_labels on a group that is not derived");
  return b->parent_labels;
}

SubgroupHandle derived_subgroup(FiniteGroup const &g, SubgroupHandle const &h)
{
  std::vector<ElementId> comms;
  for (auto a : h.generators()) {
    for (auto b : h.generators()) {
      ElementId c = g.commutator(a, b);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return close_under_conjugation(g, std::move(comms), h.generators());
}

bool is_solvable(FiniteGroup const &g)
{
  SubgroupHandle d = whole_group(g);
  while (!d.is_trivial()) {
    SubgroupHandle next = derived_subgroup(g, d);
    if (next.order() == d.order())
      return false;
    d = std::move(next);
  }
  return true;
}

bool is_cyclic(FiniteGroup const &g, SubgroupHandle const &h)
{
  return std::any_of(h.members().begin(), h.members().end(),
                     [&](ElementId x) { return g.element_order(x) == h.order(); });
}

bool is_abelian(FiniteGroup const &g, SubgroupHandle const &h)
{
  for (auto a : h.generators()) {
    for (auto b : h.generators()) {
      if (g.mul(a, b) != g.mul(b, a))
        return false;
    }
  }
  return true;
}

} // namespace cpd
