#include "cpd/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cpd
{

bool OrderFilter::keeps(std::uint64_t order) const
{
  return targets.empty() || std::find(targets.begin(), targets.end(), order) != targets.end();
}

bool OrderFilter::explores(std::uint64_t order) const
{
  return targets.empty() ||
         std::any_of(targets.begin(), targets.end(),
                     [&](std::uint64_t t) { return t % order == 0; });
}

namespace
{

/// Smallest prime dividing n when n is a prime power, else 0.
std::uint32_t prime_of_prime_power(std::uint32_t n)
{
  if (n < 2)
    return 0;
  std::uint32_t p = 2;
  while (n % p != 0)
    ++p;
  while (n % p == 0)
    n /= p;
  return n == 1 ? p : 0;
}

class LatticeBuilder
{
public:
  explicit LatticeBuilder(FiniteGroup const &g) : _g(g) {}

  bool add(SubgroupHandle const &h)
  {
    std::vector<ElementId> key(h.members().begin(), h.members().end());
    if (_known.count(key))
      return false;
    std::vector<SubgroupHandle> orbit = conjugacy_class(_g, h);
    for (auto const &c : orbit)
      _known.emplace(std::vector<ElementId>(c.members().begin(), c.members().end()),
                     _reps.size());
    _reps.push_back(orbit.front());
    return true;
  }

  std::vector<SubgroupHandle> const &reps() const { return _reps; }

private:
  FiniteGroup const &_g;
  std::unordered_map<std::vector<ElementId>, std::size_t, MemberSetHash> _known;
  std::vector<SubgroupHandle> _reps;
};

void seed_two_generator_subgroups(FiniteGroup const &g, OrderFilter const &filter,
                                  LatticeBuilder &builder)
{
  std::uint64_t max_order = filter.targets.empty()
                              ? g.order()
                              : *std::max_element(filter.targets.begin(), filter.targets.end());
  for (auto const &cls : conjugacy_classes(g)) {
    ElementId x = cls.front();
    if (x == 0)
      continue;
    for (ElementId y = 0; y < g.order(); ++y) {
      ElementId pair[2] = {x, y};
      auto k = bounded_closure(g, pair, max_order);
      if (k && filter.explores(k->order()))
        builder.add(*k);
    }
  }
}

void extend_cyclically(FiniteGroup const &g, OrderFilter const &filter,
                       LatticeBuilder &builder)
{
  for (std::size_t i = 0; i < builder.reps().size(); ++i) {
    SubgroupHandle h = builder.reps()[i];
    std::vector<SubgroupHandle> produced;
    for (ElementId x = 1; x < g.order(); ++x) {
      if (h.contains(x))
        continue;
      std::uint32_t r = prime_of_prime_power(g.element_order(x));
      if (!r || !h.contains(g.pow(x, r)))
        continue;
      if (!filter.explores(std::uint64_t{h.order()} * r))
        continue;
      if (std::any_of(produced.begin(), produced.end(),
                      [&](SubgroupHandle const &k) { return k.contains(x); }))
        continue;
      if (!normalizes(g, h, x))
        continue;

      std::vector<ElementId> members(h.members().begin(), h.members().end());
      ElementId power = x;
      for (std::uint32_t k = 1; k < r; ++k, power = g.mul(power, x)) {
        for (auto m : h.members())
          members.push_back(g.mul(m, power));
      }
      std::vector<ElementId> gens(h.generators().begin(), h.generators().end());
      gens.push_back(x);
      produced.push_back(SubgroupHandle::from_members(g, std::move(members), std::move(gens)));
      builder.add(produced.back());
    }
  }
}

void check_lattice_cap(FiniteGroup const &g, Caps const &caps)
{
  if (g.order() > caps.lattice)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds lattice cap " + std::to_string(caps.lattice));
}

} // namespace

std::vector<SubgroupHandle> conjugacy_class(FiniteGroup const &g, SubgroupHandle const &h)
{
  std::unordered_set<std::vector<ElementId>, MemberSetHash> seen;
  std::vector<SubgroupHandle> orbit{h};
  seen.emplace(h.members().begin(), h.members().end());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto s : g.generators()) {
      SubgroupHandle c = conjugate(g, orbit[i], s);
      if (seen.emplace(c.members().begin(), c.members().end()).second)
        orbit.push_back(std::move(c));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<SubgroupHandle> subgroups_up_to_conjugacy(FiniteGroup const &g,
                                                      OrderFilter const &filter,
                                                      Caps const &caps)
{
  check_lattice_cap(g, caps);

  LatticeBuilder builder(g);
  builder.add(trivial_subgroup(g));
  if (!is_solvable(g))
    seed_two_generator_subgroups(g, filter, builder);
  extend_cyclically(g, filter, builder);

  std::vector<SubgroupHandle> out;
  for (auto const &rep : builder.reps()) {
    if (filter.keeps(rep.order()))
      out.push_back(rep);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComplementCandidates complement_candidates(FiniteGroup const &g, std::uint64_t order,
                                           Caps const &caps)
{
  ComplementCandidates out;
  out.order = order;
  if (g.order() % order != 0)
    return out;
  for (auto const &rep : subgroups_up_to_conjugacy(g, OrderFilter::exactly({order}), caps))
    out.classes.push_back(conjugacy_class(g, rep));
  return out;
}

std::optional<SubgroupHandle> find_complement_fast(FiniteGroup const &g,
                                                   SubgroupHandle const &h,
                                                   std::size_t budget)
{
  std::uint64_t target = g.order() / h.order();
  if (target == 1)
    return trivial_subgroup(g);
  if (h.is_trivial())
    return whole_group(g);

  std::vector<ElementId> candidates;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (target % g.element_order(x) != 0)
      continue;
    bool meets = false;
    for (ElementId y = x; y != 0; y = g.mul(y, x)) {
      if (h.contains(y)) {
        meets = true;
        break;
      }
    }
    if (!meets)
      candidates.push_back(x);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](ElementId a, ElementId b) {
    return g.element_order(a) > g.element_order(b);
  });

  std::unordered_set<std::vector<ElementId>, MemberSetHash> visited;
  std::size_t spent = 0;

  auto search = [&](auto &&self, SubgroupHandle const &k) -> std::optional<SubgroupHandle> {
    if (k.order() == target)
      return k;
    for (auto x : candidates) {
      if (k.contains(x))
        continue;
      if (++spent > budget)
        return std::nullopt;
      std::vector<ElementId> gens(k.generators().begin(), k.generators().end());
      gens.push_back(x);
      auto next = bounded_closure(g, gens, target);
      if (!next || target % next->order() != 0 || !intersects_trivially(*next, h))
        continue;
      if (!visited.emplace(next->members().begin(), next->members().end()).second)
        continue;
      if (auto found = self(self, *next))
        return found;
      if (spent > budget)
        return std::nullopt;
    }
    return std::nullopt;
  };
  return search(search, trivial_subgroup(g));
}

ComplementResult is_complemented(FiniteGroup const &, SubgroupHandle const &h,
                                 ComplementCandidates const &candidates)
{
  for (auto const &cls : candidates.classes) {
    for (auto const &k : cls) {
      if (intersects_trivially(h, k))
        return {true, k};
    }
  }
  return {false, std::nullopt};
}

ComplementResult is_complemented(FiniteGroup const &g, SubgroupHandle const &h,
                                 Caps const &caps)
{
  if (auto k = find_complement_fast(g, h))
    return {true, std::move(*k)};
  return is_complemented(g, h, complement_candidates(g, g.order() / h.order(), caps));
}

namespace
{

bool is_maximal(FiniteGroup const &g, SubgroupHandle const &k)
{
  if (k.order() == g.order())
    return false;
  std::uint64_t index = g.order() / k.order();
  std::uint32_t r = prime_of_prime_power(static_cast<std::uint32_t>(index));
  if (r == index)
    return true;

  std::vector<bool> covered(g.order(), false);
  for (auto m : k.members())
    covered[m] = true;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered[x])
      continue;
    std::vector<ElementId> gens(k.generators().begin(), k.generators().end());
    gens.push_back(x);
    if (closure(g, gens).order() != g.order())
      return false;
    // <K, x> = <K, a x b> for a, b in K
    for (auto a : k.members()) {
      ElementId ax = g.mul(a, x);
      for (auto b : k.members())
        covered[g.mul(ax, b)] = true;
    }
  }
  return true;
}

} // namespace

std::vector<SubgroupHandle> maximal_subgroups(FiniteGroup const &g, Caps const &caps)
{
  std::vector<SubgroupHandle> out;
  for (auto const &k : subgroups_up_to_conjugacy(g, OrderFilter::all(), caps)) {
    if (is_maximal(g, k))
      out.push_back(k);
  }
  return out;
}

SubgroupHandle core(FiniteGroup const &g, SubgroupHandle const &h)
{
  std::vector<std::uint64_t> mask = h.mask();
  for (auto const &c : conjugacy_class(g, h)) {
    for (std::size_t w = 0; w < mask.size(); ++w)
      mask[w] &= c.mask()[w];
  }
  std::vector<ElementId> members;
  for (ElementId x = 0; x < g.order(); ++x) {
    if ((mask[x >> 6] >> (x & 63u)) & 1u)
      members.push_back(x);
  }
  return SubgroupHandle::from_members(g, std::move(members));
}

SubgroupHandle frattini(FiniteGroup const &g, Caps const &caps)
{
  SubgroupHandle phi = whole_group(g);
  for (auto const &m : maximal_subgroups(g, caps))
    phi = intersection(g, phi, core(g, m));
  return phi;
}

namespace
{

std::vector<SubgroupHandle> element_normal_closures(FiniteGroup const &g)
{
  std::vector<SubgroupHandle> out;
  for (auto const &cls : conjugacy_classes(g)) {
    if (cls.front() == 0)
      continue;
    SubgroupHandle n = normal_closure(g, closure(g, {cls.front()}));
    if (std::find(out.begin(), out.end(), n) == out.end())
      out.push_back(std::move(n));
  }
  return out;
}

} // namespace

SubgroupHandle o_pprime(FiniteGroup const &g, std::uint32_t p)
{
  std::vector<ElementId> gens;
  for (auto const &cls : conjugacy_classes(g)) {
    ElementId x = cls.front();
    if (x == 0 || g.element_order(x) % p == 0)
      continue;
    SubgroupHandle n = normal_closure(g, closure(g, {x}));
    if (n.order() % p != 0)
      gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  }
  return closure(g, gens);
}

std::vector<SubgroupHandle> minimal_normal_subgroups(FiniteGroup const &g, Caps const &caps)
{
  check_lattice_cap(g, caps);
  std::vector<SubgroupHandle> candidates = element_normal_closures(g);
  std::vector<SubgroupHandle> out;
  for (auto const &n : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](auto const &m) {
      return m.order() < n.order() && is_subgroup_of(m, n);
    });
    if (minimal)
      out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupHandle> normal_subgroups(FiniteGroup const &g, Caps const &caps)
{
  check_lattice_cap(g, caps);
  std::vector<SubgroupHandle> closures = element_normal_closures(g);
  std::vector<SubgroupHandle> out{trivial_subgroup(g)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto const &c : closures) {
      if (is_subgroup_of(c, out[i]))
        continue;
      SubgroupHandle j = join(g, out[i], c);
      if (std::find(out.begin(), out.end(), j) == out.end())
        out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_supersolvable(FiniteGroup const &g, Caps const &caps)
{
  for (auto const &m : maximal_subgroups(g, caps)) {
    std::uint64_t index = g.order() / m.order();
    if (!fp::is_prime(index))
      return false;
  }
  return true;
}

} // namespace cpd
