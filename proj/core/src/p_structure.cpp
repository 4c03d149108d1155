#include "cpd/p_structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_set>

#include "cpd/lattice.hpp"

namespace cpd
{

PrimePower PrimePower::of(std::uint32_t p, std::uint32_t d)
{
  if (!fp::is_prime(p))
    throw BadParameters(std::to_string(p) + " is not prime");
  std::uint64_t value = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max() / p)
      throw BadParameters("prime power overflows");
    value *= p;
  }
  return {p, d, value};
}

PrimePower p_part(std::uint64_t m, std::uint32_t p)
{
  PrimePower out = PrimePower::of(p, 0);
  while (m % p == 0) {
    m /= p;
    ++out.d;
    out.value *= p;
  }
  return out;
}

bool is_power_of(std::uint64_t n, std::uint32_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

namespace
{

/// <H, x> for x normalizing H with x^r in H.
SubgroupHandle extend(FiniteGroup const &g, SubgroupHandle const &h, ElementId x,
                      std::uint32_t r)
{
  std::vector<ElementId> members(h.members().begin(), h.members().end());
  ElementId power = x;
  for (std::uint32_t k = 1; k < r; ++k, power = g.mul(power, x)) {
    for (auto m : h.members())
      members.push_back(g.mul(m, power));
  }
  std::vector<ElementId> gens(h.generators().begin(), h.generators().end());
  gens.push_back(x);
  return SubgroupHandle::from_members(g, std::move(members), std::move(gens));
}

} // namespace

SubgroupHandle sylow_p(FiniteGroup const &g, std::uint32_t p,
                       std::optional<std::uint64_t> seed)
{
  std::uint64_t target = p_part(g.order(), p).value;
  std::vector<ElementId> p_elements;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (is_power_of(g.element_order(x), p))
      p_elements.push_back(x);
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(p_elements.begin(), p_elements.end(), rng);
  }

  SubgroupHandle sylow = trivial_subgroup(g);
  while (sylow.order() < target) {
    auto next = std::find_if(p_elements.begin(), p_elements.end(), [&](ElementId x) {
      return !sylow.contains(x) && sylow.contains(g.pow(x, p)) && normalizes(g, sylow, x);
    });
    // N(P) always holds such an element while P is not Sylow.
    sylow = extend(g, sylow, *next, p);
  }
  return sylow;
}

std::vector<SubgroupHandle> subgroups_of_order_pd(FiniteGroup const &g, PrimePower const &pp,
                                                  Caps const &caps)
{
  if (g.order() > caps.lattice)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds lattice cap " + std::to_string(caps.lattice));
  if (g.order() % pp.value != 0)
    return {};
  if (pp.d == 0)
    return {trivial_subgroup(g)};

  // In a p-group every subgroup of order p^(k+1) contains a normal subgroup of
  // order p^k, so extending each layer by normalizing elements is complete.
  SubgroupHandle sylow = sylow_p(g, pp.p);
  std::vector<SubgroupHandle> layer{trivial_subgroup(g)};
  for (std::uint32_t k = 0; k < pp.d; ++k) {
    std::unordered_set<std::vector<ElementId>, MemberSetHash> seen;
    std::vector<SubgroupHandle> next;
    for (auto const &h : layer) {
      for (auto x : sylow.members()) {
        if (h.contains(x) || !h.contains(g.pow(x, pp.p)) || !normalizes(g, h, x))
          continue;
        SubgroupHandle k1 = extend(g, h, x, pp.p);
        if (seen.emplace(k1.members().begin(), k1.members().end()).second)
          next.push_back(std::move(k1));
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());

  std::unordered_set<std::vector<ElementId>, MemberSetHash> fused;
  std::vector<SubgroupHandle> reps;
  for (auto const &h : layer) {
    if (fused.count(std::vector<ElementId>(h.members().begin(), h.members().end())))
      continue;
    auto orbit = conjugacy_class(g, h);
    for (auto const &c : orbit)
      fused.emplace(c.members().begin(), c.members().end());
    reps.push_back(orbit.front());
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::optional<SubgroupHandle> hall_pprime_complement(FiniteGroup const &g, std::uint32_t p,
                                                     Caps const &caps)
{
  std::uint64_t m = g.order() / p_part(g.order(), p).value;
  if (m == 1)
    return trivial_subgroup(g);
  auto reps = subgroups_up_to_conjugacy(g, OrderFilter::exactly({m}), caps);
  if (reps.empty())
    return std::nullopt;
  return reps.front();
}

bool is_elementary_abelian(FiniteGroup const &g, SubgroupHandle const &h, std::uint32_t p)
{
  return std::all_of(h.members().begin(), h.members().end(),
                     [&](ElementId x) { return x == 0 || g.element_order(x) == p; }) &&
         is_abelian(g, h);
}

} // namespace cpd
