#include "cpd/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cpd/lattice.hpp"

namespace cpd
{

std::string to_string(Method m)
{
  switch (m) {
  case Method::BruteForce: return "brute";
  case Method::SemidirectCriterion: return "semidirect_criterion";
  case Method::LargeSylowCriterion: return "large_sylow_criterion";
  case Method::FrattiniQuotient: return "frattini_quotient";
  }
  return "unknown";
}

std::string to_string(CaseKind k)
{
  switch (k) {
  case CaseKind::Supersolvable: return "supersolvable";
  case CaseKind::PrimeOrderComplemented: return "ncp";
  case CaseKind::HomogeneousCyclic: return "homogeneous_cyclic";
  case CaseKind::NotMember: return "not_member";
  case CaseKind::Degenerate: return "degenerate";
  case CaseKind::BoundaryFull: return "boundary d=n";
  case CaseKind::Vacuous: return "vacuous";
  }
  return "unknown";
}

CpdVerdict brute_force_cpd(FiniteGroup const &g, std::uint32_t p, std::uint32_t d,
                           Caps const &caps)
{
  CpdVerdict out;
  out.pd = PrimePower::of(p, d);
  out.nontrivial = out.pd.value <= p_part(g.order(), p).value;
  if (!out.nontrivial)
    return out;

  std::optional<ComplementCandidates> candidates;
  for (auto const &h : subgroups_of_order_pd(g, out.pd, caps)) {
    std::optional<SubgroupHandle> witness = find_complement_fast(g, h);
    if (!witness) {
      if (!candidates)
        candidates = complement_candidates(g, g.order() / h.order(), caps);
      witness = is_complemented(g, h, *candidates).witness;
    }
    if (!witness) {
      out.is_cpd = false;
      out.uncomplemented_witness = h;
      return out;
    }
    out.complement_table.push_back({h, std::move(*witness)});
  }
  return out;
}

namespace
{

std::size_t log_p(std::uint64_t n, std::uint32_t p)
{
  std::size_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

ClassificationReport not_member(ClassificationReport r, std::string reason)
{
  r.kind = CaseKind::NotMember;
  r.member = false;
  r.reason = std::move(reason);
  return r;
}

/// Shared tail of the two criteria: homogeneous module of a cyclic group with
/// component dimension e > 1 dividing both d and n.
ClassificationReport homogeneous_cyclic_case(ClassificationReport r, Homogeneity const &hom,
                                             std::size_t d_eff, std::size_t n_eff)
{
  if (!r.acting_group_cyclic)
    return not_member(std::move(r), "acting group is not cyclic");
  if (!hom.homogeneous)
    return not_member(std::move(r), "module is not homogeneous");
  if (hom.e <= 1)
    return not_member(std::move(r), "irreducible components have dimension 1");
  if (d_eff % hom.e != 0 || n_eff % hom.e != 0)
    return not_member(std::move(r), "component dimension " + std::to_string(hom.e) +
                                      " does not divide gcd(" + std::to_string(d_eff) + ", " +
                                      std::to_string(n_eff) + ")");
  r.kind = CaseKind::HomogeneousCyclic;
  r.member = true;
  return r;
}

void record_components(ClassificationReport &r, Homogeneity const &hom)
{
  r.e = hom.e;
  r.t = hom.t;
  r.component_dims.clear();
  for (auto const &c : hom.components)
    r.component_dims.push_back(c.dim());
}

/// Normal Sylow p-subgroup plus a Hall p'-complement, or HypothesisViolated.
std::pair<SubgroupHandle, SubgroupHandle> split(FiniteGroup const &g, std::uint32_t p,
                                                Caps const &caps)
{
  SubgroupHandle sylow = sylow_p(g, p);
  if (!is_normal(g, sylow))
    throw HypothesisViolated("Sylow " + std::to_string(p) + "-subgroup is not normal");
  auto hall = hall_pprime_complement(g, p, caps);
  if (!hall)
    throw HypothesisViolated("no Hall " + std::to_string(p) + "'-subgroup");
  return {std::move(sylow), std::move(*hall)};
}

} // namespace

ClassificationReport classify_semidirect(HModule const &m, std::uint32_t d, Caps const &caps)
{
  if (d < 1 || d >= m.n())
    throw HypothesisViolated("semidirect criterion needs 1 <= d < n (d=" + std::to_string(d) +
                             ", n=" + std::to_string(m.n()) + ")");
  ClassificationReport r;
  r.method = Method::SemidirectCriterion;
  r.p = m.p();
  r.d = d;
  r.n = m.n();
  r.acting_group_cyclic = m.acting_group_is_cyclic();

  Homogeneity hom = is_homogeneous(m, caps);
  record_components(r, hom);
  if (std::all_of(r.component_dims.begin(), r.component_dims.end(),
                  [](std::size_t k) { return k == 1; })) {
    r.kind = CaseKind::Supersolvable;
    r.member = true;
    return r;
  }
  return homogeneous_cyclic_case(std::move(r), hom, d, m.n());
}

HModule conjugation_module(FiniteGroup const &g, SubgroupHandle const &p_sub,
                           SubgroupHandle const &h, std::uint32_t p, Caps const &caps)
{
  // Greedy basis: coordinates of every member of P are recorded as the span
  // grows, so each new basis element is the first member not yet reached.
  std::map<ElementId, FpVector> coords;
  std::vector<ElementId> basis;
  coords[g.identity()] = {};
  for (auto x : p_sub.members()) {
    if (coords.count(x))
      continue;
    std::map<ElementId, FpVector> grown;
    ElementId power = g.identity();
    for (std::uint32_t c = 0; c < p; ++c, power = g.mul(power, x)) {
      for (auto const &[y, v] : coords) {
        FpVector w = v;
        w.push_back(c);
        grown[g.mul(y, power)] = std::move(w);
      }
    }
    coords = std::move(grown);
    basis.push_back(x);
  }
  std::size_t n = basis.size();
  if (coords.size() != p_sub.order())
    throw HypothesisViolated("subgroup is not elementary abelian");

  for (auto y : h.members()) {
    if (y == g.identity())
      continue;
    bool trivial = std::all_of(basis.begin(), basis.end(),
                               [&](ElementId b) { return g.conj(b, y) == b; });
    if (trivial)
      throw NotFaithful("conjugation action has a kernel", g.describe(y));
  }

  std::vector<FpMatrix> gens;
  for (auto y : h.generators()) {
    std::vector<FpVector> rows;
    for (auto b : basis)
      rows.push_back(coords.at(g.conj(b, y)));
    gens.push_back(FpMatrix::from_rows(p, n, rows));
  }
  return HModule::from_generators(p, n, std::move(gens), caps);
}

ClassificationReport classify_large_sylow(FiniteGroup const &g, std::uint32_t p, std::uint32_t d,
                                          Caps const &caps)
{
  PrimePower pd = PrimePower::of(p, d);
  if (d < 1)
    throw HypothesisViolated("large-Sylow criterion needs d >= 1");
  PrimePower sylow_part = p_part(g.order(), p);
  if (sylow_part.d < 2 * d)
    throw HypothesisViolated("|G|_p = " + std::to_string(sylow_part.value) + " is below p^(2d) = " +
                             std::to_string(pd.value * pd.value));
  if (!o_pprime(g, p).is_trivial())
    throw HypothesisViolated("O_p'(G) is nontrivial");

  ClassificationReport r;
  r.method = Method::LargeSylowCriterion;
  r.p = p;
  r.d = d;
  r.n = sylow_part.d;

  if (brute_force_cpd(g, p, 1, caps).is_cpd) {
    r.kind = CaseKind::PrimeOrderComplemented;
    r.member = true;
    return r;
  }

  SubgroupHandle sylow = sylow_p(g, p);
  r.sylow = sylow;
  if (!is_normal(g, sylow))
    return not_member(std::move(r), "Sylow subgroup is not normal");
  if (!is_elementary_abelian(g, sylow, p))
    return not_member(std::move(r), "Sylow subgroup is not elementary abelian");
  auto hall = hall_pprime_complement(g, p, caps);
  if (!hall)
    return not_member(std::move(r), "no Hall p'-subgroup");
  r.hall = *hall;
  r.acting_group_cyclic = is_cyclic(g, *hall);
  if (!r.acting_group_cyclic)
    return not_member(std::move(r), "Hall p'-subgroup is not cyclic");

  std::optional<HModule> m;
  try {
    m = conjugation_module(g, sylow, *hall, p, caps);
  } catch (NotFaithful const &e) {
    return not_member(std::move(r), std::string(e.what()) + ": " + e.kernel_witness());
  }
  Homogeneity hom = is_homogeneous(*m, caps);
  record_components(r, hom);
  return homogeneous_cyclic_case(std::move(r), hom, d, r.n);
}

ClassificationReport frattini_quotient_necessary(FiniteGroup const &g, std::uint32_t p,
                                                 std::uint32_t d, Caps const &caps)
{
  PrimePower::of(p, d);
  auto [sylow, hall] = split(g, p, caps);
  std::size_t n = log_p(sylow.order(), p);
  if (d < 1 || d >= n)
    throw HypothesisViolated("frattini quotient check needs 1 <= d < n");
  for (auto y : hall.members()) {
    if (y == g.identity())
      continue;
    if (std::all_of(sylow.generators().begin(), sylow.generators().end(),
                    [&](ElementId b) { return g.conj(b, y) == b; }))
      throw HypothesisViolated("Hall subgroup does not act faithfully on the Sylow subgroup");
  }

  ClassificationReport r;
  r.method = Method::FrattiniQuotient;
  r.necessary_only = true;
  r.p = p;
  r.d = d;
  r.n = n;
  r.sylow = sylow;
  r.hall = hall;
  r.acting_group_cyclic = is_cyclic(g, hall);

  SubgroupHandle phi = frattini(g, caps);
  r.s = p_part(phi.order(), p).d;
  if (d <= r.s) {
    r.kind = CaseKind::Degenerate;
    r.member = false;
    r.reason = "d <= s: the divisibility condition on d - s is not defined";
    return r;
  }

  FiniteGroup quotient = quotient_group(g, phi);
  if (is_supersolvable(quotient, caps)) {
    r.kind = CaseKind::Supersolvable;
    r.member = true;
    return r;
  }
  auto [qsylow, qhall] = split(quotient, p, caps);
  HModule m = conjugation_module(quotient, qsylow, qhall, p, caps);
  Homogeneity hom = is_homogeneous(m, caps);
  record_components(r, hom);
  return homogeneous_cyclic_case(std::move(r), hom, d - r.s, n - r.s);
}

ClassificationReport classify_by_criteria(FiniteGroup const &g, std::uint32_t p, std::uint32_t d,
                                          Caps const &caps)
{
  PrimePower pd = PrimePower::of(p, d);
  if (d < 1)
    throw HypothesisViolated("criteria need d >= 1");
  PrimePower sylow_part = p_part(g.order(), p);
  if (pd.value > sylow_part.value) {
    ClassificationReport r;
    r.kind = CaseKind::Vacuous;
    r.member = true;
    r.p = p;
    r.d = d;
    r.n = sylow_part.d;
    r.reason = "p^d exceeds |G|_p: no subgroups of order p^d";
    return r;
  }
  auto const *sd = std::get_if<SemidirectBackend>(&g.backend());
  if (sd && sd->p == p) {
    HModule m = module_of(g, caps);
    if (d == m.n()) {
      ClassificationReport r;
      r.kind = CaseKind::BoundaryFull;
      r.member = true;
      r.p = p;
      r.d = d;
      r.n = m.n();
      r.reason = "the normal Sylow subgroup is the only subgroup of order p^n and H complements it";
      return r;
    }
    return classify_semidirect(m, d, caps);
  }
  return classify_large_sylow(g, p, d, caps);
}

HModule module_of(FiniteGroup const &g, Caps const &caps)
{
  auto const *sd = std::get_if<SemidirectBackend>(&g.backend());
  if (!sd)
    throw BadInput("group was not built as a semidirect product");
  return HModule::from_generators(sd->p, sd->n, sd->h_generators, caps);
}

} // namespace cpd
