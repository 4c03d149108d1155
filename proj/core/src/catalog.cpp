#include "cpd/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace cpd
{

namespace
{

Permutation from_cycles(std::size_t degree, std::vector<std::vector<std::uint16_t>> const &cycles)
{
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i)
      perm[c[i]] = c[(i + 1) % c.size()];
  }
  return perm;
}

/// Parses "family(a,b,...)" into its integer arguments.
std::optional<std::vector<std::uint64_t>> arguments(std::string const &name,
                                                    std::string const &family)
{
  if (name.size() < family.size() + 2 || name.compare(0, family.size() + 1, family + "(") != 0 ||
      name.back() != ')')
    return std::nullopt;
  std::vector<std::uint64_t> out;
  char const *it = name.data() + family.size() + 1;
  char const *end = name.data() + name.size() - 1;
  while (it < end) {
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(it, end, v);
    if (ec != std::errc{})
      throw UnknownName("bad argument list in \"" + name + "\"");
    out.push_back(v);
    it = next;
    if (it < end) {
      if (*it != ',')
        throw UnknownName("bad argument list in \"" + name + "\"");
      ++it;
    }
  }
  return out;
}

CatalogEntry entry(std::string name, std::string description, GroupSpec spec,
                   std::vector<Membership> memberships)
{
  return {std::move(name), std::move(description), std::move(spec), std::move(memberships)};
}

std::uint32_t narrow(std::uint64_t v)
{
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw UnknownName("catalog argument too large");
  return static_cast<std::uint32_t>(v);
}

} // namespace

PermutationSpec psl2_on_projective_line(std::uint32_t q)
{
  if (!fp::is_prime(q) || q == 2)
    throw BadParameters("PSL(2,q) needs an odd prime q");
  Permutation shift(q + 1), invert(q + 1);
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = static_cast<std::uint16_t>((x + 1) % q);
    invert[x] = static_cast<std::uint16_t>(x == 0 ? q : fp::sub(0, fp::inv(x, q), q));
  }
  shift[q] = static_cast<std::uint16_t>(q);
  invert[q] = 0;
  return {q + 1, {shift, invert}};
}

PermutationSpec permutation_group_from_matrices(std::uint32_t p, std::size_t n,
                                                std::vector<FpMatrix> const &gens)
{
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i)
    count *= p;
  PermutationSpec spec;
  spec.degree = count - 1;
  for (auto const &g : gens) {
    Permutation perm(spec.degree);
    for (std::uint64_t code = 1; code < count; ++code)
      perm[code - 1] =
        static_cast<std::uint16_t>(fp::encode(g.apply(fp::decode(code, n, p)), p) - 1);
    spec.generators.push_back(std::move(perm));
  }
  return spec;
}

HModule quaternion_module(Caps const &caps)
{
  std::int64_t i[] = {0, 1, 2, 0};
  std::int64_t j[] = {1, 1, 1, 2};
  return HModule::from_generators(
    3, 2, {FpMatrix::from_entries(3, 2, 2, i), FpMatrix::from_entries(3, 2, 2, j)}, caps);
}

std::vector<std::string> catalog_names()
{
  return {"A4", "S3", "D8", "A7", "PSL(2,7)", "PSL(3,2)", "PSL(2,11)", "M11", "Q8_GL23"};
}

CatalogEntry catalog(std::string const &raw)
{
  std::string name;
  std::copy_if(raw.begin(), raw.end(), std::back_inserter(name),
               [](unsigned char c) { return !std::isspace(c); });

  if (name == "A4")
    return entry(name, "alternating group on 4 points",
                 {PermutationSpec{4, {from_cycles(4, {{0, 1, 2}}), from_cycles(4, {{0, 1}, {2, 3}})}}},
                 {});
  if (name == "S3")
    return entry(name, "symmetric group on 3 points",
                 {PermutationSpec{3, {from_cycles(3, {{0, 1, 2}}), from_cycles(3, {{0, 1}})}}}, {});
  if (name == "D8")
    return entry(name, "dihedral group of order 8 on the vertices of a square",
                 {PermutationSpec{4, {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{1, 3}})}}},
                 {});
  if (name == "A7")
    return entry(name, "alternating group on 7 points",
                 {PermutationSpec{7,
                                  {from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                                   from_cycles(7, {{0, 1, 2}})}}},
                 {{7, 1}});
  if (name == "PSL(2,7)")
    return entry(name, "PSL(2,7) on the 8 points of the projective line",
                 {psl2_on_projective_line(7)}, {{2, 3}, {7, 1}});
  if (name == "PSL(2,11)")
    return entry(name, "PSL(2,11) on the 12 points of the projective line",
                 {psl2_on_projective_line(11)}, {{11, 1}});
  if (name == "PSL(3,2)") {
    std::int64_t transvection[] = {1, 1, 0, 0, 1, 0, 0, 0, 1};
    std::int64_t cycle[] = {0, 1, 0, 0, 0, 1, 1, 0, 0};
    return entry(name, "GL(3,2) = PSL(3,2) on the 7 nonzero vectors of F_2^3",
                 {permutation_group_from_matrices(
                   2, 3,
                   {FpMatrix::from_entries(2, 3, 3, transvection),
                    FpMatrix::from_entries(2, 3, 3, cycle)})},
                 {{2, 3}, {7, 1}});
  }
  if (name == "M11")
    return entry(name, "Mathieu group M11 on 11 points",
                 {PermutationSpec{11,
                                  {from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                                   from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})}}},
                 {{11, 1}});
  if (name == "Q8_GL23")
    return entry(name, "quaternion group Q8 in GL(2,3) acting on F_3^2",
                 {semidirect_spec(quaternion_module())}, {});

  try {
    if (auto args = arguments(name, "singer")) {
      if (args->size() != 3 && args->size() != 4)
        throw UnknownName("singer takes (p,e,m) or (p,e,m,t)");
      std::size_t t = args->size() == 4 ? (*args)[3] : 1;
      HModule m = homogeneous_sum(
        singer_module(narrow((*args)[0]), (*args)[1], (*args)[2]), t);
      return entry(name, "cyclic group acting as a Singer cycle, " + std::to_string(t) +
                           " homogeneous copies",
                   {semidirect_spec(m)}, {});
    }
    if (auto args = arguments(name, "diag")) {
      if (args->size() < 2)
        throw UnknownName("diag takes (p,a1,...,an)");
      std::uint32_t p = narrow(args->front());
      if (!fp::is_prime(p))
        throw UnknownName("diag needs a prime field size");
      std::vector<std::uint32_t> diagonal;
      for (std::size_t i = 1; i < args->size(); ++i)
        diagonal.push_back(static_cast<std::uint32_t>((*args)[i] % p));
      if (std::find(diagonal.begin(), diagonal.end(), 0u) != diagonal.end())
        throw UnknownName("diag entries must be nonzero mod p");
      return entry(name, "cyclic group acting diagonally",
                   {semidirect_spec(diagonal_module(p, {diagonal}))}, {});
    }
  } catch (BadParameters const &e) {
    throw UnknownName("bad parameters for \"" + name + "\": " + e.what());
  } catch (HypothesisViolated const &e) {
    throw UnknownName("bad parameters for \"" + name + "\": " + e.what());
  }
  throw UnknownName("unknown catalog group \"" + raw + "\"");
}

} // namespace cpd
