#include "cpd/properties.hpp"

#include "cpd/classifier.hpp"
#include "cpd/lattice.hpp"
#include "cpd/p_structure.hpp"

namespace cpd
{

namespace
{

class Checker
{
public:
  Checker(PropertyItem const &item, Caps const &caps, PropertyReport &report)
  : _item(item), _g(*item.group), _caps(caps), _report(report)
  {}

  void run()
  {
    bool member = brute_force_cpd(_g, _item.p, _item.d, _caps).is_cpd;
    if (member) {
      ++_report.members;
      subgroups_inherit();
      quotient_descends();
      multiples_hold();
    }
    frattini_trivial();
  }

private:
  void expect(bool ok, std::string const &check, std::string const &detail)
  {
    ++_report.checks;
    if (!ok)
      _report.violations.push_back({_item.label, check, detail});
  }

  void subgroups_inherit()
  {
    for (auto const &k : subgroups_up_to_conjugacy(_g, OrderFilter::all(), _caps)) {
      FiniteGroup sub = subgroup_as_group(_g, k);
      expect(brute_force_cpd(sub, _item.p, _item.d, _caps).is_cpd, "subgroups_inherit",
             "subgroup of order " + std::to_string(k.order()) + " is not a Cp^d-group");
    }
  }

  void quotient_descends()
  {
    PrimePower pd = PrimePower::of(_item.p, _item.d);
    for (auto const &n : normal_subgroups(_g, _caps)) {
      PrimePower np = p_part(n.order(), _item.p);
      if (np.value > pd.value)
        continue;
      FiniteGroup q = quotient_group(_g, n);
      expect(brute_force_cpd(q, _item.p, _item.d - np.d, _caps).is_cpd, "quotient_descends",
             "quotient by a normal subgroup of order " + std::to_string(n.order()) +
               " is not a Cp^" + std::to_string(_item.d - np.d) + "-group");
    }
  }

  void multiples_hold()
  {
    std::uint64_t sylow = p_part(_g.order(), _item.p).value;
    for (std::uint32_t m = 0;; ++m) {
      std::uint32_t md = m * _item.d;
      CpdVerdict v = brute_force_cpd(_g, _item.p, md, _caps);
      expect(v.is_cpd, "multiples_hold", "not a Cp^" + std::to_string(md) + "-group");
      if (!v.nontrivial || _item.d == 0 || PrimePower::of(_item.p, md).value > sylow)
        break;
    }
  }

  void frattini_trivial()
  {
    if (!o_pprime(_g, _item.p).is_trivial())
      return;
    if (!is_elementary_abelian(_g, sylow_p(_g, _item.p), _item.p))
      return;
    SubgroupHandle phi = frattini(_g, _caps);
    expect(phi.is_trivial(), "frattini_trivial",
           "Frattini subgroup has order " + std::to_string(phi.order()));
  }

  PropertyItem const &_item;
  FiniteGroup const &_g;
  Caps const &_caps;
  PropertyReport &_report;
};

} // namespace

PropertyReport property_suite(std::vector<PropertyItem> const &corpus, Caps const &caps)
{
  PropertyReport report;
  for (auto const &item : corpus) {
    ++report.items;
    try {
      Checker(item, caps, report).run();
    } catch (CapExceeded const &) {
      report.skipped.push_back(item.label);
    }
  }
  return report;
}

nlohmann::json to_json(PropertyReport const &r)
{
  nlohmann::json violations = nlohmann::json::array();
  for (auto const &v : r.violations)
    violations.push_back({{"item", v.label}, {"check", v.check}, {"detail", v.detail}});
  return {{"items", r.items},           {"members", r.members}, {"checks", r.checks},
          {"violations", violations}, {"skipped", r.skipped}, {"passed", r.passed()}};
}

} // namespace cpd
