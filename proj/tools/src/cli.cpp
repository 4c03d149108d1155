#include "cpd_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cpd/catalog.hpp"
#include "cpd/classifier.hpp"
#include "cpd/corpus.hpp"
#include "cpd/group_spec.hpp"
#include "cpd/modrep.hpp"
#include "cpd/report.hpp"

namespace cpd::cli
{

using nlohmann::json;

namespace
{

struct CheckArgs
{
  std::string file;
  std::uint32_t p = 2;
  std::uint32_t d = 1;
  std::string method = "brute";
  bool json = false;
  std::optional<std::size_t> cap;
};

struct ModuleArgs
{
  std::string file;
  std::string command;
};

struct CatalogArgs
{
  std::string name;
  std::string emit;
};

struct SuiteArgs
{
  std::string corpus;
  std::uint64_t seed = 0;
  bool json = false;
  unsigned threads = 1;
  std::optional<std::size_t> cap;
  bool no_properties = false;
};

Caps caps_with(std::optional<std::size_t> cap)
{
  Caps caps;
  if (cap)
    caps.lattice = *cap;
  return caps;
}

double ms_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
    .count();
}

std::string describe_verdict(FiniteGroup const &g, CpdVerdict const &v)
{
  if (!v.nontrivial)
    return "member (vacuous: p^d exceeds |G|_p)";
  if (v.is_cpd)
    return "member (" + std::to_string(v.complement_table.size()) +
           " subgroup classes of order p^d, all complemented)";
  std::string gens;
  for (auto x : v.uncomplemented_witness->generators())
    gens += (gens.empty() ? "" : ", ") + g.describe(x);
  return "not a member (uncomplemented subgroup of order " +
         std::to_string(v.uncomplemented_witness->order()) + " generated by " + gens + ")";
}

std::string describe_report(ClassificationReport const &r)
{
  std::string s = r.member ? "member" : "not a member";
  s += " [" + to_string(r.method) + ", case " + to_string(r.kind);
  if (r.e)
    s += ", e=" + std::to_string(r.e) + ", t=" + std::to_string(r.t);
  s += "]";
  if (!r.reason.empty())
    s += ": " + r.reason;
  return s;
}

int check(CheckArgs const &a, std::ostream &out)
{
  Caps caps = caps_with(a.cap);
  FiniteGroup g = build_group(load_group_file(a.file), caps);
  bool brute = a.method == "brute" || a.method == "both";
  bool theorem = a.method == "theorem" || a.method == "both";

  json result;
  json timings;
  std::optional<CpdVerdict> verdict;
  std::optional<ClassificationReport> report;
  if (brute) {
    auto start = std::chrono::steady_clock::now();
    verdict = brute_force_cpd(g, a.p, a.d, caps);
    timings["brute"] = ms_since(start);
  }
  std::string inapplicable;
  if (theorem) {
    auto start = std::chrono::steady_clock::now();
    try {
      report = classify_by_criteria(g, a.p, a.d, caps);
    } catch (HypothesisViolated const &e) {
      // With "both" the brute-force verdict is still worth printing.
      if (!brute)
        throw;
      inapplicable = e.what();
    }
    timings["theorem"] = ms_since(start);
  }

  if (brute && theorem) {
    result = to_json(g, *verdict);
    result["method"] = "both";
    result["brute"] = to_json(g, *verdict);
    if (report) {
      result["theorem"] = to_json(g, *report);
      result["agreement"] = verdict->is_cpd == report->member;
    } else {
      result["theorem"] = {{"error", "hypothesis_violated"}, {"reason", inapplicable}};
      result["agreement"] = nullptr;
    }
  } else if (brute) {
    result = to_json(g, *verdict);
  } else {
    result = to_json(g, *report);
  }
  result["order"] = g.order();
  result["timings_ms"] = timings;

  if (a.json) {
    out << result.dump(2) << "\n";
  } else {
    out << "group order: " << g.order() << "\n";
    if (verdict)
      out << "brute force: " << describe_verdict(g, *verdict) << "\n";
    if (report)
      out << "criteria: " << describe_report(*report) << "\n";
    else if (theorem)
      out << "criteria: not applicable: " << inapplicable << "\n";
    if (report && brute)
      out << "agreement: " << (result["agreement"].get<bool>() ? "true" : "false") << "\n";
  }
  return inapplicable.empty() ? Computed : HypothesisExit;
}

json basis_json(SubmoduleBasis const &w)
{
  json rows = json::array();
  for (std::size_t r = 0; r < w.dim(); ++r)
    rows.push_back(w.basis.row_vector(r));
  return rows;
}

int module(ModuleArgs const &a, std::ostream &out)
{
  HModule m = module_of_spec(load_group_file(a.file));
  json j = {{"p", m.p()}, {"n", m.n()}, {"h_order", m.h_order()}};
  if (a.command == "decompose" || a.command == "homogeneous") {
    Homogeneity hom = is_homogeneous(m);
    j["homogeneous"] = hom.homogeneous;
    j["e"] = hom.e;
    j["t"] = hom.t;
    if (a.command == "decompose") {
      json comps = json::array();
      for (auto const &c : hom.components)
        comps.push_back({{"dim", c.dim()}, {"basis", basis_json(c)}});
      j["components"] = comps;
    }
  } else if (a.command == "end-dim") {
    j["end_dim"] = endomorphism_algebra_dim(m);
    j["irreducible"] = is_irreducible(m);
  } else {
    j["count_min"] = count_irreducible_submodules(m);
  }
  out << j.dump(2) << "\n";
  return Computed;
}

int catalog_cmd(CatalogArgs const &a, std::ostream &out)
{
  if (a.name.empty()) {
    for (auto const &n : catalog_names())
      out << n << "\n";
    out << "singer(p,e,m[,t])\ndiag(p,a1,...,an)\n";
    return Computed;
  }
  CatalogEntry e = catalog(a.name);
  FiniteGroup g = build_group(e.spec);
  out << e.name << ": " << e.description << "\n";
  out << "order: " << g.order() << "\n";
  for (auto const &m : e.memberships)
    out << "member at p=" << m.p << ", d=" << m.d << "\n";
  if (!a.emit.empty()) {
    std::ofstream file(a.emit);
    if (!file)
      throw BadInput("cannot write " + a.emit);
    file << to_json(e.spec).dump(2) << "\n";
  }
  return Computed;
}

int suite(SuiteArgs const &a, std::ostream &out)
{
  SuiteOptions options;
  options.seed = a.seed;
  options.threads = a.threads;
  options.caps = caps_with(a.cap);
  options.properties = !a.no_properties;
  SuiteReport report = run_suite(a.corpus, corpus_items(a.corpus), options);

  if (a.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    for (auto const &i : report.items) {
      out << (i.skipped ? "skip " : i.agree ? "ok   " : "FAIL ") << i.label;
      if (!i.skipped)
        out << " brute=" << (i.brute ? "member" : "non-member");
      if (i.criterion_applicable)
        out << " criterion=" << (i.criterion ? "member" : "non-member") << " ("
            << i.criterion_case << ")";
      if (!i.note.empty())
        out << " [" << i.note << "]";
      out << "\n";
    }
    out << report.items.size() << " items, " << report.disagreements() << " disagreements; "
        << "properties: " << report.properties.checks << " checks over "
        << report.properties.members << " members, " << report.properties.violations.size()
        << " violations\n";
    for (auto const &v : report.properties.violations)
      out << "violation " << v.label << " " << v.check << ": " << v.detail << "\n";
  }
  return report.passed() ? Computed : DisagreementExit;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Decide membership in the class of Cp^d-groups"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto *check_cmd = app.add_subcommand("check", "Decide whether a group is a Cp^d-group");
  check_cmd->add_option("file", check_args.file, "Group file (JSON)")->required();
  check_cmd->add_option("--p", check_args.p, "Prime p")->required();
  check_cmd->add_option("--d", check_args.d, "Exponent d")->required();
  check_cmd->add_option("--method", check_args.method, "brute, theorem or both")
    ->check(CLI::IsMember({"brute", "theorem", "both"}));
  check_cmd->add_flag("--json", check_args.json, "Print a JSON report");
  check_cmd->add_option("--cap", check_args.cap, "Largest group order for lattice enumeration");

  ModuleArgs module_args;
  auto *module_cmd = app.add_subcommand("module", "Module computations for H acting on F_p^n");
  module_cmd->add_option("file", module_args.file, "Semidirect group file (JSON)")->required();
  module_cmd->add_option("command", module_args.command, "decompose, end-dim, homogeneous or count-min")
    ->required()
    ->check(CLI::IsMember({"decompose", "end-dim", "homogeneous", "count-min"}));

  CatalogArgs catalog_args;
  auto *catalog_sub = app.add_subcommand("catalog", "Show a catalog group, or list the names");
  catalog_sub->add_option("name", catalog_args.name, "Catalog name");
  catalog_sub->add_option("--emit", catalog_args.emit, "Write the expanded group file here");

  SuiteArgs suite_args;
  auto *suite_cmd = app.add_subcommand("suite", "Cross-check brute force against the criteria");
  suite_cmd->add_option("--corpus", suite_args.corpus, "small, semidirect or catalog")
    ->required()
    ->check(CLI::IsMember({"small", "semidirect", "catalog"}));
  suite_cmd->add_option("--seed", suite_args.seed, "Seed for the randomized Sylow cross-check");
  suite_cmd->add_flag("--json", suite_args.json, "Print a JSON report");
  suite_cmd->add_option("--threads", suite_args.threads, "Worker threads")
    ->check(CLI::Range(1u, 256u));
  suite_cmd->add_option("--cap", suite_args.cap, "Largest group order for lattice enumeration");
  suite_cmd->add_flag("--no-properties", suite_args.no_properties, "Skip the property checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return Computed;
  } catch (CLI::ParseError const &e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return Computed;
    }
    err << e.what() << "\n";
    return BadInputExit;
  }

  try {
    if (*check_cmd)
      return check(check_args, out);
    if (*module_cmd)
      return module(module_args, out);
    if (*catalog_sub)
      return catalog_cmd(catalog_args, out);
    return suite(suite_args, out);
  } catch (HypothesisViolated const &e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return HypothesisExit;
  } catch (NotFaithful const &e) {
    err << "hypothesis violated: " << e.what() << " (kernel element " << e.kernel_witness()
        << ")\n";
    return HypothesisExit;
  } catch (CapExceeded const &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return CapExit;
  } catch (Error const &e) {
    err << "bad input: " << e.what() << "\n";
    return BadInputExit;
  }
}

} // namespace cpd::cli
