#include "charvar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "charvar/census.hpp"
#include "charvar/errors.hpp"
#include "charvar/report.hpp"

namespace charvar::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arrangement load_arrangement(const std::string& path) {
  try {
    return parse_arrangement(read_file(path));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Pencil load_pencil(const std::string& path, const Arrangement& arr) {
  const std::string text = read_file(path);
  try {
    return parse_pencil(text, arr);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Options {
  std::string arrangement;
  std::string pencil;
  std::vector<std::string> pencils;
  std::int64_t order = 2;
  std::size_t max_subset = 12;
  std::size_t max_blocks = 5;
  std::uint64_t max_pairs = 5'000'000;
  std::uint64_t max_characters = 300'000;
  std::size_t max_generators = 16;
  std::uint64_t seed = 1;
  bool verify_thm4 = false;
  SheafScanOptions sheaf;
};

ScanOptions scan_options(const Options& o) {
  ScanOptions s;
  s.order = o.order;
  s.max_characters = o.max_characters;
  s.max_generators = o.max_generators;
  return s;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.arrangement);
  out << render(lattice_report(arr, build_lattice(arr)));
  return kOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load_arrangement(o.arrangement);
  std::vector<Pencil> pencils;
  for (const auto& p : o.pencils) pencils.push_back(load_pencil(p, arr));
  CensusOptions c;
  c.order = o.order;
  c.search.max_subset = o.max_subset;
  c.search.max_blocks = o.max_blocks;
  c.search.max_pairs = o.max_pairs;
  c.verify_thm4 = o.verify_thm4;
  c.seed = o.seed;
  c.scan = scan_options(o);
  const CensusResult result = run_census(arr, pencils, c);
  out << render(census_report(result));
  for (const auto& d : result.disagreements)
    err << "disagreement: " << d.what << (d.character ? " at " + d.character->to_string() : "") << "\n";
  return result.disagreements.empty() ? kOk : kDisagreement;
}

int cmd_pencil(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load_arrangement(o.arrangement);
  const PencilAnalysis pa(load_pencil(o.pencil, arr));
  out << render(pencil_report(pa));
  const auto verdict = corollary1_check(pa.base(), component_characters(pa.base(), pa.translation()));
  if (!verdict.holds) {
    err << "translated-component bookkeeping fails (" << verdict.case_label << ")\n";
    return kDisagreement;
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  ScanResult r;
  r.arrangement = load_arrangement(o.arrangement);
  r.order = o.order;
  r.seed = o.seed;
  const CohomologyOracle oracle = arrangement_oracle(r.arrangement, o.seed, &r.shear);
  for (auto& e : torsion_scan(oracle, scan_options(o)))
    r.entries.push_back({cone_character(r.arrangement, e.rho), e.h1});
  std::sort(r.entries.begin(), r.entries.end(), [](const ScanEntry& a, const ScanEntry& b) { return a.rho < b.rho; });
  out << render(scan_report(r));
  return kOk;
}

int cmd_sheaf(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.sheaf.g_max < 0 || o.sheaf.k_max < 0 || o.sheaf.marks_max < 0 || o.sheaf.order_max < 1) {
    throw InvalidInput("sheaf-scan bounds must be nonnegative and the order at least 1");
  }
  const SheafScanReport r = sheaf_scan(o.sheaf);
  out << render(sheaf_report(o.sheaf, r));
  if (r.holds()) return kOk;
  for (const auto& f : r.failures) err << "property failure: " << f << "\n";
  return kDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic varieties of real line arrangements", "charvar"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Options o;

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice of an arrangement");
  lattice->add_option("arrangement", o.arrangement, "Arrangement file")->required();

  auto* census = app.add_subcommand("census", "Component census certified by the cohomology oracle");
  census->add_option("arrangement", o.arrangement, "Arrangement file")->required();
  census->add_option("--order,-N", o.order, "Order of the full torsion scan")->check(CLI::Range(1, 64));
  census->add_option("--max-subset", o.max_subset, "Largest number of lines covered by a partition");
  census->add_option("--max-blocks", o.max_blocks, "Largest number of blocks in a partition");
  census->add_option("--max-pairs", o.max_pairs, "Block-pair budget of the partition search");
  census->add_option("--max-characters", o.max_characters, "Character budget of the torsion scan");
  census->add_option("--pencil", o.pencils, "Pencil file (repeatable)");
  census->add_option("--seed", o.seed, "Seed for the generic projection");
  census->add_flag("--verify-thm4", o.verify_thm4, "Locate the points of each component where h1 differs from q");

  auto* pencil = app.add_subcommand("pencil", "Orbifold base, T(f) and translated components of a pencil");
  pencil->add_option("arrangement", o.arrangement, "Arrangement file")->required();
  pencil->add_option("pencil", o.pencil, "Pencil file")->required();

  auto* scan = app.add_subcommand("scan", "h1 at every character of a given order");
  scan->add_option("arrangement", o.arrangement, "Arrangement file")->required();
  scan->add_option("--order,-N", o.order, "Character order")->check(CLI::Range(1, 64));
  scan->add_option("--max-characters", o.max_characters, "Character budget");
  scan->add_option("--max-generators", o.max_generators, "Generator budget");
  scan->add_option("--seed", o.seed, "Seed for the generic projection");

  auto* sheaf = app.add_subcommand("sheaf-scan", "Property suite for rank-one sheaf models on curves");
  sheaf->add_option("--gmax", o.sheaf.g_max, "Largest genus");
  sheaf->add_option("--kmax", o.sheaf.k_max, "Largest number of punctures (0 keeps the bases compact)");
  sheaf->add_option("--marks", o.sheaf.marks_max, "Largest number of marked points");
  sheaf->add_option("--order", o.sheaf.order_max, "Largest order of a loop value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(o, out);
    if (census->parsed()) return cmd_census(o, out, err);
    if (pencil->parsed()) return cmd_pencil(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out);
    if (sheaf->parsed()) return cmd_sheaf(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConstraintViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const OracleDisagreement& e) {
    err << "disagreement: " << e.what() << "\n";
    return kDisagreement;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}

}  // namespace charvar::cli
