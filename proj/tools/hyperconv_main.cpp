#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperconv/enumerate.hpp"
#include "hyperconv/funcspace.hpp"
#include "hyperconv/laws.hpp"
#include "hyperconv/transfer.hpp"
#include "json.hpp"

namespace {

using namespace hyperconv;

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_laws(const std::string& only_csv, ScopeConfig config, const std::string& format,
             bool with_timing) {
  Report report = run_laws(split_ids(only_csv), config);
  if (format == "json")
    std::cout << report.to_json(with_timing) << "\n";
  else
    std::cout << report.to_text(with_timing);
  if (report.has_silent_skip()) {
    std::cerr << "error: a selected law was skipped without an explicit scope exclusion\n";
    return 2;
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_enumerate(int points, bool t0, bool count_only) {
  std::vector<FiniteSpace> spaces = enumerate_spaces(points, t0);
  if (!count_only)
    for (const FiniteSpace& s : spaces) std::cout << space_to_json(s) << "\n";
  std::cout << "count: " << spaces.size() << "\n";
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& alpha_label) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  FiniteSpace space = space_from_json(buffer.str());
  nlohmann::json out;
  out["space"] = nlohmann::json::parse(space_to_json(space));
  SeparationProfile sep = space.separation_profile();
  out["separation"] = {{"t0", sep.t0}, {"t1", sep.t1}, {"normal", sep.normal}};
  out["regular"] = space.regular();
  nlohmann::json comps = nlohmann::json::array();
  for (PointSet block : space.components()) {
    nlohmann::json b = nlohmann::json::array();
    for_each_bit(block, [&](int i) { b.push_back(i); });
    comps.push_back(b);
  }
  out["components"] = comps;
  out["opens"] = space.open_count();

  if (space.points() <= 4) {
    StandardAlphas alphas = standard_alphas(space);
    out["collections"] = {{"p", alphas.p.families.size()},
                          {"k", alphas.k.families.size()},
                          {"kappa", alphas.kappa.families.size()},
                          {"s", alphas.s.families.size()}};
    const AlphaCollection* alpha = &alphas.p;
    if (alpha_label == "k") alpha = &alphas.k;
    if (alpha_label == "kappa") alpha = &alphas.kappa;
    if (alpha_label == "s") alpha = &alphas.s;
    CoverNumbers nums = cover_numbers(*alpha, space.all_points());
    out["cover_numbers"] = {{"alpha", alpha_label}, {"lindelof", nums.lindelof}, {"arens", nums.arens}};
    HyperConvergence scott = scott_convergence(space);
    SolidityReport sol = solidity_check(scott);
    out["scott_solidity"] = {{"lower", sol.lower},
                             {"upper_regular", sol.upper_regular},
                             {"compact", sol.compact},
                             {"directed_sups", sol.directed_sups},
                             {"pseudotopology", sol.pseudotopology},
                             {"solid", sol.solid}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laws of hyperspace and function-space convergences on finite spaces"};
  app.require_subcommand(1);

  auto* laws = app.add_subcommand("laws", "run the law suite");
  std::string only, report_format = "text", filter;
  ScopeConfig config;
  bool with_timing = false;
  laws->add_option("--only", only, "comma-separated law ids");
  laws->add_option("--max-points", config.max_points, "largest space size for the law grids")
      ->check(CLI::Range(1, 4));
  laws->add_option("--depth", config.depth, "ladder truncation depth")->check(CLI::Range(1, 16));
  laws->add_option("--report", report_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  laws->add_option("--seed", config.seed, "sampling seed");
  laws->add_option("--jobs", config.jobs, "worker threads (0 = hardware)");
  laws->add_option("--instance", filter, "run only instances whose key contains this string");
  laws->add_flag("--timing", with_timing, "include wall times in the report");

  auto* enumerate = app.add_subcommand("enumerate", "list labeled topologies");
  int points = 3;
  bool t0 = false, count_only = false;
  enumerate->add_option("--points", points, "point count")->required()->check(CLI::Range(1, 5));
  enumerate->add_flag("--t0", t0, "only T0 topologies");
  enumerate->add_flag("--count", count_only, "print the count only");

  auto* invariants = app.add_subcommand("invariants", "report invariants of a space file");
  std::string space_file, alpha_label = "p";
  invariants->add_option("file", space_file, "space file (json)")->required();
  invariants->add_option("--alpha", alpha_label, "collection for the cover numbers")
      ->check(CLI::IsMember({"p", "k", "kappa", "s"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (laws->parsed()) {
      config.instance_filter = filter;
      return cmd_laws(only, config, report_format, with_timing);
    }
    if (enumerate->parsed()) return cmd_enumerate(points, t0, count_only);
    if (invariants->parsed()) return cmd_invariants(space_file, alpha_label);
  } catch (const hyperconv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
