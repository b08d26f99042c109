// Command line front end.  `monodromy verify [suite]` runs the registered
// check suites and exits 0 only if every check passes; `monodromy report`
// prints the computed profile of a single group.  Both emit an optional JSON
// document whose bytes depend only on the invocation parameters, apart from
// the elapsed_ms fields.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "monodromy/report.hpp"

namespace {

int emit(const monodromy::Report& rep, bool want_json, const std::string& json_path) {
  if (want_json) {
    std::string doc = monodromy::report_to_json(rep).dump(2) + "\n";
    if (json_path.empty() || json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return 2;
      }
      out << doc;
      std::cout << "report written to " << json_path << "\n";
    }
  } else {
    std::cout << monodromy::report_to_text(rep);
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for adjoint decompositions, transporter "
               "elements, principal gradings and deformation ledgers"};
  app.require_subcommand(1);

  monodromy::ReportParams params;
  std::string suite = "all";
  std::string family_str;
  std::string json_path;

  auto* verify = app.add_subcommand("verify", "run a registered check suite");
  verify->add_option("--suite,suite", suite,
                     "one of: all rootsys decomp transporter principal ledger")
      ->capture_default_str();
  verify->add_option("--prime", params.prime, "field characteristic for the modular checks")
      ->capture_default_str();
  verify->add_option("--seed", params.seed, "seed for the randomized searches")
      ->capture_default_str();
  auto* vjson = verify->add_option("--json", json_path,
                                   "write the report as JSON to this path ('-' or empty for stdout)")
                    ->expected(0, 1);

  auto* report = app.add_subcommand("report", "profile a single group");
  report->add_option("--family", family_str, "root system family letter A-G")->required();
  report->add_option("--rank", params.rank, "root system rank")->required();
  report->add_option("--prime", params.prime, "field characteristic for the modular checks")
      ->capture_default_str();
  report->add_option("--seed", params.seed, "seed for the randomized searches")
      ->capture_default_str();
  auto* rjson = report->add_option("--json", json_path,
                                   "write the report as JSON to this path ('-' or empty for stdout)")
                    ->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      params.suite = suite;
      return emit(monodromy::run_verify(params), vjson->count() > 0, json_path);
    }
    params.family = monodromy::family_from_letter(family_str.empty() ? '?' : family_str[0]);
    return emit(monodromy::run_group_report(params), rjson->count() > 0, json_path);
  } catch (const monodromy::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
