#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "hsalg/report/acceptance.hpp"

using namespace hsalg;

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one PASS/FAIL line per criterion"};
  std::string profile = "full", report_path;
  std::uint64_t seed = 1;
  bool fault = false;
  app.add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--seed", seed);
  app.add_flag("--inject-fault", fault, "Corrupt a structure constant before the Jacobi sweep");
  app.add_option("--report", report_path, "Write the full JSON report here");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  AcceptanceOptions opts;
  opts.profile = parse_profile(profile);
  opts.seed = seed;
  opts.faults.corrupt_structure_constant = fault;

  bool all = true;
  nlohmann::json report = {{"schema", "hsalg.report/1"}, {"profile", profile}, {"criteria", nlohmann::json::array()}};
  for (const auto& o : run_acceptance(opts)) {
    bool ok = o.report.pass;
    double budget = criterion_budget(o.id);
    bool in_time = opts.profile == Profile::Quick || budget == 0 || o.seconds < budget;
    ok = ok && in_time;
    all = all && ok;
    std::printf("criterion %2d %s  %-32s %8.2fs%s\n", o.id, ok ? "PASS" : "FAIL", criterion_title(o.id).c_str(), o.seconds,
                in_time ? "" : "  (over budget)");
    if (!o.report.pass) std::printf("    counterexample: %s\n", o.report.counterexample.dump().c_str());
    auto j = o.report.to_json();
    j["seconds"] = o.seconds;
    report["criteria"].push_back(j);
  }
  std::fflush(stdout);
  if (!report_path.empty()) std::ofstream(report_path) << report.dump(2) << "\n";
  return all ? 0 : 1;
}
