// Batch verification harness: configures the rank, the rewrite degree
// bound and the c-profile, runs the check registry and emits a text or
// structured report.  Exit status is nonzero iff any selected check fails.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cpnq/checks.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of the Dolbeault-Dirac construction on quantum "
      "projective space"};

  cpnq::CheckConfig cfg;
  std::string format = "text";
  std::string output;
  bool enable_n4 = false;

  app.add_option("-N,--rank", cfg.N,
                 "Rank N of CP^N_q (2..3; 4 requires --enable-n4)")
      ->default_val(2);
  app.add_option("--degree-bound", cfg.degree_bound,
                 "Rewrite-system degree bound (default 2N+4)")
      ->default_val(0);
  app.add_option("--c0", cfg.c0,
                 "Profile value c_0: rational function in v (q = v^2), e.g. "
                 "'1', 'q^-1', '(v^4-1)/(v^2)', or 'symbolic'")
      ->default_val("1");
  app.add_option("--c1", cfg.c1, "Profile value c_1 (same syntax as --c0)")
      ->default_val("1");
  app.add_option("--check", cfg.filter,
                 "Run only the named checks (repeatable)");
  app.add_option("--format", format, "Report format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  app.add_option("-o,--output", output,
                 "Write the report to a file instead of standard output");
  app.add_flag("--enable-n4", enable_n4,
               "Allow the longer-running rank-4 configuration");
  app.add_flag("--timings", cfg.include_timings,
               "Include wall times in the report (nondeterministic bytes)");

  CLI11_PARSE(app, argc, argv);

  if (cfg.N < 2 || cfg.N > 4) {
    std::cerr << "error: rank must be between 2 and 4\n";
    return 2;
  }
  if (cfg.N == 4 && !enable_n4) {
    std::cerr << "error: rank 4 is opt-in; pass --enable-n4\n";
    return 2;
  }

  cpnq::Report report;
  try {
    report = cpnq::run_checks(cfg);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  std::string rendered =
      format == "json" ? cpnq::emit_structured(report) : cpnq::emit_text(report);
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file " << output << "\n";
      return 2;
    }
    out << rendered;
  }

  int total = static_cast<int>(report.records.size());
  int failed = 0;
  for (const auto& r : report.records)
    if (r.status == "fail") ++failed;
  std::cerr << total - failed << "/" << total << " checks passed\n";
  return report.all_passed() ? 0 : 1;
}
