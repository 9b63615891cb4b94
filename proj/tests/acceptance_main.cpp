// Acceptance suite driver: runs every criterion at its pinned tolerance,
// prints one pass/fail line per criterion, writes the CSV report, and exits
// nonzero if anything failed.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "groversim/acceptance.hpp"

int main(int argc, char** argv) {
  groversim::acceptance_options opts;
  std::string output;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opts.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(argv[i], "--output") == 0 && i + 1 < argc) {
      output = argv[++i];
    } else if (std::strcmp(argv[i], "--criteria") == 0 && i + 1 < argc) {
      for (const char* p = argv[++i]; *p;) {
        opts.criteria.insert(std::atoi(p));
        while (*p && *p != ',') ++p;
        if (*p == ',') ++p;
      }
    } else if (std::strcmp(argv[i], "--lambda") == 0 && i + 1 < argc) {
      opts.bbht_lambda = std::strtod(argv[++i], nullptr);
    } else {
      std::fprintf(stderr, "usage: acceptance [--seed S] [--criteria 1,2,...] [--lambda L] [--output report.csv]\n");
      return 1;
    }
  }

  const auto results = groversim::run_acceptance(opts);
  bool all_pass = true;
  for (const auto& c : results) {
    const double budget = groversim::runtime_budget_seconds(c.id);
    const bool in_time = c.seconds <= budget;
    const bool pass = c.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %d %-20s %zu checks  %.1fs (budget %.0fs)%s\n", pass ? "PASS" : "FAIL",
                c.id, c.name.c_str(), c.rows.size(), c.seconds, budget,
                in_time ? "" : "  ** over budget");
    if (!c.pass)
      for (const auto& r : c.rows)
        if (!r.pass)
          std::printf("       failed: %s  observed %s  bound %s\n", r.check.c_str(),
                      r.observed.c_str(), r.bound.c_str());
  }

  if (!output.empty()) {
    std::ofstream out(output);
    out << groversim::acceptance_report_csv(results);
    std::printf("report: %s\n", output.c_str());
  }
  return all_pass ? 0 : 1;
}
