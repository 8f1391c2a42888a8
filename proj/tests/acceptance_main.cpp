// Acceptance gate: runs the full validation registry twice at the default
// budget and condenses the results into one PASS/FAIL line per release
// criterion on stdout.  The detailed registry report goes to stderr.
// Exit status is 0 only when every criterion passes.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "rfso/validation.hpp"

namespace {

using rfso::validation::CheckResult;
using rfso::validation::ValidationOutputs;

const CheckResult* find_check(const ValidationOutputs& v,
                              const std::string& id) {
  for (const auto& c : v.checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

// Every listed check must exist and pass.
bool ids_pass(const ValidationOutputs& v, const std::vector<std::string>& ids,
              std::string& detail) {
  int passed = 0;
  std::string failures;
  for (const auto& id : ids) {
    const CheckResult* c = find_check(v, id);
    if (c == nullptr) {
      failures += " " + id + "(missing)";
    } else if (c->pass) {
      ++passed;
    } else {
      failures += " " + id;
    }
  }
  detail = std::to_string(passed) + "/" + std::to_string(ids.size()) +
           " checks";
  if (!failures.empty()) detail += "; failing:" + failures;
  return failures.empty();
}

// At least one check with the prefix must exist and all of them must pass.
bool prefix_pass(const ValidationOutputs& v, const std::string& prefix,
                 std::string& detail) {
  int total = 0;
  int passed = 0;
  std::string failures;
  for (const auto& c : v.checks) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    ++total;
    if (c.pass) {
      ++passed;
    } else {
      failures += " " + c.id;
    }
  }
  detail = std::to_string(passed) + "/" + std::to_string(total) + " " +
           prefix + "* checks";
  if (total == 0) detail = "no " + prefix + "* checks found";
  if (!failures.empty()) detail += "; failing:" + failures;
  return total > 0 && failures.empty();
}

bool within_budget(double seconds, double budget, std::string& detail) {
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%.2f s against a %.0f s budget",
                seconds, budget);
  detail += std::string("; ") + buffer;
  return seconds <= budget;
}

}  // namespace

int main() {
  std::cerr << "running the full validation registry twice at the default "
               "budget...\n";
  const rfso::validation::ValidationOptions opts;  // default seed and budget
  const ValidationOutputs first = rfso::validation::run_validation(opts);
  const ValidationOutputs second = rfso::validation::run_validation(opts);
  std::cerr << first.report_text();

  struct Criterion {
    int number;
    const char* description;
    bool pass;
    std::string detail;
  };
  std::vector<Criterion> criteria;

  {
    std::string d;
    bool ok = prefix_pass(first, "IDENTITY-", d);
    ok = within_budget(first.timings.identity_s, 5.0, d) && ok;
    criteria.push_back({1, "special-function identity battery", ok, d});
  }
  {
    std::string d;
    bool ok = prefix_pass(first, "CDF-KS-", d);
    std::string t;
    const bool in_time = within_budget(first.timings.ks_max_config_s, 60.0, t);
    d += t + " (slowest configuration)";
    criteria.push_back({2, "distribution function vs simulation (KS)",
                        ok && in_time, d});
  }
  {
    std::string d;
    bool ok = prefix_pass(first, "PDF-FD-", d);
    ok = within_budget(first.timings.pdf_fd_s, 30.0, d) && ok;
    criteria.push_back(
        {3, "density consistent with distribution derivative", ok, d});
  }
  {
    std::string d;
    const bool ok =
        ids_pass(first, {"MGF-LAPLACE", "MOMENT-CCDF", "MOMENT-MC"}, d);
    criteria.push_back(
        {4, "transform and moments vs independent oracles", ok, d});
  }
  {
    std::string d;
    const bool ok = prefix_pass(first, "LIMIT-XI-", d);
    criteria.push_back(
        {5, "large-misalignment-ratio limit matches the clean-pointing "
            "formulas",
         ok, d});
  }
  {
    std::string d;
    const bool ok = ids_pass(first,
                             {"BER-MC", "BER-DIRECT", "BER-ORDER",
                              "BER-MONO-SNR", "BER-MONO-XI"},
                             d);
    criteria.push_back(
        {6, "bit error rates: simulation agreement and orderings", ok, d});
  }
  {
    std::string d;
    const bool ok = ids_pass(first, {"SER-QUAD", "SER-REDUCE", "SER-MC"}, d);
    criteria.push_back(
        {7, "symbol error rates: quadrature, reductions, simulation", ok, d});
  }
  {
    std::string d;
    bool ok = ids_pass(first, {"CAP-ORACLE", "CAP-MC"}, d);
    std::string t;
    const bool in_time = within_budget(first.timings.egbmgf_point_s, 60.0, t);
    d += t + " (one bivariate-kernel point)";
    ok = ok && in_time;
    criteria.push_back({8, "ergodic capacity vs oracle and simulation", ok, d});
  }
  {
    const bool same_report = first.report_text() == second.report_text();
    const bool same_csv = first.csv_text() == second.csv_text();
    std::string d = same_report && same_csv
                        ? "two full runs byte-identical (report and CSV)"
                        : std::string("mismatch in") +
                              (same_report ? "" : " report") +
                              (same_csv ? "" : " CSV");
    criteria.push_back(
        {9, "deterministic reruns at a fixed seed", same_report && same_csv,
         d});
  }
  {
    std::string d;
    const bool ok = ids_pass(first, {"AF-EXACT", "AF-COMPOSE", "AF-MC"}, d);
    criteria.push_back(
        {10, "fading figures: exactness, composition, simulation", ok, d});
  }

  int passed = 0;
  for (const auto& c : criteria) {
    if (c.pass) ++passed;
    std::printf("criterion %2d: %s  %s (%s)\n", c.number,
                c.pass ? "PASS" : "FAIL", c.description, c.detail.c_str());
  }
  const bool all = passed == static_cast<int>(criteria.size());
  std::printf("# ACCEPTANCE SUMMARY | %d/%zu criteria passed | %s\n", passed,
              criteria.size(), all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
