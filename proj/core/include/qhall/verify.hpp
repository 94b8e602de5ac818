#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhall {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // filled on failure or for report-only findings
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
};

// Identity-verification suites. Suites marked report-only never fail; their
// findings go into the check details.
SuiteResult verify_p_poly(int max_weight, int jobs = 1);
SuiteResult verify_r_poly(int max_weight, int jobs = 1);
SuiteResult verify_column_kostka(int max_weight);
SuiteResult verify_mahonian(int max_weight);
SuiteResult verify_dual_mahonian(int max_weight);
SuiteResult verify_tabloid_stats(int max_weight);
SuiteResult verify_lp_charge(int max_weight);
SuiteResult verify_subgroup_chains(int max_weight);
SuiteResult verify_border_strip(int max_weight);
SuiteResult verify_pieri(int max_weight);
SuiteResult verify_supernomial(int max_weight);
SuiteResult verify_rc_mult(int max_area);
SuiteResult scan_hl_positivity(int max_weight);  // report-only

std::vector<std::string> verify_suite_names();
SuiteResult run_suite(const std::string& name, int max_weight, int jobs = 1);

}  // namespace qhall
