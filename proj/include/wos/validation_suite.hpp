#pragma once

#include <string>
#include <vector>

namespace wos::validation {

// One acceptance-style check with its measured statistic and pinned
// threshold.  criterion groups checks for the acceptance harness.
struct CheckResult {
    std::string name;
    int criterion = 0;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

std::vector<CheckResult> suite_bessel();
std::vector<CheckResult> suite_sampler();
std::vector<CheckResult> suite_oracle();
std::vector<CheckResult> suite_mvp();
std::vector<CheckResult> suite_laplace();
std::vector<CheckResult> suite_end2end();

// selector in {bessel, sampler, oracle, mvp, laplace, end2end, all};
// throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& selector);

}  // namespace wos::validation
