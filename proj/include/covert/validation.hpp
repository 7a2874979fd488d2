#pragma once

// Self-check suite: every closed form against its independent oracle at the
// configured parameters. Each check reports the measured error next to the
// tolerance it is held to.

#include "covert/experiments.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace covert {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationOptions {
    RunOptions run;
    bool inject_fault = false;  // perturbs the xi* closed form by 1e-3
};

std::vector<CheckResult> run_validate(const ExperimentConfig& cfg, const ValidationOptions& opt);

/// One line per check, then a summary line.
void print_report(std::ostream& out, const std::vector<CheckResult>& checks);
bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace covert
