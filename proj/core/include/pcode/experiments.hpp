#pragma once

#include <string>
#include <vector>

#include "pcode/group.hpp"

namespace pcode {

struct ExperimentCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<ExperimentCheck> checks;

  bool all_pass() const {
    for (const ExperimentCheck& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

// Named reproduction experiments; every assertion prints as one PASS/FAIL
// line through the CLI. `jobs` parallelizes independent assertions where the
// experiment supports it; output is order-stable.
ExperimentReport run_experiment(const std::string& name, int jobs = 1);

const std::vector<std::string>& experiment_names();

}  // namespace pcode
