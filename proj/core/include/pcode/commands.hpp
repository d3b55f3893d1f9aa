#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcode/group.hpp"
#include "pcode/perfect_code.hpp"

namespace pcode {

// Exit codes shared by the CLI subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitFail = 5;

struct CommandOptions {
  std::string group;
  std::string subgroup;
  std::string method = "auto";  // auto|elementwise|doublecoset|transversal|sylow|oracle
  std::string format = "json";  // json|md|csv
  long max_order = kDefaultOrderCap;
  long budget = kDefaultSearchBudget;
  int jobs = 1;
  bool seedless = false;  // asserts no RNG is in use; always true here
  bool timing = false;
  std::string emit_graph;  // path for the edge-list export
  std::string cache_path;  // append-only JSONL verdict cache
  std::vector<long> qs;    // tables
  std::string experiment;  // experiment name, or "all"
};

int cmd_check(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_survey(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_tables(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_experiment(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oracle(const CommandOptions& opt, std::ostream& out, std::ostream& err);

// Decides one pair with the named method. Raises BudgetExhausted when the
// transversal search runs out of nodes.
Verdict decide_with_method(const Subgroup& h, const std::string& method, long budget);

}  // namespace pcode
