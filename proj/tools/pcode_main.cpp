#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcode/commands.hpp"
#include "pcode/experiments.hpp"

namespace {

void add_common_flags(CLI::App* cmd, pcode::CommandOptions* opt) {
  cmd->add_option("--method", opt->method, "auto|elementwise|doublecoset|transversal|sylow|oracle")
      ->check(CLI::IsMember({"auto", "elementwise", "doublecoset", "transversal", "sylow",
                             "oracle"}));
  cmd->add_option("--format", opt->format, "json|md|csv")
      ->check(CLI::IsMember({"json", "md", "csv"}));
  cmd->add_option("--max-order", opt->max_order, "group materialization cap");
  cmd->add_option("--budget", opt->budget, "transversal search node budget");
  cmd->add_option("--jobs", opt->jobs, "worker threads for independent records");
  cmd->add_flag("--seedless", opt->seedless,
                "assert that no randomness is in use (all searches are deterministic)");
  cmd->add_flag("--timing", opt->timing, "include wall_ms in JSON records");
  cmd->add_option("--emit-graph", opt->emit_graph, "write the certified Cayley graph edge list");
  cmd->add_option("--cache", opt->cache_path, "append-only JSONL verdict cache");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup perfect-code engine"};
  app.require_subcommand(1);

  pcode::CommandOptions opt;

  CLI::App* check = app.add_subcommand("check", "decide one subgroup");
  check->add_option("--group", opt.group, "group spec, e.g. psl2:23")->required();
  check->add_option("--subgroup", opt.subgroup, "subgroup spec, e.g. maximal:d-1")->required();
  add_common_flags(check, &opt);

  CLI::App* survey = app.add_subcommand("survey", "decide every subgroup");
  survey->add_option("--group", opt.group, "group spec")->required();
  add_common_flags(survey, &opt);

  CLI::App* tables = app.add_subcommand("tables", "maximal-subgroup table conformance");
  tables->add_option("q", opt.qs, "prime powers to verify")->required();
  add_common_flags(tables, &opt);

  std::string names;
  for (const std::string& n : pcode::experiment_names()) names += n + " ";
  CLI::App* experiment = app.add_subcommand("experiment", "run a named experiment");
  experiment->add_option("name", opt.experiment, "one of: " + names + "or 'all'")->required();
  add_common_flags(experiment, &opt);

  CLI::App* oracle = app.add_subcommand("oracle", "definition-level oracle decision");
  oracle->add_option("--group", opt.group, "group spec")->required();
  oracle->add_option("--subgroup", opt.subgroup, "subgroup spec")->required();
  add_common_flags(oracle, &opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : pcode::kExitParse;
  }

  if (check->parsed()) return pcode::cmd_check(opt, std::cout, std::cerr);
  if (survey->parsed()) return pcode::cmd_survey(opt, std::cout, std::cerr);
  if (tables->parsed()) return pcode::cmd_tables(opt, std::cout, std::cerr);
  if (experiment->parsed()) return pcode::cmd_experiment(opt, std::cout, std::cerr);
  if (oracle->parsed()) return pcode::cmd_oracle(opt, std::cout, std::cerr);
  return pcode::kExitError;
}
