#include "pcode/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pcode/cayley.hpp"
#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/experiments.hpp"
#include "pcode/group_spec.hpp"
#include "pcode/lattice.hpp"
#include "pcode/linear_groups.hpp"
#include "pcode/parallel.hpp"
#include "pcode/verdict_record.hpp"

namespace pcode {

namespace {

using ordered_json = nlohmann::ordered_json;

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::string caps_string(const CommandOptions& opt) {
  return "max-order=" + std::to_string(opt.max_order) +
         ";budget=" + std::to_string(opt.budget);
}

// Append-only JSONL cache; hits are revalidated against the certificate
// checkers and recomputed when only shortcut evidence is stored.
class VerdictCache {
 public:
  VerdictCache(std::string path, std::string caps) : path_(std::move(path)), caps_(std::move(caps)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        ordered_json j = ordered_json::parse(line);
        std::string key = make_key(j.at("group").get<std::string>(),
                                   j.at("subgroup").get<std::string>(),
                                   j.at("method").get<std::string>(),
                                   j.at("caps").get<std::string>());
        entries_[key] = j.at("record").dump();
      } catch (...) {
        // Malformed cache lines are skipped, never trusted.
      }
    }
  }

  std::optional<VerdictRecord> lookup(const std::string& group, const std::string& subgroup,
                                      const std::string& method, const Subgroup& h) const {
    if (path_.empty()) return std::nullopt;
    auto it = entries_.find(make_key(group, subgroup, method, caps_));
    if (it == entries_.end()) return std::nullopt;
    VerdictRecord r;
    try {
      r = record_from_json(it->second);
    } catch (...) {
      return std::nullopt;
    }
    std::optional<bool> valid = revalidate_record(r, h);
    if (!valid.has_value()) return std::nullopt;  // shortcut evidence: recompute
    if (!*valid) return std::nullopt;
    return r;
  }

  void store(const std::string& group, const std::string& subgroup, const std::string& method,
             const VerdictRecord& r) {
    if (path_.empty()) return;
    std::string key = make_key(group, subgroup, method, caps_);
    if (entries_.count(key)) return;
    ordered_json j;
    j["group"] = group;
    j["subgroup"] = subgroup;
    j["method"] = method;
    j["caps"] = caps_;
    j["record"] = ordered_json::parse(record_to_json(r));
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
    entries_[key] = j.at("record").dump();
  }

 private:
  static std::string make_key(const std::string& group, const std::string& subgroup,
                              const std::string& method, const std::string& caps) {
    return group + "\x1f" + subgroup + "\x1f" + method + "\x1f" + caps;
  }

  std::string path_;
  std::string caps_;
  std::map<std::string, std::string> entries_;
};

void emit_records(const std::vector<VerdictRecord>& records, const CommandOptions& opt,
                  std::ostream& out) {
  if (opt.format == "csv") {
    out << record_csv_header() << "\n";
    for (const VerdictRecord& r : records) out << record_to_csv(r) << "\n";
  } else if (opt.format == "md") {
    out << record_markdown_header() << "\n";
    for (const VerdictRecord& r : records) out << record_to_markdown(r) << "\n";
  } else {
    for (const VerdictRecord& r : records) out << record_to_json(r, opt.timing) << "\n";
  }
}

int classify_exception(std::ostream& err, const std::string& where) {
  try {
    throw;
  } catch (const ParseError& e) {
    err << where << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << where << ": " << e.what() << "\n";
    return kExitCap;
  } catch (const BudgetExhausted& e) {
    err << where << ": " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << where << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << where << ": " << e.what() << "\n";
    return kExitError;
  }
}

void write_graph(const Subgroup& h, const Verdict& v, const std::string& path, long budget) {
  std::vector<Perm> transversal;
  if (const auto* t = std::get_if<TransversalEvidence>(&v.evidence)) {
    transversal = t->elements;
  } else if (v.is_perfect_code) {
    TransversalSearchResult r = find_inverse_closed_transversal(h, budget);
    if (r.status != SearchStatus::Found) {
      throw BudgetExhausted("could not materialize a transversal for --emit-graph");
    }
    transversal = std::move(r.transversal);
  } else {
    throw PreconditionViolated("--emit-graph requires a positive verdict");
  }
  std::vector<Perm> connection = connection_set_from_transversal(h, transversal);
  CayleyGraph graph = make_cayley_graph(h.ambient, connection);
  CodeCheckReport direct = is_perfect_code_in_graph(graph, h.group->elements());
  if (!direct.verdict) {
    throw ConsistencyError("emitted graph failed the direct perfect-code check");
  }
  std::ofstream out(path);
  for (const auto& [a, b] : edge_list(graph)) out << a << " " << b << "\n";
}

}  // namespace

Verdict decide_with_method(const Subgroup& h, const std::string& method, long budget) {
  if (method == "auto") return auto_check(h);
  if (method == "elementwise") return check_elementwise(h);
  if (method == "doublecoset") return check_double_coset(h);
  if (method == "sylow") return check_via_sylow2(h);
  if (method == "transversal") {
    TransversalSearchResult r = find_inverse_closed_transversal(h, budget);
    if (r.status == SearchStatus::Exhausted) {
      throw BudgetExhausted("transversal search budget of " + std::to_string(budget) +
                            " nodes exhausted");
    }
    if (r.status == SearchStatus::Found) {
      Verdict v;
      v.is_perfect_code = true;
      v.evidence = TransversalEvidence{std::move(r.transversal)};
      return v;
    }
    return check_elementwise(h);  // nonexistent: get the canonical witness
  }
  if (method == "oracle") {
    if (oracle_decide(h)) {
      Verdict v;
      v.is_perfect_code = true;
      v.evidence = ShortcutEvidence{"oracle"};
      return v;
    }
    return check_elementwise(h);
  }
  throw BadParameters("unknown method '" + method + "'");
}

int cmd_check(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ResolvedGroup g = eval_group_spec(opt.group, opt.max_order);
    SubgroupSpec spec = parse_subgroup_spec(opt.subgroup);
    std::vector<ResolvedSubgroup> subs = resolve_subgroups(g, spec);
    VerdictCache cache(opt.cache_path, caps_string(opt));
    std::string canonical = g.spec.to_string();

    std::vector<VerdictRecord> records(subs.size());
    std::vector<char> from_cache(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto hit = cache.lookup(canonical, subs[i].description, opt.method, subs[i].subgroup);
      if (hit) {
        records[i] = *hit;
        from_cache[i] = 1;
      }
    }
    parallel_for(subs.size(), opt.jobs, [&](std::size_t i) {
      if (from_cache[i]) return;
      double t0 = now_ms();
      Verdict v = decide_with_method(subs[i].subgroup, opt.method, opt.budget);
      records[i] =
          make_record(canonical, subs[i].description, subs[i].subgroup, v, now_ms() - t0);
    });
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!from_cache[i]) {
        cache.store(canonical, subs[i].description, opt.method, records[i]);
      }
    }
    emit_records(records, opt, out);

    if (!opt.emit_graph.empty()) {
      if (subs.size() != 1) {
        throw BadParameters("--emit-graph requires a single resolved subgroup");
      }
      Verdict v = decide_with_method(subs[0].subgroup, opt.method, opt.budget);
      write_graph(subs[0].subgroup, v, opt.emit_graph, opt.budget);
    }
    return kExitOk;
  } catch (...) {
    return classify_exception(err, "check");
  }
}

int cmd_survey(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ResolvedGroup g = eval_group_spec(opt.group, opt.max_order);
    std::string canonical = g.spec.to_string();
    std::vector<Subgroup> subs = all_subgroups(g.group);

    std::vector<VerdictRecord> records(subs.size());
    std::vector<char> mismatch(subs.size(), 0);
    parallel_for(subs.size(), opt.jobs, [&](std::size_t i) {
      double t0 = now_ms();
      Verdict v = auto_check(subs[i]);
      bool via_oracle = oracle_decide(subs[i]);
      if (via_oracle != v.is_perfect_code) mismatch[i] = 1;
      records[i] = make_record(canonical, "subgroup#" + std::to_string(i), subs[i], v,
                               now_ms() - t0);
    });
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (mismatch[i]) {
        throw ConsistencyError("oracle and engine disagree on subgroup#" + std::to_string(i));
      }
    }
    emit_records(records, opt, out);

    long positives = 0;
    for (const VerdictRecord& r : records) positives += r.is_perfect_code ? 1 : 0;
    if (opt.format == "json") {
      ordered_json summary;
      summary["survey_summary"] = {{"group", canonical},
                                   {"subgroups", records.size()},
                                   {"perfect_codes", positives}};
      out << summary.dump() << "\n";
    } else {
      out << "# " << records.size() << " subgroups, " << positives << " perfect codes\n";
    }
    return kExitOk;
  } catch (...) {
    return classify_exception(err, "survey");
  }
}

int cmd_tables(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    bool all_match = true;
    std::vector<ordered_json> rows;
    for (long q : opt.qs) {
      struct RowSpec {
        const char* family;
        bool is_psl;
        MaximalTag tag;
      };
      std::vector<RowSpec> rowspecs;
      for (const MaximalTag& tag : psl2_maximal_tags(q)) rowspecs.push_back({"psl2", true, tag});
      if (q % 2 == 1) {
        for (const MaximalTag& tag : pgl2_maximal_tags(q)) {
          rowspecs.push_back({"pgl2", false, tag});
        }
      }
      for (const RowSpec& rs : rowspecs) {
        ordered_json row;
        row["group"] = std::string(rs.family) + ":" + std::to_string(q);
        row["row"] = rs.tag.to_string();
        try {
          Subgroup m = rs.is_psl ? psl2_maximal(q, rs.tag) : pgl2_maximal(q, rs.tag);
          long expect_order =
              rs.is_psl ? psl2_maximal_order(q, rs.tag) : pgl2_maximal_order(q, rs.tag);
          IsoType expect_sylow =
              rs.is_psl ? psl2_row_sylow_type(q, rs.tag) : pgl2_row_sylow_type(q, rs.tag);
          IsoType got_sylow = classify_2group(*sylow2(m.group).group);
          bool match = m.group->order() == expect_order && got_sylow == expect_sylow;
          row["order"] = m.group->order();
          row["order_expected"] = expect_order;
          row["sylow2"] = got_sylow.to_string();
          row["sylow2_expected"] = expect_sylow.to_string();
          if (q <= 13) {
            bool maximal = is_maximal_in(m);
            row["maximal"] = maximal;
            match = match && maximal;
          }
          row["match"] = match;
          all_match = all_match && match;
        } catch (const Error& e) {
          row["error"] = e.what();
          all_match = false;
        }
        rows.push_back(std::move(row));
      }
    }
    if (opt.format == "md") {
      out << "| group | row | order | sylow2 | match |\n|---|---|---|---|---|\n";
      for (const auto& row : rows) {
        out << "| " << row.at("group").get<std::string>() << " | "
            << row.at("row").get<std::string>() << " | "
            << (row.contains("order") ? std::to_string(row.at("order").get<long>()) : "-")
            << " | "
            << (row.contains("sylow2") ? row.at("sylow2").get<std::string>() : "-") << " | "
            << (row.contains("match") && row.at("match").get<bool>() ? "yes" : "NO") << " |\n";
      }
    } else {
      for (const auto& row : rows) out << row.dump() << "\n";
    }
    return all_match ? kExitOk : kExitFail;
  } catch (...) {
    return classify_exception(err, "tables");
  }
}

int cmd_experiment(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> names;
    if (opt.experiment == "all") {
      names = experiment_names();
    } else {
      names.push_back(opt.experiment);
    }
    bool all_pass = true;
    for (const std::string& name : names) {
      ExperimentReport report = run_experiment(name, opt.jobs);
      all_pass = all_pass && report.all_pass();
      if (opt.format == "json") {
        ordered_json j;
        j["experiment"] = report.experiment;
        j["pass"] = report.all_pass();
        ordered_json checks = ordered_json::array();
        for (const ExperimentCheck& c : report.checks) {
          ordered_json cj;
          cj["name"] = c.name;
          cj["pass"] = c.pass;
          if (!c.detail.empty()) cj["detail"] = c.detail;
          checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        out << j.dump() << "\n";
      } else {
        for (const ExperimentCheck& c : report.checks) {
          out << (c.pass ? "PASS" : "FAIL") << " [" << report.experiment << "] " << c.name;
          if (!c.detail.empty()) out << " (" << c.detail << ")";
          out << "\n";
        }
      }
    }
    return all_pass ? kExitOk : kExitFail;
  } catch (...) {
    return classify_exception(err, "experiment");
  }
}

int cmd_oracle(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ResolvedGroup g = eval_group_spec(opt.group, opt.max_order);
    SubgroupSpec spec = parse_subgroup_spec(opt.subgroup);
    std::vector<ResolvedSubgroup> subs = resolve_subgroups(g, spec);
    std::string canonical = g.spec.to_string();
    std::vector<VerdictRecord> records(subs.size());
    parallel_for(subs.size(), opt.jobs, [&](std::size_t i) {
      double t0 = now_ms();
      Verdict v = decide_with_method(subs[i].subgroup, "oracle", opt.budget);
      records[i] =
          make_record(canonical, subs[i].description, subs[i].subgroup, v, now_ms() - t0);
    });
    emit_records(records, opt, out);
    if (!opt.emit_graph.empty()) {
      if (subs.size() != 1) {
        throw BadParameters("--emit-graph requires a single resolved subgroup");
      }
      Verdict v = decide_with_method(subs[0].subgroup, "oracle", opt.budget);
      write_graph(subs[0].subgroup, v, opt.emit_graph, opt.budget);
    }
    return kExitOk;
  } catch (...) {
    return classify_exception(err, "oracle");
  }
}

}  // namespace pcode
