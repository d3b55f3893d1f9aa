#include "pcode/verdict_record.hpp"

#include <nlohmann/json.hpp>

namespace pcode {

using ordered_json = nlohmann::ordered_json;

VerdictRecord make_record(const std::string& group_spec, const std::string& subgroup_desc,
                          const Subgroup& h, const Verdict& verdict, double wall_ms) {
  VerdictRecord r;
  r.group_spec = group_spec;
  r.subgroup = subgroup_desc;
  r.group_order = h.ambient->order();
  r.subgroup_order = h.group->order();
  r.index = r.group_order / r.subgroup_order;
  r.is_perfect_code = verdict.is_perfect_code;
  for (const ReductionStep& s : verdict.trace) r.method.push_back(step_to_string(s));
  if (const auto* t = std::get_if<TransversalEvidence>(&verdict.evidence)) {
    r.evidence_kind = "transversal";
    for (const Perm& x : t->elements) r.evidence_indices.push_back(h.ambient->index_of(x));
  } else if (const auto* w = std::get_if<WitnessEvidence>(&verdict.evidence)) {
    r.evidence_kind = "witness";
    r.evidence_indices.push_back(h.ambient->index_of(w->a));
  } else {
    r.evidence_kind = "shortcut";
    r.shortcut_name = std::get<ShortcutEvidence>(verdict.evidence).name;
  }
  for (const Perm& g : h.ambient->generators()) {
    std::vector<int> img(g.images().begin(), g.images().end());
    r.group_generators.push_back(std::move(img));
  }
  r.wall_ms = wall_ms;
  return r;
}

namespace {

ordered_json to_json_obj(const VerdictRecord& r, bool with_timing) {
  ordered_json j;
  j["group"] = r.group_spec;
  j["subgroup"] = r.subgroup;
  j["group_order"] = r.group_order;
  j["subgroup_order"] = r.subgroup_order;
  j["index"] = r.index;
  j["is_perfect_code"] = r.is_perfect_code;
  j["method"] = r.method;
  ordered_json ev;
  ev["kind"] = r.evidence_kind;
  if (r.evidence_kind == "shortcut") {
    ev["name"] = r.shortcut_name;
  } else {
    ev["indices"] = r.evidence_indices;
  }
  j["evidence"] = ev;
  j["group_generators"] = r.group_generators;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace

std::string record_to_json(const VerdictRecord& r, bool with_timing) {
  return to_json_obj(r, with_timing).dump();
}

std::string record_csv_header() {
  return "group,subgroup,group_order,subgroup_order,index,is_perfect_code,evidence,method";
}

std::string record_to_csv(const VerdictRecord& r) {
  std::string method;
  for (std::size_t i = 0; i < r.method.size(); ++i) {
    if (i) method += ";";
    method += r.method[i];
  }
  std::string evidence = r.evidence_kind == "shortcut" ? "shortcut:" + r.shortcut_name
                                                       : r.evidence_kind;
  return "\"" + r.group_spec + "\",\"" + r.subgroup + "\"," + std::to_string(r.group_order) +
         "," + std::to_string(r.subgroup_order) + "," + std::to_string(r.index) + "," +
         (r.is_perfect_code ? "true" : "false") + ",\"" + evidence + "\",\"" + method + "\"";
}

std::string record_markdown_header() {
  return "| group | subgroup | |G| | |H| | index | perfect code | evidence |\n"
         "|---|---|---|---|---|---|---|";
}

std::string record_to_markdown(const VerdictRecord& r) {
  std::string evidence = r.evidence_kind == "shortcut" ? r.shortcut_name : r.evidence_kind;
  return "| " + r.group_spec + " | " + r.subgroup + " | " + std::to_string(r.group_order) +
         " | " + std::to_string(r.subgroup_order) + " | " + std::to_string(r.index) + " | " +
         (r.is_perfect_code ? "yes" : "no") + " | " + evidence + " |";
}

std::optional<bool> revalidate_record(const VerdictRecord& r, const Subgroup& h) {
  if (r.group_order != h.ambient->order() || r.subgroup_order != h.group->order()) {
    return false;
  }
  if (r.evidence_kind == "witness") {
    if (r.evidence_indices.size() != 1) return false;
    long idx = r.evidence_indices[0];
    if (idx < 0 || idx >= h.ambient->order()) return false;
    return validate_witness(*h.ambient, *h.group, h.ambient->elements()[idx]) &&
           !r.is_perfect_code;
  }
  if (r.evidence_kind == "transversal") {
    std::vector<Perm> transversal;
    for (long idx : r.evidence_indices) {
      if (idx < 0 || idx >= h.ambient->order()) return false;
      transversal.push_back(h.ambient->elements()[idx]);
    }
    return validate_transversal(*h.ambient, *h.group, transversal) && r.is_perfect_code;
  }
  return std::nullopt;  // shortcut evidence: recompute
}

VerdictRecord record_from_json(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  VerdictRecord r;
  r.group_spec = j.at("group").get<std::string>();
  r.subgroup = j.at("subgroup").get<std::string>();
  r.group_order = j.at("group_order").get<long>();
  r.subgroup_order = j.at("subgroup_order").get<long>();
  r.index = j.at("index").get<long>();
  r.is_perfect_code = j.at("is_perfect_code").get<bool>();
  r.method = j.at("method").get<std::vector<std::string>>();
  const auto& ev = j.at("evidence");
  r.evidence_kind = ev.at("kind").get<std::string>();
  if (r.evidence_kind == "shortcut") {
    r.shortcut_name = ev.at("name").get<std::string>();
  } else {
    r.evidence_indices = ev.at("indices").get<std::vector<long>>();
  }
  r.group_generators = j.at("group_generators").get<std::vector<std::vector<int>>>();
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

}  // namespace pcode
