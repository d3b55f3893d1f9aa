#include <doctest.h>

#include <sstream>

#include "pcode/commands.hpp"
#include "pcode/group_spec.hpp"
#include "pcode/perfect_code.hpp"
#include "pcode/small_groups.hpp"
#include "pcode/verdict_record.hpp"

using namespace pcode;

TEST_CASE("records serialize and round-trip through JSON") {
  ResolvedGroup g = eval_group_spec("cyclic:4");
  auto subs = resolve_subgroups(g, parse_subgroup_spec("all"));
  for (const ResolvedSubgroup& rs : subs) {
    Verdict v = auto_check(rs.subgroup);
    VerdictRecord r = make_record("cyclic:4", rs.description, rs.subgroup, v, 1.5);
    VerdictRecord back = record_from_json(record_to_json(r));
    CHECK(back.group_spec == r.group_spec);
    CHECK(back.is_perfect_code == r.is_perfect_code);
    CHECK(back.evidence_kind == r.evidence_kind);
    CHECK(back.evidence_indices == r.evidence_indices);
  }
}

TEST_CASE("witness records revalidate") {
  ResolvedGroup g = eval_group_spec("cyclic:4");
  Perm x = g.group->generators()[0];
  Subgroup h = make_subgroup(g.group, {x * x});
  Verdict v = check_elementwise(h);
  REQUIRE_FALSE(v.is_perfect_code);
  VerdictRecord r = make_record("cyclic:4", "c2", h, v, 0);
  auto valid = revalidate_record(r, h);
  REQUIRE(valid.has_value());
  CHECK(*valid);
  // tampering flips validation
  r.evidence_indices[0] = 0;  // the identity is no witness
  valid = revalidate_record(r, h);
  REQUIRE(valid.has_value());
  CHECK_FALSE(*valid);
}

TEST_CASE("transversal records revalidate") {
  GroupPtr v4 = direct_product(cyclic_group(2), cyclic_group(2));
  Subgroup h = make_subgroup(v4, {v4->generators()[1]});
  TransversalSearchResult sr = find_inverse_closed_transversal(h);
  REQUIRE(sr.status == SearchStatus::Found);
  Verdict v;
  v.is_perfect_code = true;
  v.evidence = TransversalEvidence{sr.transversal};
  VerdictRecord r = make_record("cyclic:2 x cyclic:2", "h", h, v, 0);
  auto valid = revalidate_record(r, h);
  REQUIRE(valid.has_value());
  CHECK(*valid);
}

TEST_CASE("shortcut records cannot be revalidated") {
  GroupPtr c4 = cyclic_group(4);
  Verdict v = auto_check(whole_group(c4));
  VerdictRecord r = make_record("cyclic:4", "whole", whole_group(c4), v, 0);
  CHECK_FALSE(revalidate_record(r, whole_group(c4)).has_value());
}

TEST_CASE("default JSON output is byte-identical across runs and jobs") {
  CommandOptions opt;
  opt.group = "sl2:3";
  std::ostringstream out1, out2, out4, err;
  CHECK(cmd_survey(opt, out1, err) == kExitOk);
  CHECK(cmd_survey(opt, out2, err) == kExitOk);
  opt.jobs = 4;
  CHECK(cmd_survey(opt, out4, err) == kExitOk);
  CHECK(out1.str() == out2.str());
  CHECK(out1.str() == out4.str());
  CHECK(out1.str().find("wall_ms") == std::string::npos);
}

TEST_CASE("csv and markdown renderings") {
  ResolvedGroup g = eval_group_spec("cyclic:4");
  Subgroup h = whole_group(g.group);
  VerdictRecord r = make_record("cyclic:4", "whole", h, auto_check(h), 0);
  CHECK(record_to_csv(r).find("cyclic:4") != std::string::npos);
  CHECK(record_to_markdown(r).find("| cyclic:4 |") != std::string::npos);
  CHECK(record_csv_header().find("is_perfect_code") != std::string::npos);
}

TEST_CASE("cmd_check exit codes") {
  std::ostringstream out, err;
  CommandOptions opt;
  opt.group = "nosuch:4";
  opt.subgroup = "sylow2";
  CHECK(cmd_check(opt, out, err) == kExitParse);
  opt.group = "sym:10";
  CHECK(cmd_check(opt, out, err) == kExitCap);
  opt.group = "psl2:11";
  opt.subgroup = "maximal:borel";
  opt.method = "transversal";
  opt.budget = 2;
  CHECK(cmd_check(opt, out, err) == kExitBudget);
}

TEST_CASE("verdict cache stores and revalidates") {
  std::string path = "pcode_test_cache.jsonl";
  std::remove(path.c_str());
  CommandOptions opt;
  opt.group = "cyclic:4";
  opt.subgroup = "all";
  opt.method = "elementwise";
  opt.cache_path = path;
  std::ostringstream out1, out2, err;
  CHECK(cmd_check(opt, out1, err) == kExitOk);
  CHECK(cmd_check(opt, out2, err) == kExitOk);  // second run hits the cache
  CHECK(out1.str() == out2.str());
  std::remove(path.c_str());
}
