#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcode/group.hpp"
#include "pcode/perfect_code.hpp"

namespace pcode {

// One decided (group, subgroup) pair in machine-readable form. Transversals
// and witnesses are serialized as canonical element indices into the group's
// element ordering; the generating images are included so the ordering can
// be reconstructed.
struct VerdictRecord {
  std::string group_spec;
  std::string subgroup;
  long group_order = 0;
  long subgroup_order = 0;
  long index = 0;
  bool is_perfect_code = false;
  std::vector<std::string> method;  // rendered reduction trace
  std::string evidence_kind;        // "transversal" | "witness" | "shortcut"
  std::string shortcut_name;
  std::vector<long> evidence_indices;
  std::vector<std::vector<int>> group_generators;
  double wall_ms = 0.0;
};

VerdictRecord make_record(const std::string& group_spec, const std::string& subgroup_desc,
                          const Subgroup& h, const Verdict& verdict, double wall_ms);

// Deterministic single-line JSON; wall time is emitted only when
// with_timing is set, so default output is byte-stable across runs.
std::string record_to_json(const VerdictRecord& r, bool with_timing = false);
std::string record_to_csv(const VerdictRecord& r);
std::string record_csv_header();
std::string record_to_markdown(const VerdictRecord& r);
std::string record_markdown_header();

// Reconstructs evidence from a serialized record and revalidates it against
// the given pair; shortcut evidence cannot be revalidated and returns
// nullopt (callers must recompute).
std::optional<bool> revalidate_record(const VerdictRecord& r, const Subgroup& h);

// Parses a record from its JSON line (throws on malformed input).
VerdictRecord record_from_json(const std::string& line);

}  // namespace pcode
