#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcode/group.hpp"
#include "pcode/group_ops.hpp"

namespace pcode {

// --- verdicts and evidence --------------------------------------------------

// An inverse-closed left transversal certifying a positive verdict.
struct TransversalEvidence {
  std::vector<Perm> elements;
};

// An element a with a^2 in H, |H|/|H cap H^a| odd and no involution in aH,
// certifying a negative verdict.
struct WitnessEvidence {
  Perm a;
};

// A named constructive reason for a positive verdict.
struct ShortcutEvidence {
  std::string name;
};

using Evidence = std::variant<TransversalEvidence, WitnessEvidence, ShortcutEvidence>;

struct SylowStep {
  GroupPtr q, n, p;
};
struct QuotientStep {
  GroupPtr n;
};
struct DiamondStep {
  GroupPtr k;
};
struct SplitStep {
  GroupPtr k;
};
struct ShortcutStep {
  std::string name;
};
using ReductionStep = std::variant<SylowStep, QuotientStep, DiamondStep, SplitStep, ShortcutStep>;

std::string step_to_string(const ReductionStep& step);

struct Verdict {
  bool is_perfect_code = false;
  Evidence evidence;
  std::vector<ReductionStep> trace;
};

// --- decision procedures ----------------------------------------------------

// Reference decision procedure: scans all a in G in canonical order and
// tests the pointwise criterion (a^2 in H and odd |H|/|H cap H^a| imply an
// involution in aH). The first failing a becomes the witness.
Verdict check_elementwise(const Subgroup& h);

// Same contract through the double-coset form of the criterion
// (HaH = Ha^{-1}H replaces a^2 in H); boolean-identical by the equivalence
// theorem but implemented independently.
Verdict check_double_coset(const Subgroup& h);

enum class SearchStatus { Found, Nonexistent, Exhausted };

struct TransversalSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Perm> transversal;  // valid iff status == Found
  long nodes = 0;
};

inline constexpr long kDefaultSearchBudget = 1'000'000;

// Backtracking search for an inverse-closed left transversal. The H-coset is
// normalized to representative e; choosing b for a coset forces b^-1 on the
// coset b^-1 H; cosets are processed fewest-remaining-candidates first with
// canonical tie-breaks. Exhausted is reported distinctly from nonexistence.
TransversalSearchResult find_inverse_closed_transversal(const Subgroup& h,
                                                        long budget = kDefaultSearchBudget);

bool validate_transversal(const FiniteGroup& g, const FiniteGroup& h,
                          const std::vector<Perm>& transversal);

bool validate_witness(const FiniteGroup& g, const FiniteGroup& h, const Perm& a);

// Sylow reduction: Q = sylow2(H), N = N_G(Q), P = sylow2(N); decides Q
// inside P by the local-complement criterion and transfers the verdict.
Verdict check_via_sylow2(const Subgroup& h);

// Local-complement criterion for a 2-subgroup H: for each a in N_G(H) \ H
// with a^2 in H there must be an involution in aH.
Verdict check_2group_local(const Subgroup& h);

// Nontrivial cyclic 2-subgroup: perfect code iff no cyclic or generalized
// quaternion overgroup of index 2 over H exists.
Verdict check_cyclic_2subgroup(const Subgroup& h);

// Generalized quaternion subgroup: perfect code iff it is a maximal
// generalized quaternion subgroup.
Verdict check_quaternion_2subgroup(const Subgroup& h);

// Blanket positive verdict for every subgroup when the Sylow 2-subgroups of
// G are elementary abelian (or trivial); nullopt otherwise.
std::optional<Verdict> shortcut_elementary_abelian(GroupPtr g);

// For G with dihedral (or Klein) Sylow 2-subgroups and H a 2-subgroup: H is
// not a perfect code iff some cyclic 2-subgroup C has 1 < H < C.
Verdict check_dihedral_sylow_context(const Subgroup& h);

// Per-condition report for H = <x> x| <y> (|x| = 2^n, n >= 2, |y| = 2) and
// a in N_G(H) \ H with a^2 in H.
struct SemidirectConditionReport {
  bool a2_in_cyclic_part = false;  // a^2 in <x>
  bool cond_cyclic = false;        // if <x,a> cyclic: H dihedral and a^y = a^-1
  bool cond_direct_quaternion = false;   // if H = C x C2 and <x,a> quaternion: [a,y] = a^2
  bool cond_dihedral_quaternion = false; // if H dihedral and <x,a> quaternion: [a,y] in <x^2>
  bool predicted_complement = false;
  bool direct_complement = false;  // involution search in aH
};

SemidirectConditionReport evaluate_semidirect_conditions(const Subgroup& h, const Perm& x,
                                                         const Perm& y, const Perm& a);

// Diamond lift: given an inverse-closed transversal L of H cap K in K (with
// HK a group), L is also an inverse-closed transversal of H in HK; returns L
// after revalidation, along with HK.
struct DiamondLiftResult {
  GroupPtr hk;
  std::vector<Perm> transversal;
};
DiamondLiftResult diamond_lift(const Subgroup& h, const Subgroup& k,
                               const std::vector<Perm>& transversal);

// Asserts the converse biconditional under |H|_2 = |H cap K|_2: returns true
// iff the two checks agree (they must).
bool diamond_converse_check(const Subgroup& h, const Subgroup& k);

// Split extension reduction: K normal in G, K <= M, with a recorded
// complement of K; decides via (G/K, M/K) and transfers the verdict.
Verdict split_reduction(GroupPtr g, const Subgroup& m, const Subgroup& k,
                        const Subgroup& complement);

enum class LiftStatus { PerfectCode, NotPerfectCode, Inconclusive };

// One-directional lifting along a normal subgroup N <= H: positive when both
// N <= G and H/N <= G/N are perfect codes; definite negative when H/N fails
// in the quotient (necessity); inconclusive otherwise.
LiftStatus lift_through_normal(GroupPtr g, const Subgroup& n, const Subgroup& h);

// Orchestrated pipeline: elementary-abelian shortcut, Sylow-2 reduction,
// 2-group engine (cyclic / quaternion / dihedral-context shortcuts, else the
// local-complement criterion). Boolean-equal to check_elementwise; negative
// verdicts always carry the canonically first criterion witness.
Verdict auto_check(const Subgroup& h);

}  // namespace pcode
