#include "pcode/perfect_code.hpp"

#include <algorithm>
#include <unordered_set>

#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/lattice.hpp"

namespace pcode {

std::string step_to_string(const ReductionStep& step) {
  if (const auto* s = std::get_if<SylowStep>(&step)) {
    return "sylow2(|Q|=" + std::to_string(s->q->order()) +
           ",|N|=" + std::to_string(s->n->order()) + ",|P|=" + std::to_string(s->p->order()) +
           ")";
  }
  if (const auto* s = std::get_if<QuotientStep>(&step)) {
    return "quotient(|N|=" + std::to_string(s->n->order()) + ")";
  }
  if (const auto* s = std::get_if<DiamondStep>(&step)) {
    return "diamond(|K|=" + std::to_string(s->k->order()) + ")";
  }
  if (const auto* s = std::get_if<SplitStep>(&step)) {
    return "split(|K|=" + std::to_string(s->k->order()) + ")";
  }
  return "shortcut(" + std::get<ShortcutStep>(step).name + ")";
}

namespace {

// |H cap H^a|: x lies in H^a = a^-1 H a iff a x a^-1 lies in H.
long intersection_with_conjugate(const FiniteGroup& h, const Perm& a) {
  Perm ainv = a.inverse();
  long count = 0;
  for (const Perm& x : h.elements()) {
    if (h.contains(a * x * ainv)) ++count;
  }
  return count;
}

bool coset_has_involution(const FiniteGroup& h, const Perm& a) {
  for (const Perm& x : h.elements()) {
    Perm b = a * x;
    if ((b * b).is_identity()) return true;
  }
  return false;
}

// Is a a criterion witness? (a^2 in H, odd |H|/|H cap H^a|, no involution in
// aH). Skips the trivial passes cheaply.
bool fails_pointwise_criterion(const FiniteGroup& h, const Perm& a) {
  if (h.contains(a)) return false;  // e lies in aH = H
  Perm a2 = a * a;
  if (!h.contains(a2)) return false;
  if (a2.is_identity()) return false;  // a itself is the involution in aH
  long inter = intersection_with_conjugate(h, a);
  if ((h.order() / inter) % 2 == 0) return false;
  return !coset_has_involution(h, a);
}

// Canonically first criterion witness; exists whenever H is not a perfect
// code of G.
Perm first_failing_witness(const Subgroup& h) {
  for (const Perm& a : h.ambient->elements()) {
    if (fails_pointwise_criterion(*h.group, a)) return a;
  }
  throw ConsistencyError("negative verdict without a criterion witness");
}

Verdict negative_verdict(const Subgroup& h, std::vector<ReductionStep> trace) {
  Verdict v;
  v.is_perfect_code = false;
  v.evidence = WitnessEvidence{first_failing_witness(h)};
  v.trace = std::move(trace);
  return v;
}

Verdict positive_verdict(const std::string& shortcut, std::vector<ReductionStep> trace) {
  Verdict v;
  v.is_perfect_code = true;
  v.evidence = ShortcutEvidence{shortcut};
  v.trace = std::move(trace);
  return v;
}

void require_two_group(const FiniteGroup& g, const char* who) {
  long n = g.order();
  if ((n & (n - 1)) != 0) throw NotTwoGroup(std::string(who) + " requires a 2-group");
}

}  // namespace

Verdict check_elementwise(const Subgroup& h) {
  for (const Perm& a : h.ambient->elements()) {
    if (fails_pointwise_criterion(*h.group, a)) {
      Verdict v;
      v.is_perfect_code = false;
      v.evidence = WitnessEvidence{a};
      return v;
    }
  }
  return positive_verdict("criterion-c", {});
}

Verdict check_double_coset(const Subgroup& h) {
  const FiniteGroup& sub = *h.group;
  for (const Perm& a : h.ambient->elements()) {
    if (sub.contains(a)) continue;
    // HaH = Ha^-1H iff a^-1 in HaH iff some h with a h a in H.
    bool symmetric = false;
    for (const Perm& x : sub.elements()) {
      if (sub.contains(a * x * a)) {
        symmetric = true;
        break;
      }
    }
    if (!symmetric) continue;
    long inter = intersection_with_conjugate(sub, a);
    if ((sub.order() / inter) % 2 == 0) continue;
    if (!coset_has_involution(sub, a)) {
      Verdict v;
      v.is_perfect_code = false;
      v.evidence = WitnessEvidence{a};
      return v;
    }
  }
  return positive_verdict("criterion-d", {});
}

bool validate_transversal(const FiniteGroup& g, const FiniteGroup& h,
                          const std::vector<Perm>& transversal) {
  if (static_cast<long>(transversal.size()) != g.order() / h.order()) return false;
  std::unordered_set<Perm, PermHash> set(transversal.begin(), transversal.end());
  if (set.size() != transversal.size()) return false;
  for (const Perm& t : transversal) {
    if (!g.contains(t)) return false;
    if (!set.count(t.inverse())) return false;
  }
  // Distinct left cosets covering G.
  std::vector<bool> covered(g.order(), false);
  for (const Perm& t : transversal) {
    for (const Perm& x : h.elements()) {
      long idx = g.index_of(t * x);
      if (idx < 0 || covered[idx]) return false;
      covered[idx] = true;
    }
  }
  return true;
}

bool validate_witness(const FiniteGroup& g, const FiniteGroup& h, const Perm& a) {
  if (!g.contains(a)) return false;
  if (!h.contains(a * a)) return false;
  long inter = intersection_with_conjugate(h, a);
  if ((h.order() / inter) % 2 == 0) return false;
  return !coset_has_involution(h, a);
}

TransversalSearchResult find_inverse_closed_transversal(const Subgroup& h, long budget) {
  const FiniteGroup& g = *h.ambient;
  const FiniteGroup& sub = *h.group;
  CosetDecomposition dec = left_cosets(h);
  const std::size_t m = dec.cosets.size();

  // coset index of each ambient element
  std::vector<int> coset_of(g.order(), -1);
  for (std::size_t c = 0; c < m; ++c) {
    for (const Perm& x : dec.cosets[c].members) coset_of[g.index_of(x)] = static_cast<int>(c);
  }
  std::size_t h_coset = static_cast<std::size_t>(coset_of[g.index_of(g.identity())]);

  std::vector<std::optional<Perm>> rep(m);
  rep[h_coset] = g.identity();
  std::size_t assigned = 1;
  long nodes = 0;
  bool exhausted = false;

  // Viable candidates of an unassigned coset under the current assignment.
  auto viable = [&](std::size_t c) {
    std::vector<Perm> out;
    for (const Perm& b : dec.cosets[c].members) {
      Perm binv = b.inverse();
      std::size_t partner = static_cast<std::size_t>(coset_of[g.index_of(binv)]);
      if (partner == c) {
        if (binv == b) out.push_back(b);  // b^2 = e
      } else if (!rep[partner].has_value()) {
        out.push_back(b);
      }
    }
    return out;
  };

  std::function<bool()> dfs = [&]() -> bool {
    if (assigned == m) return true;
    if (nodes >= budget) {
      exhausted = true;
      return false;
    }
    // fewest remaining candidates first, canonical tie-break
    std::size_t best = m;
    std::vector<Perm> best_cands;
    for (std::size_t c = 0; c < m; ++c) {
      if (rep[c].has_value()) continue;
      std::vector<Perm> cands = viable(c);
      if (best == m || cands.size() < best_cands.size()) {
        best = c;
        best_cands = std::move(cands);
        if (best_cands.empty()) break;
      }
    }
    if (best_cands.empty()) return false;
    for (const Perm& b : best_cands) {
      ++nodes;
      if (nodes > budget) {
        exhausted = true;
        return false;
      }
      Perm binv = b.inverse();
      std::size_t partner = static_cast<std::size_t>(coset_of[g.index_of(binv)]);
      rep[best] = b;
      ++assigned;
      bool self_paired = partner == best;
      if (!self_paired) {
        rep[partner] = binv;
        ++assigned;
      }
      if (dfs()) return true;
      rep[best].reset();
      --assigned;
      if (!self_paired) {
        rep[partner].reset();
        --assigned;
      }
      if (exhausted) return false;
    }
    return false;
  };

  TransversalSearchResult result;
  bool found = dfs();
  result.nodes = nodes;
  if (found) {
    result.status = SearchStatus::Found;
    for (std::size_t c = 0; c < m; ++c) result.transversal.push_back(*rep[c]);
    std::sort(result.transversal.begin(), result.transversal.end());
    if (!validate_transversal(g, sub, result.transversal)) {
      throw ConsistencyError("search produced an invalid transversal");
    }
  } else if (exhausted) {
    result.status = SearchStatus::Exhausted;
  } else {
    result.status = SearchStatus::Nonexistent;
  }
  return result;
}

Verdict check_2group_local(const Subgroup& h) {
  require_two_group(*h.group, "check_2group_local");
  Subgroup norm = normalizer(h);
  for (const Perm& a : norm.group->elements()) {
    if (h.group->contains(a)) continue;
    if (!h.group->contains(a * a)) continue;
    if (!coset_has_involution(*h.group, a)) {
      Verdict v;
      v.is_perfect_code = false;
      v.evidence = WitnessEvidence{a};
      return v;
    }
  }
  return positive_verdict("local-complement", {});
}

Verdict check_via_sylow2(const Subgroup& h) {
  Subgroup q_in_h = sylow2(h.group);
  GroupPtr q = q_in_h.group;
  if (q->order() == 1) {
    return positive_verdict("odd-order", {ShortcutStep{"odd-order"}});
  }
  Subgroup q_in_g = make_subgroup(h.ambient, q);
  Subgroup n = normalizer(q_in_g);
  GroupPtr p = n.group->sylow2_group();
  if (!is_subset_group(*q, *p)) {
    throw ConsistencyError("Q normal in its normalizer must lie in every Sylow 2-subgroup");
  }
  std::vector<ReductionStep> trace = {SylowStep{q, n.group, p}};
  Verdict local = check_2group_local(Subgroup{p, q});
  if (local.is_perfect_code) {
    return positive_verdict("sylow2-local", std::move(trace));
  }
  return negative_verdict(h, std::move(trace));
}

Verdict check_cyclic_2subgroup(const Subgroup& h) {
  long n = h.group->order();
  IsoType t = classify_2group(*h.group);
  if (t.kind != IsoType::Kind::Cyclic || n < 2) {
    throw NotCyclicTwoGroup("check_cyclic_2subgroup requires a nontrivial cyclic 2-group");
  }
  auto k = exists_overgroup_of_type(
      h, {IsoType::Kind::Cyclic, IsoType::Kind::GeneralizedQuaternion});
  if (!k) return positive_verdict("cyclic-no-overgroup", {});
  return negative_verdict(h, {ShortcutStep{"cyclic-overgroup-" +
                                           classify_2group(*k->group).to_string()}});
}

Verdict check_quaternion_2subgroup(const Subgroup& h) {
  IsoType t = classify_2group(*h.group);
  if (t.kind != IsoType::Kind::GeneralizedQuaternion) {
    throw NotQuaternion("check_quaternion_2subgroup requires a generalized quaternion group");
  }
  auto k = exists_overgroup_of_type(h, {IsoType::Kind::GeneralizedQuaternion});
  if (!k) return positive_verdict("maximal-quaternion", {});
  return negative_verdict(h, {ShortcutStep{"quaternion-overgroup"}});
}

std::optional<Verdict> shortcut_elementary_abelian(GroupPtr g) {
  GroupPtr p = g->sylow2_group();
  IsoType t = classify_2group(*p);
  bool applies = p->order() == 1 || t.kind == IsoType::Kind::ElementaryAbelian ||
                 (t.kind == IsoType::Kind::Cyclic && t.n <= 2);
  if (!applies) return std::nullopt;
  return positive_verdict("elementary-abelian-sylow", {ShortcutStep{"elementary-abelian-sylow"}});
}

Verdict check_dihedral_sylow_context(const Subgroup& h) {
  GroupPtr sy = h.ambient->sylow2_group();
  IsoType st = classify_2group(*sy);
  bool dihedral_ambient =
      st.kind == IsoType::Kind::Dihedral ||
      (st.kind == IsoType::Kind::ElementaryAbelian && st.p == 2 && st.k == 2);
  if (!dihedral_ambient) {
    throw PreconditionViolated("ambient group must have dihedral Sylow 2-subgroups");
  }
  require_two_group(*h.group, "check_dihedral_sylow_context");
  if (h.group->order() == 1) return positive_verdict("trivial-subgroup", {});
  IsoType t = classify_2group(*h.group);
  if (t.kind != IsoType::Kind::Cyclic) {
    return positive_verdict("dihedral-context-noncyclic", {});
  }
  auto c = exists_overgroup_of_type(h, {IsoType::Kind::Cyclic});
  if (!c) return positive_verdict("dihedral-context-no-cyclic-overgroup", {});
  return negative_verdict(h, {ShortcutStep{"cyclic-overgroup"}});
}

SemidirectConditionReport evaluate_semidirect_conditions(const Subgroup& h, const Perm& x,
                                                         const Perm& y, const Perm& a) {
  const FiniteGroup& sub = *h.group;
  long xo = element_order(x);
  if (!sub.contains(x) || !sub.contains(y) || element_order(y) != 2 || xo < 4 ||
      (xo & (xo - 1)) != 0 || sub.order() != 2 * xo) {
    throw BadDecomposition("H must decompose as <x> x| <y> with |x| = 2^n >= 4, |y| = 2");
  }
  GroupPtr cyc = generate({x});
  if (cyc->contains(y)) throw BadDecomposition("y must lie outside <x>");
  if (sub.contains(a)) throw BadDecomposition("a must lie outside H");
  if (!h.ambient->contains(a)) throw ElementOutsideGroup("a outside the ambient group");
  if (!sub.contains(a * a)) throw BadDecomposition("a^2 must lie in H");
  Perm ainv = a.inverse();
  for (const Perm& s : sub.generators()) {
    if (!sub.contains(ainv * s * a)) throw BadDecomposition("a must normalize H");
  }

  SemidirectConditionReport r;
  Perm a2 = a * a;
  r.a2_in_cyclic_part = cyc->contains(a2);

  bool h_dihedral = conjugate(x, y) == x.inverse();
  bool h_direct = conjugate(x, y) == x;

  r.cond_cyclic = true;
  r.cond_direct_quaternion = true;
  r.cond_dihedral_quaternion = true;
  if (r.a2_in_cyclic_part) {
    std::vector<Perm> qgens = {x, a};
    GroupPtr qa = generate(qgens);
    IsoType qt = classify_2group(*qa);
    if (qt.kind == IsoType::Kind::Cyclic) {
      r.cond_cyclic = h_dihedral && conjugate(a, y) == ainv;
    } else if (qt.kind == IsoType::Kind::GeneralizedQuaternion) {
      Perm comm = commutator(a, y);
      if (h_direct) r.cond_direct_quaternion = comm == a2;
      if (h_dihedral) {
        GroupPtr x2 = generate({x * x});
        r.cond_dihedral_quaternion = x2->contains(comm);
      }
    }
  }
  r.predicted_complement = r.a2_in_cyclic_part && r.cond_cyclic &&
                           r.cond_direct_quaternion && r.cond_dihedral_quaternion;
  r.direct_complement = coset_has_involution(sub, a);
  return r;
}

DiamondLiftResult diamond_lift(const Subgroup& h, const Subgroup& k,
                               const std::vector<Perm>& transversal) {
  auto [hk_elems, closed] = product_set(*h.group, *k.group);
  if (!closed) throw ProductNotGroup("HK is not a group");
  GroupPtr hk = group_from_sorted_elements(std::move(hk_elems));
  Subgroup inter = intersection(k.group, *h.group, *k.group);
  if (!validate_transversal(*k.group, *inter.group, transversal)) {
    throw InvalidTransversal("input is not an inverse-closed transversal of H cap K in K");
  }
  if (!validate_transversal(*hk, *h.group, transversal)) {
    throw InvalidTransversal("lifted transversal failed revalidation");
  }
  return DiamondLiftResult{hk, transversal};
}

bool diamond_converse_check(const Subgroup& h, const Subgroup& k) {
  auto [hk_elems, closed] = product_set(*h.group, *k.group);
  if (!closed) throw PreconditionViolated("HK is not a group");
  GroupPtr hk = group_from_sorted_elements(std::move(hk_elems));
  Subgroup inter = intersection(k.group, *h.group, *k.group);
  if (two_part(h.group->order()) != two_part(inter.group->order())) {
    throw PreconditionViolated("requires |H|_2 = |H cap K|_2");
  }
  bool inner = auto_check(inter).is_perfect_code;
  bool outer = auto_check(Subgroup{hk, h.group}).is_perfect_code;
  return inner == outer;
}

Verdict split_reduction(GroupPtr g, const Subgroup& m, const Subgroup& k,
                        const Subgroup& complement) {
  if (!is_normal(*g, *k.group)) throw NotNormal("split_reduction requires K normal in G");
  if (!is_subset_group(*k.group, *m.group)) {
    throw PreconditionViolated("split_reduction requires K <= M");
  }
  Subgroup ck = intersection(g, *complement.group, *k.group);
  if (ck.group->order() != 1 ||
      complement.group->order() * k.group->order() != g->order()) {
    throw NotComplement("recorded complement does not split G over K");
  }
  Quotient qt = quotient(g, k);
  Subgroup mbar = qt.push(m);
  Verdict inner = auto_check(mbar);
  std::vector<ReductionStep> trace = {SplitStep{k.group}};
  for (ReductionStep& s : inner.trace) trace.push_back(std::move(s));
  if (inner.is_perfect_code) return positive_verdict("split-reduction", std::move(trace));
  return negative_verdict(Subgroup{g, m.group}, std::move(trace));
}

LiftStatus lift_through_normal(GroupPtr g, const Subgroup& n, const Subgroup& h) {
  if (!is_normal(*g, *n.group)) throw NotNormal("lift_through_normal requires N normal in G");
  if (!is_subset_group(*n.group, *h.group)) {
    throw PreconditionViolated("lift_through_normal requires N <= H");
  }
  Quotient qt = quotient(g, n);
  Subgroup hbar = qt.push(h);
  bool quotient_ok = auto_check(hbar).is_perfect_code;
  if (!quotient_ok) return LiftStatus::NotPerfectCode;  // necessity in the quotient
  bool base_ok = auto_check(Subgroup{g, n.group}).is_perfect_code;
  if (base_ok) return LiftStatus::PerfectCode;
  return LiftStatus::Inconclusive;
}

Verdict auto_check(const Subgroup& h) {
  GroupPtr g = h.ambient;
  if (auto blanket = shortcut_elementary_abelian(g)) return *blanket;

  Subgroup q_in_h = sylow2(h.group);
  GroupPtr q = q_in_h.group;
  if (q->order() == 1) {
    return positive_verdict("odd-order", {ShortcutStep{"odd-order"}});
  }
  Subgroup n = normalizer(g, *q);
  GroupPtr p = n.group->sylow2_group();
  std::vector<ReductionStep> trace = {SylowStep{q, n.group, p}};
  Subgroup local{p, q};

  Verdict inner;
  IsoType qt = classify_2group(*q);
  IsoType pt = classify_2group(*p);
  bool p_dihedral = pt.kind == IsoType::Kind::Dihedral ||
                    (pt.kind == IsoType::Kind::ElementaryAbelian && pt.p == 2 && pt.k == 2);
  if (qt.kind == IsoType::Kind::Cyclic && q->order() >= 2) {
    trace.push_back(ShortcutStep{"cyclic-criterion"});
    inner = check_cyclic_2subgroup(local);
  } else if (qt.kind == IsoType::Kind::GeneralizedQuaternion) {
    trace.push_back(ShortcutStep{"quaternion-criterion"});
    inner = check_quaternion_2subgroup(local);
  } else if (p_dihedral) {
    trace.push_back(ShortcutStep{"dihedral-sylow-context"});
    inner = check_dihedral_sylow_context(local);
  } else {
    trace.push_back(ShortcutStep{"local-complement"});
    inner = check_2group_local(local);
  }
  if (inner.is_perfect_code) {
    return positive_verdict(std::get<ShortcutEvidence>(inner.evidence).name, std::move(trace));
  }
  return negative_verdict(h, std::move(trace));
}

}  // namespace pcode
