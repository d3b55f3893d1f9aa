#include "pcode/experiments.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pcode/cayley.hpp"
#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/lattice.hpp"
#include "pcode/linear_groups.hpp"
#include "pcode/parallel.hpp"
#include "pcode/perfect_code.hpp"
#include "pcode/small_groups.hpp"

namespace pcode {

namespace {

void check(ExperimentReport& report, const std::string& name, bool pass,
           const std::string& detail = "") {
  report.checks.push_back({name, pass, detail});
}

// The classification of maximal subgroup perfect codes of PSL2(q): the only
// failing rows are (q = -1 mod 8, q > 7, D_{q-1}) and (q = 1 mod 8, q > 9,
// D_{q+1}).
bool psl2_row_expected_pc(long q, const MaximalTag& tag) {
  if (q % 2 == 0) return true;
  if (tag.family == MaximalTag::Family::DMinus && q % 8 == 7 && q > 7) return false;
  if (tag.family == MaximalTag::Family::DPlus && q % 8 == 1 && q > 9) return false;
  return true;
}

ExperimentReport psl_classification(int jobs) {
  ExperimentReport report{"psl-classification", {}};
  const std::vector<long> qs = {5, 7, 8, 9, 11, 13, 17, 19, 23, 25, 27, 29};
  struct Row {
    long q;
    MaximalTag tag;
  };
  std::vector<Row> rows;
  for (long q : qs) {
    for (const MaximalTag& tag : psl2_maximal_tags(q)) rows.push_back({q, tag});
  }
  std::vector<ExperimentCheck> results(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const Row& row = rows[i];
    Subgroup m = psl2_maximal(row.q, row.tag);
    bool expected = psl2_row_expected_pc(row.q, row.tag);
    Verdict v = auto_check(m);
    bool order_ok = m.group->order() == psl2_maximal_order(row.q, row.tag);
    results[i] = {"psl2:" + std::to_string(row.q) + " " + row.tag.to_string(),
                  v.is_perfect_code == expected && order_ok,
                  std::string(v.is_perfect_code ? "perfect code" : "not a perfect code") +
                      ", expected " + (expected ? "yes" : "no") + ", |M|=" +
                      std::to_string(m.group->order())};
  });
  report.checks = std::move(results);
  // The exception set must be exactly (17, d+1), (23, d-1), (25, d+1).
  std::vector<std::string> exceptions;
  for (const Row& row : rows) {
    if (!psl2_row_expected_pc(row.q, row.tag)) {
      exceptions.push_back(std::to_string(row.q) + " " + row.tag.to_string());
    }
  }
  check(report, "exceptions are exactly {(17,d+1), (23,d-1), (25,d+1)}",
        exceptions == std::vector<std::string>{"17 d+1", "23 d-1", "25 d+1"});
  return report;
}

ExperimentReport pgl_all(int jobs) {
  ExperimentReport report{"pgl-all", {}};
  const std::vector<long> qs = {5, 7, 9, 11, 13};
  struct Row {
    long q;
    MaximalTag tag;
  };
  std::vector<Row> rows;
  for (long q : qs) {
    for (const MaximalTag& tag : pgl2_maximal_tags(q)) rows.push_back({q, tag});
  }
  std::vector<ExperimentCheck> results(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const Row& row = rows[i];
    Subgroup m = pgl2_maximal(row.q, row.tag);
    Verdict v = auto_check(m);
    results[i] = {"pgl2:" + std::to_string(row.q) + " " + row.tag.to_string(),
                  v.is_perfect_code,
                  "|M|=" + std::to_string(m.group->order())};
  });
  report.checks = std::move(results);
  return report;
}

// Point stabilizer of the primitive action on Sylow-r subgroups: the
// normalizer of the canonically least cyclic subgroup of order r.
Subgroup sylow_normalizer_stabilizer(GroupPtr g, long r) {
  for (const Perm& x : g->elements()) {
    if (element_order(x) == r) return normalizer(g, *generate({x}));
  }
  throw SearchFailed("no element of order " + std::to_string(r));
}

ExperimentReport almost_simple(int) {
  ExperimentReport report{"almost-simple", {}};

  // G = M10, M = AGL_1(5): not a perfect code.
  AlmostSimple g1 = m10();
  Subgroup m1 = sylow_normalizer_stabilizer(g1.group, 5);
  check(report, "m10 candidate is AGL1(5)",
        m1.group->order() == 20 && is_isomorphic(*m1.group, *agl1(5)));
  check(report, "m10 candidate is maximal", is_maximal_in(m1));
  Subgroup m1_in_t = intersection(g1.socle.group, *m1.group, *g1.socle.group);
  check(report, "m10 M cap T = D10",
        m1_in_t.group->order() == 10 && is_isomorphic(*m1_in_t.group, *dihedral_group(10)));
  check(report, "m10 M is not a perfect code", !auto_check(m1).is_perfect_code);

  // G = PSL2(25).<delta phi>, M cap T = D26: not a perfect code.
  AlmostSimple g2 = extension_t_delta_phi(25, 1);
  Subgroup m2 = sylow_normalizer_stabilizer(g2.group, 13);
  Subgroup m2_in_t = intersection(g2.socle.group, *m2.group, *g2.socle.group);
  check(report, "ext(25,1) M has order 52", m2.group->order() == 52,
        "|M|=" + std::to_string(m2.group->order()));
  check(report, "ext(25,1) M is maximal", is_maximal_in(m2));
  check(report, "ext(25,1) M cap T = D26",
        m2_in_t.group->order() == 26 && is_isomorphic(*m2_in_t.group, *dihedral_group(26)));
  check(report, "ext(25,1) M is not a perfect code", !auto_check(m2).is_perfect_code);
  GroupPtr q2 = sylow2(m2.group).group;
  check(report, "ext(25,1) Sylow2(M) = C4",
        classify_2group(*q2) == IsoType::cyclic(4));

  // G = PSL2(25) x| <phi>, same inner subgroup: perfect code.
  GroupPtr g3 = psigmal2(25);
  Subgroup m3 = sylow_normalizer_stabilizer(g3, 13);
  Subgroup m3_in_t = intersection(psl2(25), *m3.group, *psl2(25));
  check(report, "psigmal2(25) M has order 52", m3.group->order() == 52);
  check(report, "psigmal2(25) M cap T = D26",
        m3_in_t.group->order() == 26 && is_isomorphic(*m3_in_t.group, *dihedral_group(26)));
  check(report, "psigmal2(25) M is a perfect code", auto_check(m3).is_perfect_code);
  return report;
}

ExperimentReport odd_index_corollary(int jobs) {
  ExperimentReport report{"odd-index-corollary", {}};
  struct Row {
    long q;
    MaximalTag tag;
  };
  std::vector<Row> rows;
  for (long q : {17L, 23L}) {
    for (const MaximalTag& tag : psl2_maximal_tags(q)) rows.push_back({q, tag});
  }
  std::vector<std::vector<ExperimentCheck>> results(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const Row& row = rows[i];
    std::string name = "psl2:" + std::to_string(row.q) + " " + row.tag.to_string();
    Subgroup m = psl2_maximal(row.q, row.tag);
    bool expected = psl2_row_expected_pc(row.q, row.tag);
    bool got = auto_check(m).is_perfect_code;
    results[i].push_back({name + " verdict", got == expected,
                          got ? "perfect code" : "not a perfect code"});
    // |G/T| odd instance with T = G: the converse lemma's biconditional.
    results[i].push_back(
        {name + " diamond converse", diamond_converse_check(m, whole_group(m.ambient)), ""});
  });
  for (auto& rs : results) {
    for (ExperimentCheck& c : rs) report.checks.push_back(std::move(c));
  }
  return report;
}

ExperimentReport agl2_in_sym(int) {
  ExperimentReport report{"agl2-in-sym", {}};
  GroupPtr s9 = symmetric_group(9);
  Subgroup h = make_subgroup(s9, agl2(3));
  check(report, "AGL2(3) has order 432", h.group->order() == 432);
  GroupPtr q = sylow2(h.group).group;
  check(report, "Sylow2(AGL2(3)) has order 16", q->order() == 16,
        classify_2group(*q).to_string());
  Verdict v = check_via_sylow2(h);
  std::string trace;
  for (const ReductionStep& s : v.trace) trace += step_to_string(s) + " ";
  check(report, "AGL2(3) is a perfect code of Sym(9)", v.is_perfect_code, trace);
  return report;
}

ExperimentReport normalizer_square(int) {
  ExperimentReport report{"normalizer-square", {}};
  const long q = 3;
  const long n = two_part(q * q - 1);       // 8
  const long npr = (q * q - 1) / n;         // odd part
  const long omega = q * q - 1;
  // x: zeta^i -> zeta^{i+n'}, y: zeta^i -> zeta^{qi} on the multiplicative
  // group of GF(q^2), identified with indices mod q^2-1.
  std::vector<uint8_t> xi(omega), yi(omega);
  for (long i = 0; i < omega; ++i) {
    xi[i] = static_cast<uint8_t>((i + npr) % omega);
    yi[i] = static_cast<uint8_t>((q * i) % omega);
  }
  Perm x(std::move(xi)), y(std::move(yi));
  check(report, "|x| = " + std::to_string(n), element_order(x) == n);
  check(report, "|y| = 2", element_order(y) == 2);
  check(report, "x^y = x^q", conjugate(x, y) == perm_power(x, q));

  GroupPtr sym = symmetric_group(static_cast<int>(omega));
  GroupPtr cyc = generate({x});
  GroupPtr qgrp = generate({x, y});
  check(report, "|<x,y>| = 2n", qgrp->order() == 2 * n);
  Subgroup norm = normalizer(sym, *cyc);
  check(report, "|N_Sym(<x>)| = 32", norm.group->order() == 32,
        std::to_string(norm.group->order()));
  long qualifying = 0;
  bool all_in_x = true;
  for (const Perm& a : norm.group->elements()) {
    Perm a2 = a * a;
    if (!qgrp->contains(a2)) continue;
    ++qualifying;
    if (!cyc->contains(a2)) all_in_x = false;
  }
  check(report, "a^2 in <x,y> implies a^2 in <x>", all_in_x,
        std::to_string(qualifying) + " qualifying elements");
  check(report, "the square condition is not vacuous", qualifying > 0);
  return report;
}

ExperimentReport nonsplit(int) {
  ExperimentReport report{"nonsplit", {}};
  for (long q : {9L, 25L}) {
    AlmostSimple g = extension_t_delta_phi(q, 1);
    check(report, "ext(" + std::to_string(q) + ",1) has order 2|T|",
          g.group->order() == 2 * g.socle.group->order());
    check(report, "ext(" + std::to_string(q) + ",1) is non-split over the socle",
          !is_split_index2(g.group, g.socle));
  }
  return report;
}

ExperimentReport pgl_normalizer(int jobs) {
  ExperimentReport report{"pgl-normalizer", {}};
  const std::vector<long> qs = {7, 11, 19, 23};
  std::vector<std::vector<ExperimentCheck>> results(qs.size());
  parallel_for(qs.size(), jobs, [&](std::size_t i) {
    long q = qs[i];
    std::string name = "pgl2:" + std::to_string(q);
    GroupPtr g = pgl2(q);
    Subgroup borel = pgl2_maximal(q, {MaximalTag::Family::Borel});
    GroupPtr qs2 = sylow2(borel.group).group;
    results[i].push_back({name + " Sylow2(Borel) = C2", classify_2group(*qs2) ==
                                                            IsoType::cyclic(2),
                          ""});
    Subgroup n = normalizer(g, *qs2);
    results[i].push_back({name + " |N_G(Q)| = 2(q-1)", n.group->order() == 2 * (q - 1),
                          std::to_string(n.group->order())});
    GroupPtr p = n.group->sylow2_group();
    results[i].push_back({name + " Sylow2(N) is the Klein group",
                          classify_2group(*p) == IsoType::elementary_abelian(2, 2),
                          classify_2group(*p).to_string()});
  });
  for (auto& rs : results) {
    for (ExperimentCheck& c : rs) report.checks.push_back(std::move(c));
  }
  return report;
}

// All C4 subgroups H with H cap T = C2, i.e. cyclic groups generated by an
// order-4 element outside T whose square lies in T.
std::vector<Subgroup> c4_subgroups_meeting_socle(const AlmostSimple& g) {
  std::vector<Subgroup> out;
  for (const Perm& h : g.group->elements()) {
    if (g.socle.group->contains(h)) continue;
    if (element_order(h) != 4) continue;
    Perm h2 = h * h;
    if (!g.socle.group->contains(h2)) continue;
    Perm h3 = h2 * h;
    if (h3 < h) continue;  // dedupe: keep the least generator
    out.push_back(make_subgroup(g.group, generate({h})));
  }
  return out;
}

ExperimentReport c8q8(int jobs) {
  ExperimentReport report{"c8q8", {}};

  // In PSL2(25) x| <phi> no qualifying C4 has a C8 or Q8 overgroup.
  GroupPtr sigma = psigmal2(25);
  AlmostSimple sig{sigma, socle_subgroup(sigma, 25)};
  std::vector<Subgroup> hs1 = c4_subgroups_meeting_socle(sig);
  std::vector<char> found1(hs1.size(), 0);
  parallel_for(hs1.size(), jobs, [&](std::size_t i) {
    found1[i] = exists_overgroup_of_type(hs1[i], {IsoType::Kind::Cyclic,
                                                  IsoType::Kind::GeneralizedQuaternion})
                    .has_value()
                    ? 1
                    : 0;
  });
  bool none_found = std::none_of(found1.begin(), found1.end(), [](char c) { return c; });
  check(report, "psigmal2(25): no C8/Q8 overgroup for any qualifying C4", none_found,
        std::to_string(hs1.size()) + " subgroups scanned");
  check(report, "psigmal2(25): qualifying C4 subgroups exist", !hs1.empty());

  // In PSL2(25).<delta phi> every qualifying C4 lies in a Q8.
  AlmostSimple ext = extension_t_delta_phi(25, 1);
  std::vector<Subgroup> hs2 = c4_subgroups_meeting_socle(ext);
  std::vector<char> found2(hs2.size(), 0);
  parallel_for(hs2.size(), jobs, [&](std::size_t i) {
    found2[i] =
        exists_overgroup_of_type(hs2[i], {IsoType::Kind::GeneralizedQuaternion}).has_value()
            ? 1
            : 0;
  });
  bool all_found = std::all_of(found2.begin(), found2.end(), [](char c) { return c; });
  check(report, "ext(25,1): every qualifying C4 lies in a Q8", all_found,
        std::to_string(hs2.size()) + " subgroups scanned");
  check(report, "ext(25,1): qualifying C4 subgroups exist", !hs2.empty());
  return report;
}

ExperimentReport double_cover(int) {
  ExperimentReport report{"double-cover", {}};
  Subgroup s4 = psl2_maximal(7, {MaximalTag::Family::S4});
  Subgroup g = preimage_in_sl2(7, s4);
  check(report, "preimage of S4 has order 48", g.group->order() == 48);
  long involutions = 0;
  for (const Perm& x : g.group->elements()) {
    if (element_order(x) == 2) ++involutions;
  }
  check(report, "preimage of S4 has a unique involution", involutions == 1,
        std::to_string(involutions));

  // S3 inside the S4 row, canonically first.
  Subgroup s3;
  bool got_s3 = false;
  for (Subgroup& sub : all_subgroups(s4.group)) {
    if (sub.group->order() == 6 && is_isomorphic(*sub.group, *symmetric_group(3))) {
      s3 = Subgroup{psl2(7), sub.group};
      got_s3 = true;
      break;
    }
  }
  check(report, "S3 found inside the S4 row", got_s3);
  if (!got_s3) return report;
  Subgroup m_in_sl2 = preimage_in_sl2(7, s3);
  Subgroup m{g.group, m_in_sl2.group};
  check(report, "preimage of S3 has order 12", m.group->order() == 12);

  Subgroup core = normal_core(m);
  check(report, "core of M in G is the center of order 2",
        core.group->order() == 2 && is_normal(*g.group, *core.group));
  Quotient qt = quotient(g.group, core);
  check(report, "G/K = S4", is_isomorphic(*qt.group(), *symmetric_group(4)));
  Subgroup mbar = qt.push(m);
  check(report, "M/K = S3", is_isomorphic(*mbar.group, *symmetric_group(3)));
  check(report, "M/K is a perfect code of G/K", auto_check(mbar).is_perfect_code);
  check(report, "M is not a perfect code of G", !auto_check(m).is_perfect_code);

  // The refusal case for the split reduction: G has a unique involution, so
  // no subgroup of order 24 misses the center and no complement of K exists
  // to feed split_reduction with.
  bool complement_exists = false;
  for (const Subgroup& sub : all_subgroups(g.group)) {
    if (sub.group->order() != 24) continue;
    if (intersection(g.group, *sub.group, *core.group).group->order() == 1) {
      complement_exists = true;
      break;
    }
  }
  check(report, "G does not split over K", !complement_exists);
  return report;
}

ExperimentReport cm_c2_example(int) {
  ExperimentReport report{"cm-c2-example", {}};
  for (long m : {4L, 8L, 16L}) {
    std::string name = "C" + std::to_string(m) + " x C2";
    GroupPtr g = direct_product(cyclic_group(m), cyclic_group(2));
    Perm x = embed_left(cyclic_group(m)->generators()[0], 2);
    Perm y = embed_right(static_cast<int>(m), cyclic_group(2)->generators()[0]);
    Subgroup h = make_subgroup(g, {x});
    Subgroup k = make_subgroup(g, {x * y});
    auto [hk, closed] = product_set(*h.group, *k.group);
    check(report, name + ": HK = G", closed && static_cast<long>(hk.size()) == g->order());
    Subgroup inter = intersection(k.group, *h.group, *k.group);
    check(report, name + ": H cap K = C_{m/2}", inter.group->order() == m / 2);
    check(report, name + ": H is a perfect code of HK", auto_check(h).is_perfect_code);
    check(report, name + ": H cap K is not a perfect code of K",
          !auto_check(inter).is_perfect_code);
  }
  return report;
}

ExperimentReport wreath_s2(int jobs) {
  ExperimentReport report{"wreath-s2", {}};
  const std::vector<std::string> names = {"sym:4", "alt:5", "psl2:7"};
  const std::vector<GroupPtr> groups = {symmetric_group(4), alternating_group(5), psl2(7)};
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    GroupPtr g = groups[gi];
    WreathProduct w = wreath_symmetric(g, 2);
    std::vector<Subgroup> subs;
    for (Subgroup& h : all_subgroups(g)) {
      if (two_part(h.group->order()) <= 2) subs.push_back(std::move(h));
    }
    std::vector<char> ok(subs.size(), 0);
    parallel_for(subs.size(), jobs, [&](std::size_t i) {
      Subgroup hw = wreath_subgroup(w, subs[i].group);
      ok[i] = auto_check(hw).is_perfect_code ? 1 : 0;
    });
    bool all_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c; });
    check(report, names[gi] + ": H wr S2 is a perfect code of G wr S2 for all |H|_2 <= 2",
          all_ok, std::to_string(subs.size()) + " subgroups");
  }
  return report;
}

ExperimentReport primitive_types_small(int) {
  ExperimentReport report{"primitive-types-small", {}};

  // HA type: AGL2(3) acting on 9 points; the translation subgroup is a
  // regular normal subgroup and an inverse-closed transversal of the point
  // stabilizer GL2(3).
  {
    GroupPtr g = agl2(3);
    std::vector<Perm> stab_elems;
    for (const Perm& x : g->elements()) {
      if (x[0] == 0) stab_elems.push_back(x);
    }
    Subgroup m{g, group_from_sorted_elements(std::move(stab_elems))};
    check(report, "HA: point stabilizer is GL2(3)",
          m.group->order() == 48 && is_isomorphic(*m.group, *gl2(3)));
    // Translations: x(w) = w + t componentwise mod 3.
    std::vector<Perm> trans;
    for (const Perm& x : g->elements()) {
      long t = x[0];
      long tu = t / 3, tv = t % 3;
      bool is_translation = true;
      for (long u = 0; u < 3 && is_translation; ++u) {
        for (long v = 0; v < 3; ++v) {
          long w = x[u * 3 + v];
          if (w / 3 != (u + tu) % 3 || w % 3 != (v + tv) % 3) {
            is_translation = false;
            break;
          }
        }
      }
      if (is_translation) trans.push_back(x);
    }
    Subgroup n{g, group_from_sorted_elements(std::move(trans))};
    check(report, "HA: translation subgroup is regular normal",
          n.group->order() == 9 && is_normal(*g, *n.group));
    DiamondLiftResult lift = diamond_lift(m, n, n.group->elements());
    check(report, "HA: N lifts to a transversal of the stabilizer in AGL2(3)",
          lift.hk->order() == g->order() &&
              validate_transversal(*g, *m.group, lift.transversal));
    check(report, "HA: the stabilizer is a perfect code", auto_check(m).is_perfect_code);
  }

  // SD type: the diagonal A5 inside A5 x A5, with one factor as the
  // complement.
  {
    GroupPtr a5 = alternating_group(5);
    GroupPtr g = direct_product(a5, a5);
    std::vector<Perm> diag_gens;
    for (const Perm& x : a5->generators()) {
      diag_gens.push_back(embed_left(x, 5) * embed_right(5, x));
    }
    Subgroup m = make_subgroup(g, diag_gens);
    check(report, "SD: diagonal subgroup has order 60", m.group->order() == 60);
    std::vector<Perm> right_gens;
    for (const Perm& x : a5->generators()) right_gens.push_back(embed_right(5, x));
    Subgroup k = make_subgroup(g, right_gens);
    DiamondLiftResult lift = diamond_lift(m, k, k.group->elements());
    check(report, "SD: one factor lifts to a transversal of the diagonal",
          lift.hk->order() == g->order() &&
              validate_transversal(*g, *m.group, lift.transversal));
    check(report, "SD: the diagonal is a perfect code", auto_check(m).is_perfect_code);
  }
  return report;
}

ExperimentReport wreath_psl2(int jobs) {
  ExperimentReport report{"wreath-psl2", {}};
  for (long q : {5L, 7L}) {
    GroupPtr t = psl2(q);
    WreathProduct w = wreath_symmetric(t, 2);
    std::vector<MaximalTag> tags = psl2_maximal_tags(q);
    std::vector<std::vector<ExperimentCheck>> results(tags.size());
    parallel_for(tags.size(), jobs, [&](std::size_t i) {
      std::string name = "psl2:" + std::to_string(q) + " " + tags[i].to_string();
      Subgroup n = psl2_maximal(q, tags[i]);
      bool inner_pc = auto_check(n).is_perfect_code;
      results[i].push_back({name + " is a perfect code of T", inner_pc, ""});
      Subgroup nw = wreath_subgroup(w, n.group);
      results[i].push_back({name + " wr S2 is a perfect code of T wr S2",
                            auto_check(nw).is_perfect_code, ""});
    });
    for (auto& rs : results) {
      for (ExperimentCheck& c : rs) report.checks.push_back(std::move(c));
    }
  }
  return report;
}

const std::map<std::string, std::function<ExperimentReport(int)>>& experiment_table() {
  static const std::map<std::string, std::function<ExperimentReport(int)>> table = {
      {"psl-classification", psl_classification},
      {"pgl-all", pgl_all},
      {"almost-simple", almost_simple},
      {"odd-index-corollary", odd_index_corollary},
      {"agl2-in-sym", agl2_in_sym},
      {"normalizer-square", normalizer_square},
      {"nonsplit", nonsplit},
      {"pgl-normalizer", pgl_normalizer},
      {"c8q8", c8q8},
      {"double-cover", double_cover},
      {"cm-c2-example", cm_c2_example},
      {"wreath-s2", wreath_s2},
      {"primitive-types-small", primitive_types_small},
      {"wreath-psl2", wreath_psl2},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : experiment_table()) out.push_back(name);
    return out;
  }();
  return names;
}

ExperimentReport run_experiment(const std::string& name, int jobs) {
  auto it = experiment_table().find(name);
  if (it == experiment_table().end()) {
    throw BadTag("unknown experiment '" + name + "'");
  }
  return it->second(jobs);
}

}  // namespace pcode
