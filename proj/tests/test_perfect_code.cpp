#include <doctest.h>

#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/lattice.hpp"
#include "pcode/linear_groups.hpp"
#include "pcode/perfect_code.hpp"
#include "pcode/small_groups.hpp"

using namespace pcode;

namespace {

Subgroup c2_in_c4() {
  GroupPtr c4 = cyclic_group(4);
  Perm x = c4->generators()[0];
  return make_subgroup(c4, {x * x});
}

}  // namespace

TEST_CASE("check_elementwise basics") {
  SUBCASE("H = G is always a perfect code") {
    Verdict v = check_elementwise(whole_group(symmetric_group(4)));
    CHECK(v.is_perfect_code);
  }
  SUBCASE("(C4, C2) fails with the generator as witness") {
    Verdict v = check_elementwise(c2_in_c4());
    CHECK_FALSE(v.is_perfect_code);
    const auto& w = std::get<WitnessEvidence>(v.evidence);
    CHECK(element_order(w.a) == 4);
    CHECK(validate_witness(*cyclic_group(4), *c2_in_c4().group, w.a));
    // canonical first failure
    for (const Perm& a : cyclic_group(4)->elements()) {
      if (a < w.a) CHECK_FALSE(validate_witness(*cyclic_group(4), *c2_in_c4().group, a));
    }
  }
  SUBCASE("(PSL2(23), D22) is not a perfect code") {
    Subgroup m = psl2_maximal(23, {MaximalTag::Family::DMinus});
    CHECK(m.group->order() == 22);
    CHECK_FALSE(check_elementwise(m).is_perfect_code);
  }
  SUBCASE("every maximal subgroup of PGL2(9) is a perfect code") {
    for (const MaximalTag& tag : pgl2_maximal_tags(9)) {
      CHECK(check_elementwise(pgl2_maximal(9, tag)).is_perfect_code);
    }
  }
}

TEST_CASE("check_double_coset agrees with check_elementwise") {
  SUBCASE("(S4, <(0 1)>) is a perfect code") {
    GroupPtr s4 = symmetric_group(4);
    Subgroup h = make_subgroup(s4, {Perm::from_cycles(4, {{0, 1}})});
    CHECK(check_double_coset(h).is_perfect_code);
    CHECK(check_elementwise(h).is_perfect_code);
  }
  SUBCASE("(Q8, center) is not") {
    GroupPtr q8 = quaternion_group(8);
    for (Subgroup& h : all_subgroups(q8)) {
      if (h.group->order() != 2) continue;
      CHECK_FALSE(check_double_coset(h).is_perfect_code);
      CHECK_FALSE(check_elementwise(h).is_perfect_code);
    }
  }
  SUBCASE("(PSL2(23), D22): boolean-identical to elementwise") {
    Subgroup m = psl2_maximal(23, {MaximalTag::Family::DMinus});
    CHECK(check_double_coset(m).is_perfect_code == check_elementwise(m).is_perfect_code);
  }
}

TEST_CASE("transversal search") {
  SUBCASE("(C2 x C2, <b>) finds {e, a}") {
    GroupPtr v4 = direct_product(cyclic_group(2), cyclic_group(2));
    Subgroup h = make_subgroup(v4, {v4->generators()[1]});
    TransversalSearchResult r = find_inverse_closed_transversal(h);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.transversal.size() == 2);
    CHECK(validate_transversal(*v4, *h.group, r.transversal));
  }
  SUBCASE("(C4, C2) is proved nonexistent") {
    TransversalSearchResult r = find_inverse_closed_transversal(c2_in_c4());
    CHECK(r.status == SearchStatus::Nonexistent);
  }
  SUBCASE("budget exhaustion is reported distinctly") {
    Subgroup borel = psl2_maximal(11, {MaximalTag::Family::Borel});
    TransversalSearchResult r = find_inverse_closed_transversal(borel, 2);
    CHECK(r.status == SearchStatus::Exhausted);
  }
}

TEST_CASE("validate_transversal") {
  GroupPtr g = symmetric_group(3);
  SUBCASE("{e} for H = G") {
    CHECK(validate_transversal(*g, *g, {g->identity()}));
  }
  SUBCASE("missing coset fails") {
    Subgroup h = make_subgroup(g, {Perm::from_cycles(3, {{0, 1}})});
    CHECK_FALSE(validate_transversal(*g, *h.group,
                                     {g->identity(), Perm::from_cycles(3, {{0, 1, 2}})}));
  }
}

TEST_CASE("check_via_sylow2") {
  SUBCASE("odd |H| is immediately positive") {
    GroupPtr s4 = symmetric_group(4);
    Subgroup h = make_subgroup(s4, {Perm::from_cycles(4, {{0, 1, 2}})});
    Verdict v = check_via_sylow2(h);
    CHECK(v.is_perfect_code);
  }
  SUBCASE("(PSL2(17), D18) is not a perfect code") {
    Subgroup m = psl2_maximal(17, {MaximalTag::Family::DPlus});
    CHECK(m.group->order() == 18);
    Verdict v = check_via_sylow2(m);
    CHECK_FALSE(v.is_perfect_code);
    const auto& w = std::get<WitnessEvidence>(v.evidence);
    CHECK(validate_witness(*m.ambient, *m.group, w.a));
  }
}

TEST_CASE("check_2group_local") {
  SUBCASE("(D8, C4) has the reflection as complement") {
    GroupPtr d8 = dihedral_group(8);
    for (Subgroup& h : all_subgroups(d8)) {
      if (classify_2group(*h.group) == IsoType::cyclic(4)) {
        CHECK(check_2group_local(h).is_perfect_code);
      }
    }
  }
  SUBCASE("(Q8, center) fails: no involutions outside") {
    GroupPtr q8 = quaternion_group(8);
    for (Subgroup& h : all_subgroups(q8)) {
      if (h.group->order() != 2) continue;
      CHECK_FALSE(check_2group_local(h).is_perfect_code);
    }
  }
  SUBCASE("N_G(H) = H is vacuously positive") {
    GroupPtr s4 = symmetric_group(4);
    Subgroup p = sylow2(s4);  // self-normalizing D8
    CHECK(normalizer(p).group->order() == 8);
    CHECK(check_2group_local(p).is_perfect_code);
  }
  SUBCASE("odd subgroups are rejected") {
    GroupPtr s3 = symmetric_group(3);
    Subgroup h = make_subgroup(s3, {Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK_THROWS_AS(check_2group_local(h), NotTwoGroup);
  }
}

TEST_CASE("cyclic criterion") {
  SUBCASE("(C4, C4) is a perfect code") {
    GroupPtr c4 = cyclic_group(4);
    CHECK(check_cyclic_2subgroup(whole_group(c4)).is_perfect_code);
  }
  SUBCASE("(Q8, center) has a C4 overgroup") {
    GroupPtr q8 = quaternion_group(8);
    for (Subgroup& h : all_subgroups(q8)) {
      if (h.group->order() != 2) continue;
      CHECK_FALSE(check_cyclic_2subgroup(h).is_perfect_code);
    }
  }
  SUBCASE("(SL2(5), any C4) is not a perfect code") {
    GroupPtr g = sl2(5);
    long checked = 0;
    for (Subgroup& h : all_subgroups(g)) {
      if (h.group->order() == 4 &&
          classify_2group(*h.group) == IsoType::cyclic(4)) {
        CHECK_FALSE(check_cyclic_2subgroup(h).is_perfect_code);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
  SUBCASE("precondition") {
    GroupPtr d8 = dihedral_group(8);
    CHECK_THROWS_AS(check_cyclic_2subgroup(whole_group(d8)), NotCyclicTwoGroup);
  }
}

TEST_CASE("quaternion criterion") {
  SUBCASE("(SL2(5), Sylow Q8) is a perfect code") {
    Subgroup p = sylow2(sl2(5));
    CHECK(classify_2group(*p.group) == IsoType::quaternion(8));
    CHECK(check_quaternion_2subgroup(p).is_perfect_code);
  }
  SUBCASE("(Q16, Q8) is not") {
    GroupPtr q16 = quaternion_group(16);
    long checked = 0;
    for (Subgroup& h : all_subgroups(q16)) {
      if (h.group->order() == 8 &&
          classify_2group(*h.group) == IsoType::quaternion(8)) {
        CHECK_FALSE(check_quaternion_2subgroup(h).is_perfect_code);
        ++checked;
      }
    }
    CHECK(checked == 2);
  }
  SUBCASE("(Q8, Q8) is") {
    CHECK(check_quaternion_2subgroup(whole_group(quaternion_group(8))).is_perfect_code);
  }
}

TEST_CASE("elementary abelian shortcut") {
  CHECK(shortcut_elementary_abelian(psl2(8)).has_value());
  CHECK_FALSE(shortcut_elementary_abelian(psl2(7)).has_value());
  CHECK(shortcut_elementary_abelian(cyclic_group(15)).has_value());  // trivial Sylow
}

TEST_CASE("dihedral-Sylow context") {
  SUBCASE("(PSL2(9), C2 inside a C4) is not a perfect code") {
    GroupPtr g = psl2(9);
    const Perm* order4 = nullptr;
    for (const Perm& x : g->elements()) {
      if (element_order(x) == 4) {
        order4 = &x;
        break;
      }
    }
    REQUIRE(order4 != nullptr);
    Perm sq = *order4 * *order4;
    Subgroup h = make_subgroup(g, {sq});
    Verdict v = check_dihedral_sylow_context(h);
    CHECK_FALSE(v.is_perfect_code);
  }
  SUBCASE("(PSL2(5), C2) is a perfect code: no strict cyclic 2-overgroup") {
    GroupPtr g = psl2(5);
    const Perm* invol = nullptr;
    for (const Perm& x : g->elements()) {
      if (element_order(x) == 2) {
        invol = &x;
        break;
      }
    }
    Subgroup h = make_subgroup(g, {*invol});
    CHECK(check_dihedral_sylow_context(h).is_perfect_code);
  }
  SUBCASE("H = sylow2(G) is a perfect code") {
    GroupPtr g = psl2(7);
    CHECK(check_dihedral_sylow_context(sylow2(g)).is_perfect_code);
  }
  SUBCASE("precondition: ambient Sylow must be dihedral") {
    GroupPtr g = sl2(5);  // quaternion Sylow
    CHECK_THROWS_AS(check_dihedral_sylow_context(sylow2(g)), PreconditionViolated);
  }
}

TEST_CASE("auto_check equals check_elementwise on assorted pairs") {
  std::vector<Subgroup> pairs;
  pairs.push_back(c2_in_c4());
  pairs.push_back(whole_group(symmetric_group(4)));
  pairs.push_back(sylow2(sl2(5)));
  pairs.push_back(psl2_maximal(9, {MaximalTag::Family::A5}));
  pairs.push_back(psl2_maximal(11, {MaximalTag::Family::Borel}));
  GroupPtr s5 = symmetric_group(5);
  pairs.push_back(make_subgroup(s5, {Perm::from_cycles(5, {{0, 1}, {2, 3}})}));
  for (const Subgroup& h : pairs) {
    CHECK(auto_check(h).is_perfect_code == check_elementwise(h).is_perfect_code);
  }
}

TEST_CASE("auto_check on the SL2(7) Borel preimage") {
  // |H|_2 = 2 is strictly between 1 and |G|_2 = 16, so not a perfect code.
  Subgroup borel = psl2_maximal(7, {MaximalTag::Family::Borel});
  Subgroup m = preimage_in_sl2(7, borel);
  CHECK(m.group->order() == 42);
  CHECK_FALSE(auto_check(m).is_perfect_code);
}

TEST_CASE("odd-order subgroups are always perfect codes") {
  GroupPtr g = psl2(7);
  for (const Perm& x : g->elements()) {
    long m = element_order(x);
    if (m % 2 == 1 && m > 1) {
      Subgroup h = make_subgroup(g, {x});
      Verdict v = auto_check(h);
      CHECK(v.is_perfect_code);
      break;
    }
  }
}

TEST_CASE("evaluate_semidirect_conditions") {
  SUBCASE("H = D16 inside D32 with a cyclic extension") {
    GroupPtr d32 = dihedral_group(32);
    // x = order-8 rotation, y = a reflection, a = order-16 rotation with a^2 = x
    const Perm* a = nullptr;
    for (const Perm& cand : d32->elements()) {
      if (element_order(cand) == 16) {
        a = &cand;
        break;
      }
    }
    REQUIRE(a != nullptr);
    Perm x = *a * *a;
    const Perm* y = nullptr;
    GroupPtr cyc16 = generate({*a});
    for (const Perm& cand : d32->elements()) {
      if (element_order(cand) == 2 && !cyc16->contains(cand)) {
        y = &cand;
        break;
      }
    }
    REQUIRE(y != nullptr);
    Subgroup h = make_subgroup(d32, {x, *y});
    CHECK(h.group->order() == 16);
    SemidirectConditionReport r = evaluate_semidirect_conditions(h, x, *y, *a);
    CHECK(r.a2_in_cyclic_part);
    CHECK(r.predicted_complement);
    CHECK(r.direct_complement);
    CHECK(r.predicted_complement == r.direct_complement);
  }
  SUBCASE("H = C4 x C2 inside modular(16): cyclic <x,a> forbids a complement") {
    GroupPtr m16 = modular_group(16);
    const Perm* a = nullptr;
    for (const Perm& cand : m16->elements()) {
      if (element_order(cand) == 8) {
        a = &cand;
        break;
      }
    }
    REQUIRE(a != nullptr);
    Perm x = *a * *a;  // order 4
    GroupPtr cyc8 = generate({*a});
    const Perm* y = nullptr;
    for (const Perm& cand : m16->elements()) {
      if (element_order(cand) == 2 && !cyc8->contains(cand)) {
        y = &cand;
        break;
      }
    }
    REQUIRE(y != nullptr);
    Subgroup h = make_subgroup(m16, {x, *y});
    REQUIRE(h.group->order() == 8);
    REQUIRE(classify_2group(*h.group).kind == IsoType::Kind::Fingerprint);  // C4 x C2
    SemidirectConditionReport r = evaluate_semidirect_conditions(h, x, *y, *a);
    CHECK_FALSE(r.predicted_complement);
    CHECK_FALSE(r.direct_complement);
  }
  SUBCASE("a inside <x> is rejected") {
    GroupPtr d8 = dihedral_group(8);
    const Perm* x = nullptr;
    for (const Perm& cand : d8->elements()) {
      if (element_order(cand) == 4) {
        x = &cand;
        break;
      }
    }
    GroupPtr cyc = generate({*x});
    const Perm* y = nullptr;
    for (const Perm& cand : d8->elements()) {
      if (element_order(cand) == 2 && !cyc->contains(cand)) {
        y = &cand;
        break;
      }
    }
    Subgroup h = whole_group(d8);
    CHECK_THROWS_AS(evaluate_semidirect_conditions(h, *x, *y, x->inverse()),
                    BadDecomposition);
  }
}

TEST_CASE("diamond lemma") {
  SUBCASE("H = HK with L = {e}") {
    GroupPtr g = symmetric_group(3);
    Subgroup h = whole_group(g);
    Subgroup k = trivial_subgroup(g);
    DiamondLiftResult r = diamond_lift(h, k, {g->identity()});
    CHECK(r.hk->order() == 6);
    CHECK(r.transversal.size() == 1);
  }
  SUBCASE("invalid input transversal is rejected") {
    GroupPtr g = symmetric_group(3);
    Subgroup h = make_subgroup(g, {Perm::from_cycles(3, {{0, 1}})});
    Subgroup k = make_subgroup(g, {Perm::from_cycles(3, {{0, 1, 2}})});
    CHECK_THROWS_AS(diamond_lift(h, k, {g->identity()}), InvalidTransversal);
  }
}

TEST_CASE("diamond converse under |H|_2 = |H cap K|_2") {
  GroupPtr g = symmetric_group(4);
  // H = A4, K = a Sylow D8: |H|_2 = 4 = |H cap K|_2, HK = G
  Subgroup a4 = make_subgroup(
      g, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{1, 2, 3}})});
  Subgroup p = sylow2(g);
  CHECK(diamond_converse_check(a4, p));
  // H <= K: trivially both sides identical
  Subgroup v4 = make_subgroup(
      g, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(diamond_converse_check(v4, p));
}

TEST_CASE("split reduction") {
  GroupPtr c4 = cyclic_group(4);
  GroupPtr c2 = cyclic_group(2);
  Perm x = c4->generators()[0];
  SemidirectProduct d8 = semidirect_product(c4, c2, {{x.inverse()}});

  SUBCASE("verdict equals the direct check on M = N") {
    Verdict v = split_reduction(d8.group, d8.normal_part, d8.normal_part, d8.complement);
    CHECK(v.is_perfect_code == check_elementwise(d8.normal_part).is_perfect_code);
  }
  SUBCASE("K trivial reduces to the pair itself") {
    Subgroup triv = trivial_subgroup(d8.group);
    Verdict v = split_reduction(d8.group, d8.normal_part, triv, whole_group(d8.group));
    CHECK(v.is_perfect_code == check_elementwise(d8.normal_part).is_perfect_code);
  }
  SUBCASE("a bad complement is refused") {
    Subgroup triv = trivial_subgroup(d8.group);
    CHECK_THROWS_AS(split_reduction(d8.group, d8.normal_part, d8.normal_part, triv),
                    NotComplement);
  }
}

TEST_CASE("lift through a normal subgroup") {
  SUBCASE("N = H reduces to N being a perfect code") {
    GroupPtr s4 = symmetric_group(4);
    Subgroup v4 = make_subgroup(
        s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
    CHECK(lift_through_normal(s4, v4, v4) == LiftStatus::PerfectCode);
  }
  SUBCASE("SL2(5) Borel preimage with N = center: inconclusive, false overall") {
    GroupPtr g = sl2(5);
    Subgroup borel = psl2_maximal(5, {MaximalTag::Family::Borel});
    Subgroup m = preimage_in_sl2(5, borel);
    Subgroup z = normal_core(m);
    REQUIRE(z.group->order() == 2);
    CHECK(lift_through_normal(g, z, m) == LiftStatus::Inconclusive);
    CHECK_FALSE(auto_check(m).is_perfect_code);
  }
}
