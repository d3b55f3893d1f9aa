#include <doctest.h>

#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/linear_groups.hpp"
#include "pcode/small_groups.hpp"

using namespace pcode;

TEST_CASE("classify_2group recognizes the standard families") {
  CHECK(classify_2group(*cyclic_group(1)) == IsoType::cyclic(1));
  CHECK(classify_2group(*cyclic_group(8)) == IsoType::cyclic(8));
  CHECK(classify_2group(*elementary_abelian_group(2, 2)) ==
        IsoType::elementary_abelian(2, 2));
  CHECK(classify_2group(*dihedral_group(4)) == IsoType::elementary_abelian(2, 2));
  CHECK(classify_2group(*dihedral_group(8)) == IsoType::dihedral(8));
  CHECK(classify_2group(*quaternion_group(8)) == IsoType::quaternion(8));
  CHECK(classify_2group(*quaternion_group(32)) == IsoType::quaternion(32));
  CHECK(classify_2group(*semidihedral_group(16)) == IsoType::semidihedral(16));
  CHECK(classify_2group(*modular_group(16)) == IsoType::modular(16));
  CHECK(classify_2group(*direct_product(cyclic_group(4), cyclic_group(2))).kind ==
        IsoType::Kind::Fingerprint);
  CHECK_THROWS_AS(classify_2group(*cyclic_group(6)), NotTwoGroup);
}

TEST_CASE("classify_2group of the PGL2(7) Sylow is D16") {
  CHECK(classify_2group(*pgl2(7)->sylow2_group()) == IsoType::dihedral(16));
}

TEST_CASE("classify agrees with is_isomorphic against the construction library") {
  // Every 2-group of order <= 64 in the library: the recognized tag must
  // match the reference construction, and distinct tags of equal order must
  // stay non-isomorphic.
  std::vector<std::pair<IsoType, GroupPtr>> lib;
  for (long n = 2; n <= 64; n *= 2) lib.push_back({IsoType::cyclic(n), cyclic_group(n)});
  for (long n = 8; n <= 64; n *= 2) lib.push_back({IsoType::dihedral(n), dihedral_group(n)});
  for (long n = 8; n <= 64; n *= 2) {
    lib.push_back({IsoType::quaternion(n), quaternion_group(n)});
  }
  for (long n = 16; n <= 64; n *= 2) {
    lib.push_back({IsoType::semidihedral(n), semidihedral_group(n)});
    lib.push_back({IsoType::modular(n), modular_group(n)});
  }
  for (long k = 2; k <= 6; ++k) {
    lib.push_back({IsoType::elementary_abelian(2, k), elementary_abelian_group(2, k)});
  }
  for (const auto& [tag, g] : lib) {
    CHECK(classify_2group(*g) == tag);
    CHECK(small2group(tag)->order() == g->order());
  }
  for (const auto& [tag_a, a] : lib) {
    for (const auto& [tag_b, b] : lib) {
      if (a->order() != b->order()) continue;
      CHECK(is_isomorphic(*a, *b) == (tag_a == tag_b));
    }
  }
}

TEST_CASE("small2group examples") {
  GroupPtr d8 = small2group(IsoType::dihedral(8));
  long involutions = 0;
  for (const Perm& x : d8->elements()) {
    if (element_order(x) == 2) ++involutions;
  }
  CHECK(involutions == 5);

  GroupPtr q16 = small2group(IsoType::quaternion(16));
  involutions = 0;
  for (const Perm& x : q16->elements()) {
    if (element_order(x) == 2) ++involutions;
  }
  CHECK(involutions == 1);

  // modular(16): x^y = x^{1+2^{n-1}} = x^5
  GroupPtr m16 = small2group(IsoType::modular(16));
  const Perm* x = nullptr;
  for (const Perm& cand : m16->elements()) {
    if (element_order(cand) == 8) {
      x = &cand;
      break;
    }
  }
  REQUIRE(x != nullptr);
  GroupPtr cyc = generate({*x});
  const Perm* y = nullptr;
  for (const Perm& cand : m16->elements()) {
    if (element_order(cand) == 2 && !cyc->contains(cand)) {
      y = &cand;
      break;
    }
  }
  REQUIRE(y != nullptr);
  CHECK(conjugate(*x, *y) == perm_power(*x, 5));

  CHECK_THROWS_AS(small2group(IsoType::dihedral(12)), BadTag);
}

TEST_CASE("is_isomorphic") {
  CHECK_FALSE(is_isomorphic(*cyclic_group(4), *elementary_abelian_group(2, 2)));
  // two regular representations of the same presentation
  CHECK(is_isomorphic(*dihedral_group(12), *dihedral_group(12)));
  // A4 found inside PSL2(13) vs the standard A4
  Subgroup a4 = psl2_maximal(13, {MaximalTag::Family::A4});
  CHECK(is_isomorphic(*a4.group, *alternating_group(4)));
  CHECK_THROWS_AS(is_isomorphic(*pgl2(9), *pgl2(9)), CapExceeded);  // order 720 > 512
}

TEST_CASE("order spectrum distinguishes C4 from the Klein group") {
  CHECK(order_spectrum(*cyclic_group(4)) != order_spectrum(*elementary_abelian_group(2, 2)));
}

TEST_CASE("dihedral_tag convention") {
  CHECK(dihedral_tag(2) == IsoType::cyclic(2));
  CHECK(dihedral_tag(4) == IsoType::elementary_abelian(2, 2));
  CHECK(dihedral_tag(16) == IsoType::dihedral(16));
}
