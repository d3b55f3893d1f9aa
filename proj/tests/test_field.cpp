#include <doctest.h>

#include "pcode/errors.hpp"
#include "pcode/finite_field.hpp"

using namespace pcode;

TEST_CASE("GF(7): least primitive element is 3") {
  FieldPtr f = FiniteField::make(7, 1);
  CHECK(f->zeta() == 3);
  CHECK(f->multiplicative_order(3) == 6);
  CHECK(f->multiplicative_order(2) == 3);  // 2 is not primitive mod 7
  CHECK(f->mul(3, 5) == 1);
  CHECK(f->inv(3) == 5);
}

TEST_CASE("GF(9): canonical modulus, reducible rejected") {
  // x^2 + 1 is irreducible over GF(3) and canonically least.
  FieldPtr f = FiniteField::make(3, 2);
  CHECK(f->modulus() == std::vector<long>{1, 0});
  CHECK(f->size() == 9);
  // x^2 + 2x + 1 = (x+1)^2 is reducible.
  CHECK_THROWS_AS(FiniteField::make(3, 2, {1, 2}), Reducible);
  CHECK_THROWS_AS(FiniteField::make(4, 1), NotPrime);
}

TEST_CASE("GF(4): zeta^3 = 1") {
  FieldPtr f = FiniteField::make(2, 2);
  CHECK(f->size() == 4);
  CHECK(f->pow(f->zeta(), 3) == 1);
  CHECK(f->multiplicative_order(f->zeta()) == 3);
}

TEST_CASE("frobenius is the p-power map and a field automorphism") {
  FieldPtr f = FiniteField::make(5, 2);
  for (long a = 0; a < f->size(); ++a) {
    CHECK(f->frobenius(a) == f->pow(a, 5));
    for (long b = 0; b < f->size(); ++b) {
      CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
    }
  }
}

TEST_CASE("squares") {
  FieldPtr f7 = FiniteField::make(7, 1);
  CHECK(f7->is_square(2));   // 3^2 = 2 mod 7
  CHECK(f7->is_square(4));
  CHECK_FALSE(f7->is_square(3));
  FieldPtr f8 = FiniteField::make(2, 3);
  for (long a = 0; a < 8; ++a) CHECK(f8->is_square(a));  // characteristic 2
}

TEST_CASE("field arithmetic is associative and distributive (GF(8))") {
  FieldPtr f = FiniteField::make(2, 3);
  for (long a = 0; a < 8; ++a) {
    for (long b = 0; b < 8; ++b) {
      for (long c = 0; c < 8; ++c) {
        CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("field size cap") {
  CHECK_THROWS_AS(FiniteField::make(41, 2), CapExceeded);  // 1681 > 1024
}

TEST_CASE("prime power detection") {
  long p = 0, f = 0;
  CHECK(is_prime_power(27, &p, &f));
  CHECK(p == 3);
  CHECK(f == 3);
  CHECK_FALSE(is_prime_power(12));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
}
