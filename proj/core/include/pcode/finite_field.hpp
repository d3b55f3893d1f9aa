#pragma once

#include <memory>
#include <vector>

#include "pcode/errors.hpp"

namespace pcode {

// GF(p^f) with elements encoded as integers 0..p^f-1: the element with
// coefficient vector (c_0,...,c_{f-1}) against the power basis of the chosen
// modulus is encoded as sum c_i p^i. Arithmetic is table driven; the field
// size is capped accordingly.
class FiniteField {
 public:
  // Canonically least irreducible monic modulus (lexicographic on the
  // coefficient vector c_0..c_{f-1}).
  static std::shared_ptr<const FiniteField> make(long p, long f);
  // Explicit monic modulus given by coefficients c_0..c_{f-1} of
  // x^f + c_{f-1} x^{f-1} + ... + c_0; raises Reducible if not irreducible.
  static std::shared_ptr<const FiniteField> make(long p, long f, std::vector<long> modulus);

  long characteristic() const { return p_; }
  long degree() const { return f_; }
  long size() const { return q_; }
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long a, long b) const { return add_[a * q_ + b]; }
  long sub(long a, long b) const { return add(a, neg(b)); }
  long mul(long a, long b) const { return mul_[a * q_ + b]; }
  long neg(long a) const { return neg_[a]; }
  long inv(long a) const;
  long pow(long a, long e) const;
  // v -> v^p
  long frobenius(long a) const { return frob_[a]; }
  // Least primitive element.
  long zeta() const { return zeta_; }
  bool is_square(long a) const;
  long multiplicative_order(long a) const;

 private:
  FiniteField() = default;
  void build_tables();

  long p_ = 0, f_ = 0, q_ = 0;
  std::vector<long> modulus_;  // c_0..c_{f-1}
  std::vector<long> add_, mul_, neg_, inv_, frob_;
  long zeta_ = 0;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(long n);
bool is_prime_power(long n, long* p_out = nullptr, long* f_out = nullptr);

}  // namespace pcode
