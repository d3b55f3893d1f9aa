#include "pcode/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace pcode {

namespace {

constexpr long kMaxFieldSize = 1024;

std::vector<long> decode(long a, long p, long f) {
  std::vector<long> c(f);
  for (long i = 0; i < f; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

long encode(const std::vector<long>& c, long p) {
  long a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p + c[i];
  return a;
}

// Product of two coefficient vectors reduced modulo the monic modulus.
std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& modulus, long p) {
  const long f = static_cast<long>(modulus.size());
  std::vector<long> prod(2 * f - 1, 0);
  for (long i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (long d = 2 * f - 2; d >= f; --d) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^{d-f} * (-modulus)
    for (long i = 0; i < f; ++i) {
      prod[d - f + i] = ((prod[d - f + i] - c * modulus[i]) % p + p * p) % p;
    }
  }
  prod.resize(f);
  return prod;
}

// Plain polynomial division check: does `divisor` (monic, degree d) divide
// x^f + modulus?
bool divides(const std::vector<long>& modulus_full, const std::vector<long>& divisor,
             long p) {
  std::vector<long> rem = modulus_full;  // coefficients, degree = size-1
  long dd = static_cast<long>(divisor.size()) - 1;
  for (long d = static_cast<long>(rem.size()) - 1; d >= dd; --d) {
    long c = rem[d];
    if (c == 0) continue;
    for (long i = 0; i <= dd; ++i) {
      rem[d - dd + i] = ((rem[d - dd + i] - c * divisor[i]) % p + p) % p;
    }
  }
  for (long i = 0; i < dd; ++i) {
    if (rem[i] != 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<long>& modulus, long p) {
  const long f = static_cast<long>(modulus.size());
  if (modulus[0] == 0) return false;  // divisible by x
  std::vector<long> full = modulus;
  full.push_back(1);  // x^f + ...
  // Try all monic divisors of degree 1..f/2.
  for (long d = 1; d <= f / 2; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long enc = 0; enc < count; ++enc) {
      std::vector<long> divisor = decode(enc, p, d);
      divisor.push_back(1);  // monic
      if (divides(full, divisor, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(long n, long* p_out, long* f_out) {
  if (n < 2) return false;
  long p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  long f = 0;
  long m = n;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (f_out) *f_out = f;
  return true;
}

FieldPtr FiniteField::make(long p, long f) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (f < 1) throw BadParameters("field degree must be >= 1");
  if (f == 1) return make(p, 1, std::vector<long>{0});
  long q = 1;
  for (long i = 0; i < f; ++i) q *= p;
  for (long enc = 0; enc < q; ++enc) {
    std::vector<long> cand = decode(enc, p, f);
    if (is_irreducible(cand, p)) return make(p, f, std::move(cand));
  }
  throw SearchFailed("no irreducible modulus found");  // cannot happen
}

FieldPtr FiniteField::make(long p, long f, std::vector<long> modulus) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (static_cast<long>(modulus.size()) != f) {
    throw BadParameters("modulus must list f coefficients c_0..c_{f-1}");
  }
  for (long& c : modulus) c = ((c % p) + p) % p;
  if (f > 1 && !is_irreducible(modulus, p)) {
    throw Reducible("modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  auto field = std::shared_ptr<FiniteField>(new FiniteField());
  field->p_ = p;
  field->f_ = f;
  long q = 1;
  for (long i = 0; i < f; ++i) q *= p;
  field->q_ = q;
  if (q > kMaxFieldSize) {
    throw CapExceeded("field size " + std::to_string(q) + " exceeds cap");
  }
  field->modulus_ = std::move(modulus);
  field->build_tables();
  return field;
}

void FiniteField::build_tables() {
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  for (long a = 0; a < q_; ++a) {
    std::vector<long> ca = decode(a, p_, f_);
    std::vector<long> cn(f_);
    for (long i = 0; i < f_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(cn, p_);
    for (long b = 0; b < q_; ++b) {
      std::vector<long> cb = decode(b, p_, f_);
      std::vector<long> cs(f_);
      for (long i = 0; i < f_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = encode(cs, p_);
      mul_[a * q_ + b] = encode(poly_mul_mod(ca, cb, modulus_, p_), p_);
    }
  }
  for (long a = 1; a < q_; ++a) {
    for (long b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (long a = 0; a < q_; ++a) {
    long r = a;
    for (long i = 1; i < p_; ++i) r = mul_[r * q_ + a];
    frob_[a] = r;
  }
  // Least primitive element.
  for (long a = 2; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      zeta_ = a;
      break;
    }
  }
  if (q_ == 2) zeta_ = 1;
}

long FiniteField::inv(long a) const {
  if (a == 0) throw BadParameters("division by zero in GF");
  return inv_[a];
}

long FiniteField::pow(long a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  long r = 1;
  long base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

long FiniteField::multiplicative_order(long a) const {
  if (a == 0) throw BadParameters("zero has no multiplicative order");
  long r = a;
  long m = 1;
  while (r != 1) {
    r = mul(r, a);
    ++m;
  }
  return m;
}

bool FiniteField::is_square(long a) const {
  if (a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1 || p_ == 2;
}

}  // namespace pcode
