#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pcode {

// A bijection on {0,...,degree-1}, stored as a dense image array.
// Points are 0-indexed. Products compose left to right: (a*b)[i] = b[a[i]].
// The canonical order on permutations of equal degree is lexicographic on
// the image array; every deterministic search in the library iterates in
// this order.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);

  static Perm identity(int degree);
  // Cycles use 0-indexed points; unmentioned points are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm& other) const = default;
  std::strong_ordering operator<=>(const Perm& other) const {
    return images_ <=> other.images_;
  }

  // Disjoint cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()".
  std::string cycle_string() const;

 private:
  std::vector<uint8_t> images_;
};

// x^g = g^-1 * x * g.
Perm conjugate(const Perm& x, const Perm& g);
// [x,y] = x^-1 * y^-1 * x * y.
Perm commutator(const Perm& x, const Perm& y);

// Least m >= 1 with x^m = identity (lcm of cycle lengths).
long element_order(const Perm& x);

Perm perm_power(const Perm& x, long e);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes.
    std::size_t h = 1469598103934665603ull;
    for (uint8_t b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace pcode
