#include "pcode/permutation.hpp"

#include <numeric>

#include "pcode/errors.hpp"

namespace pcode {

namespace {
constexpr int kMaxDegree = 255;
}

Perm::Perm(std::vector<uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw CapExceeded("permutation degree " + std::to_string(images_.size()) +
                      " exceeds the supported maximum of 255");
  }
  std::vector<bool> seen(images_.size(), false);
  for (uint8_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw NotBijection("image array is not a bijection");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
  Perm p;
  p.images_ = std::move(img);  // trivially valid
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree) {
        throw DegreeMismatch("cycle point out of range");
      }
      p.images_[from] = static_cast<uint8_t>(to);
    }
  }
  // Re-validate: overlapping cycles could break bijectivity.
  return Perm(std::move(p.images_));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degrees " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  Perm r;
  r.images_.resize(a.images_.size());
  const uint8_t* pa = a.images_.data();
  const uint8_t* pb = b.images_.data();
  uint8_t* pr = r.images_.data();
  for (std::size_t i = 0; i < a.images_.size(); ++i) pr[i] = pb[pa[i]];
  return r;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm commutator(const Perm& x, const Perm& y) {
  return x.inverse() * y.inverse() * x * y;
}

long element_order(const Perm& x) {
  std::vector<bool> seen(x.degree(), false);
  long order = 1;
  for (int i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = x[j];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Perm perm_power(const Perm& x, long e) {
  if (e < 0) return perm_power(x.inverse(), -e);
  Perm acc = Perm::identity(x.degree());
  Perm base = x;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace pcode
