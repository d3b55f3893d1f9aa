#include "pcode/classify.hpp"

#include <algorithm>
#include <map>

#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"

namespace pcode {

std::string IsoType::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(n);
    case Kind::Dihedral:
      return "D" + std::to_string(n);
    case Kind::GeneralizedQuaternion:
      return "Q" + std::to_string(n);
    case Kind::Semidihedral:
      return "SD" + std::to_string(n);
    case Kind::Modular:
      return "M" + std::to_string(n);
    case Kind::ElementaryAbelian:
      return "E" + std::to_string(p) + "^" + std::to_string(k);
    case Kind::NamedSmall:
      return name;
    case Kind::Fingerprint: {
      std::string s = "fingerprint(" + std::to_string(n) + ";";
      for (const auto& [o, c] : spectrum) {
        s += " " + std::to_string(o) + ":" + std::to_string(c);
      }
      return s + ")";
    }
  }
  return "?";
}

std::vector<std::pair<long, long>> order_spectrum(const FiniteGroup& g) {
  std::map<long, long> counts;
  for (const Perm& x : g.elements()) ++counts[element_order(x)];
  return {counts.begin(), counts.end()};
}

IsoType dihedral_tag(long order) {
  if (order == 2) return IsoType::cyclic(2);
  if (order == 4) return IsoType::elementary_abelian(2, 2);
  return IsoType::dihedral(order);
}

IsoType classify_2group(const FiniteGroup& g) {
  const long n = g.order();
  if ((n & (n - 1)) != 0) {
    throw NotTwoGroup("classify_2group requires a group of 2-power order");
  }
  if (n == 1) return IsoType::cyclic(1);

  long exponent = 1;
  long involutions = 0;
  for (const Perm& x : g.elements()) {
    long m = element_order(x);
    exponent = std::max(exponent, m);
    if (m == 2) ++involutions;
  }
  if (exponent == n) return IsoType::cyclic(n);
  if (exponent == 2) {
    long k = 0;
    for (long t = n; t > 1; t /= 2) ++k;
    return IsoType::elementary_abelian(2, k);
  }

  // Groups with a cyclic subgroup <x> of index 2, n >= 8.
  if (exponent == n / 2) {
    const Perm* x = nullptr;
    for (const Perm& cand : g.elements()) {
      if (element_order(cand) == exponent) {
        x = &cand;
        break;
      }
    }
    GroupPtr cyc = generate({*x});
    const Perm* y = nullptr;
    for (const Perm& cand : g.elements()) {
      if (element_order(cand) == 2 && !cyc->contains(cand)) {
        y = &cand;
        break;
      }
    }
    if (y == nullptr) {
      // No involution outside the cyclic part: with a unique involution the
      // group is generalized quaternion.
      if (involutions == 1) return IsoType::quaternion(n);
    } else {
      // x^y = x^k with k^2 = 1 mod n/2; the four classes.
      Perm conj = conjugate(*x, *y);
      long half = n / 2;
      long k = -1;
      Perm pw = Perm::identity(g.degree());
      for (long e = 0; e < half; ++e) {
        if (pw == conj) {
          k = e;
          break;
        }
        pw = pw * *x;
      }
      long quarter = half / 2;
      if (k == half - 1) return IsoType::dihedral(n);
      if (n >= 16 && k == quarter - 1) return IsoType::semidihedral(n);
      if (n >= 16 && k == quarter + 1) return IsoType::modular(n);
      // k == 1 gives C_{n/2} x C_2, which has no dedicated tag.
    }
  }

  IsoType out;
  out.kind = IsoType::Kind::Fingerprint;
  out.n = n;
  out.spectrum = order_spectrum(g);
  return out;
}

namespace {

// Extends a partial generator-image map and checks it is an injective
// homomorphism on the generated subgroup.
bool partial_map_consistent(const std::vector<Perm>& gens,
                            const std::vector<Perm>& images, const FiniteGroup& b) {
  GroupPtr sub = generate(gens);
  std::vector<Perm> table;
  try {
    table = extend_homomorphism(*sub, images);
  } catch (const ActionInvalid&) {
    return false;
  }
  std::vector<Perm> sorted(table.begin(), table.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Perm& img : sorted) {
    if (!b.contains(img)) return false;
  }
  return true;
}

bool extend_isomorphism(const FiniteGroup& b, const std::vector<Perm>& a_gens,
                        std::vector<Perm>& images, std::size_t level,
                        const std::map<long, std::vector<Perm>>& b_by_order) {
  if (level == a_gens.size()) return true;
  long need = element_order(a_gens[level]);
  auto it = b_by_order.find(need);
  if (it == b_by_order.end()) return false;
  for (const Perm& cand : it->second) {
    images.push_back(cand);
    std::vector<Perm> partial_gens(a_gens.begin(), a_gens.begin() + level + 1);
    if (partial_map_consistent(partial_gens, images, b) &&
        extend_isomorphism(b, a_gens, images, level + 1, b_by_order)) {
      return true;
    }
    images.pop_back();
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, long order_cap) {
  if (a.order() != b.order()) return false;
  if (a.order() > order_cap) {
    throw CapExceeded("is_isomorphic capped at order " + std::to_string(order_cap));
  }
  if (order_spectrum(a) != order_spectrum(b)) return false;

  // Greedy generating set of a, in canonical order.
  std::vector<Perm> a_gens;
  GroupPtr closed = trivial_group(a.degree());
  for (const Perm& x : a.elements()) {
    if (closed->contains(x)) continue;
    a_gens.push_back(x);
    std::vector<Perm> gens = a_gens;
    closed = generate(gens);
    if (closed->order() == a.order()) break;
  }
  if (a_gens.empty()) return true;  // both trivial

  std::map<long, std::vector<Perm>> b_by_order;
  for (const Perm& y : b.elements()) b_by_order[element_order(y)].push_back(y);

  std::vector<Perm> images;
  return extend_isomorphism(b, a_gens, images, 0, b_by_order);
}

}  // namespace pcode
