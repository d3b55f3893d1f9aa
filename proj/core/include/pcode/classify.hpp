#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcode/group.hpp"

namespace pcode {

// Recognized isomorphism type of a small group. For 2-groups the structured
// kinds cover cyclic, elementary abelian and the split/non-split groups with
// a cyclic subgroup of index 2 (dihedral, generalized quaternion,
// semidihedral, modular); everything else falls back to an order-spectrum
// fingerprint. Note the dihedral group of order 4 is the Klein group and is
// reported as ElementaryAbelian(2,2).
struct IsoType {
  enum class Kind {
    Cyclic,
    Dihedral,
    GeneralizedQuaternion,
    Semidihedral,
    Modular,
    ElementaryAbelian,
    NamedSmall,
    Fingerprint,
  };

  Kind kind = Kind::Fingerprint;
  long n = 0;     // group order for the structured kinds
  long p = 0;     // ElementaryAbelian: prime
  long k = 0;     // ElementaryAbelian: rank
  std::string name;                              // NamedSmall
  std::vector<std::pair<long, long>> spectrum;   // Fingerprint: (order, count)

  static IsoType cyclic(long order) { return {Kind::Cyclic, order, 0, 0, {}, {}}; }
  static IsoType dihedral(long order) { return {Kind::Dihedral, order, 0, 0, {}, {}}; }
  static IsoType quaternion(long order) {
    return {Kind::GeneralizedQuaternion, order, 0, 0, {}, {}};
  }
  static IsoType semidihedral(long order) { return {Kind::Semidihedral, order, 0, 0, {}, {}}; }
  static IsoType modular(long order) { return {Kind::Modular, order, 0, 0, {}, {}}; }
  static IsoType elementary_abelian(long p, long k) {
    return {Kind::ElementaryAbelian, 1, p, k, {}, {}};
  }

  std::string to_string() const;
  bool operator==(const IsoType& other) const = default;
};

// Multiset of element orders as sorted (order, count) pairs.
std::vector<std::pair<long, long>> order_spectrum(const FiniteGroup& g);

// Recognizes the isomorphism type of a 2-group; raises NotTwoGroup otherwise.
IsoType classify_2group(const FiniteGroup& p);

// Order-spectrum prefilter followed by a backtracking generator-image
// search. Limited to |A| = |B| <= order_cap.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, long order_cap = 512);

// The table tag for a dihedral group of the given order under the convention
// that order 4 means the Klein group and order 2 means C2.
IsoType dihedral_tag(long order);

}  // namespace pcode
