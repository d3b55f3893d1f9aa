#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pcode/group.hpp"

namespace pcode {

// N_G(H) = {g in G : h^g in H for every generator h of H}; the generator
// form suffices because conjugation by a fixed g is a homomorphism and the
// groups are finite.
Subgroup normalizer(GroupPtr g, const FiniteGroup& h);
inline Subgroup normalizer(const Subgroup& h) { return normalizer(h.ambient, *h.group); }

Subgroup centralizer(GroupPtr g, const Perm& x);

// Largest normal subgroup of G inside H: the elements x of H with
// g x g^-1 in H for every coset representative g.
Subgroup normal_core(const Subgroup& h);

// A Sylow 2-subgroup via normalizer ascent: start from the canonically least
// 2-element of maximal 2-power order; while |P| < |G|_2, adjoin the
// canonically least x in N_G(P) \ P whose image modulo P has 2-power order.
Subgroup sylow2(GroupPtr g);

// Image of G under right multiplication on the right cosets of a normal
// subgroup N, together with the epimorphism data.
class Quotient {
 public:
  GroupPtr group() const { return image_; }
  GroupPtr parent() const { return parent_; }
  GroupPtr kernel() const { return kernel_; }
  const std::vector<Perm>& coset_representatives() const { return reps_; }

  // The induced permutation of coset indices.
  Perm image_of(const Perm& g) const;
  // Pushes a subgroup N <= M <= G down to M/N <= G/N.
  Subgroup push(const Subgroup& m) const;
  // All preimages of a quotient element (a coset of N, sorted).
  std::vector<Perm> preimage_of(const Perm& bar) const;

 private:
  friend Quotient quotient(GroupPtr g, const Subgroup& n);
  GroupPtr parent_, kernel_, image_;
  std::vector<Perm> reps_;          // canonical: least member of each coset
  std::vector<int> coset_of_;       // parent element index -> coset index
};

Quotient quotient(GroupPtr g, const Subgroup& n);

bool is_normal(const FiniteGroup& g, const FiniteGroup& n);

// True iff N (normal of index 2 in G) has a complement, i.e. some involution
// lies outside N.
bool is_split_index2(GroupPtr g, const Subgroup& n);

// --- products -------------------------------------------------------------

Perm embed_left(const Perm& p, int right_degree);
Perm embed_right(int left_degree, const Perm& p);

GroupPtr direct_product(GroupPtr a, GroupPtr b);

// Extends a map on the generators of `domain` to the full group by following
// the Cayley graph; throws ActionInvalid if the images are inconsistent with
// the relations of `domain`. Returns images indexed by element index.
std::vector<Perm> extend_homomorphism(const FiniteGroup& domain,
                                      const std::vector<Perm>& gen_images);

struct SemidirectProduct {
  GroupPtr group;
  Subgroup normal_part;  // copy of N inside the product
  Subgroup complement;   // copy of K inside the product
};

// N x| K for an action given, per K-generator, by the images of N's
// generators under the corresponding automorphism. The action is validated
// (each map must extend to an automorphism of N and the closure must have
// order |N||K|). The product acts faithfully on |N| + degree(K) points:
// the N-part by right multiplication on N's elements, the K-part by the
// automorphism permutation of N's elements joined with K's own action.
SemidirectProduct semidirect_product(GroupPtr n, GroupPtr k,
                                     const std::vector<std::vector<Perm>>& action);

struct WreathProduct {
  GroupPtr group;
  Subgroup base;  // H^t
  Subgroup top;   // S_t permuting the blocks
};

// H wr S_t acting imprimitively on t disjoint copies of H's domain.
WreathProduct wreath_symmetric(GroupPtr h, int t, long order_cap = kDefaultOrderCap);

// H wr S_t viewed inside an ambient wreath product of the same degree
// (H <= G gives H wr S_t <= G wr S_t pointwise).
Subgroup wreath_subgroup(const WreathProduct& ambient, GroupPtr h);

// True iff <M, g> = G for every coset representative g outside M.
bool is_maximal_in(const Subgroup& m);

// Conjugate subgroup g^-1 H g.
GroupPtr conjugate_group(const FiniteGroup& h, const Perm& g);

Subgroup intersection(GroupPtr ambient, const FiniteGroup& a, const FiniteGroup& b);

// {h*k} as a sorted element list; second result reports whether the set is a
// group (HK = KH).
std::pair<std::vector<Perm>, bool> product_set(const FiniteGroup& h, const FiniteGroup& k);

}  // namespace pcode
