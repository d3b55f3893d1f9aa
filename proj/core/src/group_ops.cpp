#include "pcode/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "pcode/errors.hpp"

namespace pcode {

namespace {

// Filters the ambient group's elements through `keep`, returning the
// resulting subgroup. Returns the ambient group itself when nothing is
// filtered out.
Subgroup filter_subgroup(GroupPtr g, const std::function<bool(const Perm&)>& keep) {
  std::vector<Perm> kept;
  for (const Perm& x : g->elements()) {
    if (keep(x)) kept.push_back(x);
  }
  if (static_cast<long>(kept.size()) == g->order()) return whole_group(g);
  return Subgroup{g, group_from_sorted_elements(std::move(kept))};
}

}  // namespace

Subgroup normalizer(GroupPtr g, const FiniteGroup& h) {
  const std::vector<Perm>& gens = h.generators();
  return filter_subgroup(g, [&](const Perm& x) {
    Perm xinv = x.inverse();
    for (const Perm& s : gens) {
      if (!h.contains(xinv * s * x)) return false;
    }
    return true;
  });
}

Subgroup centralizer(GroupPtr g, const Perm& x) {
  if (!g->contains(x)) {
    throw ElementOutsideGroup("centralizer: element outside the group");
  }
  return filter_subgroup(g, [&](const Perm& c) { return c * x == x * c; });
}

Subgroup normal_core(const Subgroup& h) {
  // x lies in the core iff g x g^-1 stays in H for every right-coset
  // representative g (gHg^-1 depends only on the coset Hg... conjugating by
  // hg and by g give the same subgroup).
  CosetDecomposition dec = right_cosets(h);
  std::vector<Perm> reps;
  std::vector<Perm> rep_invs;
  for (const Coset& c : dec.cosets) {
    reps.push_back(c.representative);
    rep_invs.push_back(c.representative.inverse());
  }
  std::vector<Perm> kept;
  for (const Perm& x : h.group->elements()) {
    bool ok = true;
    for (std::size_t i = 0; i < reps.size() && ok; ++i) {
      if (!h.group->contains(reps[i] * x * rep_invs[i])) ok = false;
    }
    if (ok) kept.push_back(x);
  }
  return Subgroup{h.ambient, group_from_sorted_elements(std::move(kept))};
}

Subgroup sylow2(GroupPtr g) {
  const long target = two_part(g->order());
  if (target == 1) return trivial_subgroup(g);

  // Canonically least 2-element of maximal 2-power order.
  long best_order = 1;
  const Perm* seed = nullptr;
  for (const Perm& x : g->elements()) {
    long m = element_order(&x == &g->elements()[0] ? x : x);
    if ((m & (m - 1)) == 0 && m > best_order) {
      best_order = m;
      seed = &x;
    }
  }
  std::vector<Perm> gens = {*seed};
  GroupPtr p = generate(gens);

  while (p->order() < target) {
    Subgroup n = normalizer(g, *p);
    const Perm* pick = nullptr;
    for (const Perm& x : n.group->elements()) {
      if (p->contains(x)) continue;
      // Eligible iff repeated squaring lands in P (2-power order mod P).
      Perm z = x;
      bool ok = false;
      for (int k = 0; k <= 40; ++k) {
        if (p->contains(z)) {
          ok = true;
          break;
        }
        z = z * z;
      }
      if (ok) {
        pick = &x;
        break;
      }
    }
    if (pick == nullptr) {
      throw ConsistencyError("sylow2 ascent stalled");  // cannot happen
    }
    gens.push_back(*pick);
    p = generate(gens);
  }
  return make_subgroup(g, p);
}

Perm Quotient::image_of(const Perm& g) const {
  std::vector<uint8_t> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    long idx = parent_->index_of(reps_[i] * g);
    if (idx < 0) throw ElementOutsideGroup("quotient image of a foreign element");
    img[i] = static_cast<uint8_t>(coset_of_[idx]);
  }
  return Perm(std::move(img));
}

Subgroup Quotient::push(const Subgroup& m) const {
  std::unordered_set<Perm, PermHash> acc;
  for (const Perm& x : m.group->elements()) acc.insert(image_of(x));
  std::vector<Perm> elems(acc.begin(), acc.end());
  std::sort(elems.begin(), elems.end());
  return Subgroup{image_, group_from_sorted_elements(std::move(elems))};
}

std::vector<Perm> Quotient::preimage_of(const Perm& bar) const {
  std::vector<Perm> out;
  for (long i = 0; i < parent_->order(); ++i) {
    if (image_of(parent_->elements()[i]) == bar) out.push_back(parent_->elements()[i]);
  }
  return out;
}

bool is_normal(const FiniteGroup& g, const FiniteGroup& n) {
  for (const Perm& x : g.generators()) {
    Perm xinv = x.inverse();
    for (const Perm& s : n.generators()) {
      if (!n.contains(xinv * s * x)) return false;
    }
  }
  return true;
}

Quotient quotient(GroupPtr g, const Subgroup& n) {
  if (!is_normal(*g, *n.group)) {
    throw NotNormal("quotient requires a normal subgroup");
  }
  Quotient q;
  q.parent_ = g;
  q.kernel_ = n.group;

  // Right cosets Nx in canonical order.
  CosetDecomposition dec = right_cosets(Subgroup{g, n.group});
  q.coset_of_.assign(g->order(), -1);
  for (std::size_t ci = 0; ci < dec.cosets.size(); ++ci) {
    q.reps_.push_back(dec.cosets[ci].representative);
    for (const Perm& m : dec.cosets[ci].members) {
      q.coset_of_[g->index_of(m)] = static_cast<int>(ci);
    }
  }
  if (q.reps_.size() > 255) {
    throw CapExceeded("quotient degree exceeds the supported maximum of 255");
  }

  std::vector<Perm> image_gens;
  for (const Perm& x : g->generators()) image_gens.push_back(q.image_of(x));
  if (image_gens.empty()) image_gens.push_back(Perm::identity(static_cast<int>(q.reps_.size())));
  q.image_ = generate(image_gens);
  if (q.image_->order() != g->order() / n.group->order()) {
    throw ConsistencyError("quotient image has wrong order");
  }
  return q;
}

bool is_split_index2(GroupPtr g, const Subgroup& n) {
  if (g->order() != 2 * n.group->order()) {
    throw IndexNotTwo("is_split_index2 requires [G:N] = 2");
  }
  if (!is_normal(*g, *n.group)) {
    throw NotNormal("is_split_index2 requires N normal");
  }
  for (const Perm& x : g->elements()) {
    if (n.group->contains(x)) continue;
    if ((x * x).is_identity()) return true;
  }
  return false;
}

Perm embed_left(const Perm& p, int right_degree) {
  std::vector<uint8_t> img(p.degree() + right_degree);
  for (int i = 0; i < p.degree(); ++i) img[i] = static_cast<uint8_t>(p[i]);
  for (int i = 0; i < right_degree; ++i)
    img[p.degree() + i] = static_cast<uint8_t>(p.degree() + i);
  return Perm(std::move(img));
}

Perm embed_right(int left_degree, const Perm& p) {
  std::vector<uint8_t> img(left_degree + p.degree());
  for (int i = 0; i < left_degree; ++i) img[i] = static_cast<uint8_t>(i);
  for (int i = 0; i < p.degree(); ++i)
    img[left_degree + i] = static_cast<uint8_t>(left_degree + p[i]);
  return Perm(std::move(img));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  std::vector<Perm> gens;
  for (const Perm& g : a->generators()) gens.push_back(embed_left(g, b->degree()));
  for (const Perm& g : b->generators()) gens.push_back(embed_right(a->degree(), g));
  GroupPtr prod = generate(gens);
  if (prod->order() != a->order() * b->order()) {
    throw ConsistencyError("direct product closure has wrong order");
  }
  return prod;
}

std::vector<Perm> extend_homomorphism(const FiniteGroup& domain,
                                      const std::vector<Perm>& gen_images) {
  const std::vector<Perm>& gens = domain.generators();
  if (gens.size() != gen_images.size()) {
    throw BadParameters("one image per generator required");
  }
  std::vector<Perm> image(domain.order(), Perm());
  std::vector<bool> known(domain.order(), false);
  std::deque<long> frontier;
  long e_idx = domain.index_of(domain.identity());
  image[e_idx] = Perm::identity(gen_images.empty() ? 0 : gen_images[0].degree());
  known[e_idx] = true;
  frontier.push_back(e_idx);
  while (!frontier.empty()) {
    long xi = frontier.front();
    frontier.pop_front();
    const Perm& x = domain.elements()[xi];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Perm y = x * gens[j];
      long yi = domain.index_of(y);
      Perm img = image[xi] * gen_images[j];
      if (!known[yi]) {
        image[yi] = std::move(img);
        known[yi] = true;
        frontier.push_back(yi);
      } else if (!(image[yi] == img)) {
        throw ActionInvalid("generator images do not respect the relations");
      }
    }
  }
  return image;
}

SemidirectProduct semidirect_product(GroupPtr n, GroupPtr k,
                                     const std::vector<std::vector<Perm>>& action) {
  if (action.size() != k->generators().size()) {
    throw BadParameters("one automorphism per K-generator required");
  }
  const long nn = n->order();
  const int deg = static_cast<int>(nn) + k->degree();
  if (nn + k->degree() > 255) {
    throw CapExceeded("semidirect product degree exceeds 255");
  }

  // N-part: right multiplication on N's own elements.
  std::vector<Perm> gens;
  for (const Perm& x : n->generators()) {
    std::vector<uint8_t> img(deg);
    for (long i = 0; i < nn; ++i)
      img[i] = static_cast<uint8_t>(n->index_of(n->elements()[i] * x));
    for (int i = 0; i < k->degree(); ++i)
      img[nn + i] = static_cast<uint8_t>(nn + i);
    gens.push_back(Perm(std::move(img)));
  }
  std::size_t n_gen_count = gens.size();

  // K-part: the automorphism as a permutation of N's elements, joined with
  // K's own faithful action.
  for (std::size_t j = 0; j < action.size(); ++j) {
    std::vector<Perm> table = extend_homomorphism(*n, action[j]);
    std::vector<uint8_t> img(deg);
    std::vector<bool> hit(nn, false);
    for (long i = 0; i < nn; ++i) {
      long t = n->index_of(table[i]);
      if (t < 0) throw ActionInvalid("automorphism image leaves N");
      img[i] = static_cast<uint8_t>(t);
      hit[t] = true;
    }
    for (long i = 0; i < nn; ++i) {
      if (!hit[i]) throw ActionInvalid("automorphism is not bijective on N");
    }
    const Perm& kg = k->generators()[j];
    for (int i = 0; i < k->degree(); ++i)
      img[nn + i] = static_cast<uint8_t>(nn + kg[i]);
    gens.push_back(Perm(std::move(img)));
  }

  GroupPtr prod = generate(gens);
  if (prod->order() != n->order() * k->order()) {
    throw ActionInvalid("semidirect closure has order " + std::to_string(prod->order()) +
                        ", expected " + std::to_string(n->order() * k->order()));
  }
  SemidirectProduct out;
  out.group = prod;
  std::vector<Perm> ngens(gens.begin(), gens.begin() + n_gen_count);
  std::vector<Perm> kgens(gens.begin() + n_gen_count, gens.end());
  if (ngens.empty()) ngens.push_back(Perm::identity(deg));
  if (kgens.empty()) kgens.push_back(Perm::identity(deg));
  out.normal_part = make_subgroup(prod, ngens);
  out.complement = make_subgroup(prod, kgens);
  return out;
}

WreathProduct wreath_symmetric(GroupPtr h, int t, long order_cap) {
  if (t < 1) throw BadParameters("wreath power must be >= 1");
  const int d = h->degree();
  const int deg = d * t;
  if (deg > 255) throw CapExceeded("wreath degree exceeds 255");

  auto block_perm = [&](const Perm& pi) {
    std::vector<uint8_t> img(deg);
    for (int j = 0; j < t; ++j)
      for (int r = 0; r < d; ++r) img[j * d + r] = static_cast<uint8_t>(pi[j] * d + r);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (const Perm& g : h->generators()) {
    std::vector<uint8_t> img(deg);
    for (int r = 0; r < d; ++r) img[r] = static_cast<uint8_t>(g[r]);
    for (int i = d; i < deg; ++i) img[i] = static_cast<uint8_t>(i);
    gens.push_back(Perm(std::move(img)));
  }
  std::size_t base_gen_count = gens.size();
  std::vector<Perm> top_gens;
  if (t >= 2) {
    std::vector<int> cyc(t);
    for (int i = 0; i < t; ++i) cyc[i] = i;
    top_gens.push_back(block_perm(Perm::from_cycles(t, {cyc})));
    top_gens.push_back(block_perm(Perm::from_cycles(t, {{0, 1}})));
  }
  for (const Perm& g : top_gens) gens.push_back(g);

  GroupPtr w = generate(gens, order_cap);
  WreathProduct out;
  out.group = w;

  std::vector<Perm> base_gens;
  for (std::size_t i = 0; i < base_gen_count; ++i) {
    for (int j = 0; j < t; ++j) {
      std::vector<uint8_t> img(deg);
      for (int i2 = 0; i2 < deg; ++i2) img[i2] = static_cast<uint8_t>(i2);
      const Perm& g = h->generators()[i];
      for (int r = 0; r < d; ++r) img[j * d + r] = static_cast<uint8_t>(j * d + g[r]);
      base_gens.push_back(Perm(std::move(img)));
    }
  }
  if (base_gens.empty()) base_gens.push_back(Perm::identity(deg));
  if (top_gens.empty()) top_gens.push_back(Perm::identity(deg));
  out.base = make_subgroup(w, base_gens);
  out.top = make_subgroup(w, top_gens);
  return out;
}

Subgroup wreath_subgroup(const WreathProduct& ambient, GroupPtr h) {
  int t = ambient.group->degree() / h->degree();
  WreathProduct sub = wreath_symmetric(h, t);
  return make_subgroup(ambient.group, sub.group);
}

bool is_maximal_in(const Subgroup& m) {
  if (m.group->order() == m.ambient->order()) return false;
  CosetDecomposition dec = left_cosets(m);
  for (const Coset& c : dec.cosets) {
    if (m.group->contains(c.representative)) continue;
    std::vector<Perm> gens = m.group->generators();
    gens.push_back(c.representative);
    GroupPtr ext = generate(gens, m.ambient->order());
    if (ext->order() != m.ambient->order()) return false;
  }
  return true;
}

GroupPtr conjugate_group(const FiniteGroup& h, const Perm& g) {
  Perm ginv = g.inverse();
  std::vector<Perm> elems;
  elems.reserve(h.order());
  for (const Perm& x : h.elements()) elems.push_back(ginv * x * g);
  std::sort(elems.begin(), elems.end());
  return group_from_sorted_elements(std::move(elems));
}

Subgroup intersection(GroupPtr ambient, const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Perm> elems;
  const FiniteGroup& small = a.order() <= b.order() ? a : b;
  const FiniteGroup& big = a.order() <= b.order() ? b : a;
  for (const Perm& x : small.elements()) {
    if (big.contains(x)) elems.push_back(x);
  }
  return Subgroup{ambient, group_from_sorted_elements(std::move(elems))};
}

std::pair<std::vector<Perm>, bool> product_set(const FiniteGroup& h, const FiniteGroup& k) {
  std::unordered_set<Perm, PermHash> hk;
  for (const Perm& a : h.elements())
    for (const Perm& b : k.elements()) hk.insert(a * b);
  bool closed = true;
  for (const Perm& a : k.elements()) {
    if (!closed) break;
    for (const Perm& b : h.elements()) {
      if (!hk.count(a * b)) {
        closed = false;
        break;
      }
    }
  }
  std::vector<Perm> out(hk.begin(), hk.end());
  std::sort(out.begin(), out.end());
  return {std::move(out), closed};
}

}  // namespace pcode
