#include "pcode/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"

namespace pcode {

namespace {

// Key for deduplicating subgroups: the sorted canonical indices of the
// elements inside the ambient group.
struct IndexKeyHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<long> index_key(const FiniteGroup& ambient, const FiniteGroup& sub) {
  std::vector<long> key;
  key.reserve(sub.order());
  for (const Perm& x : sub.elements()) key.push_back(ambient.index_of(x));
  return key;
}

}  // namespace

std::vector<Subgroup> all_subgroups(GroupPtr g, long lattice_cap) {
  if (g->order() > lattice_cap) {
    throw CapExceeded("subgroup lattice enumeration capped at order " +
                      std::to_string(lattice_cap));
  }

  std::unordered_map<std::vector<long>, std::size_t, IndexKeyHash> seen;
  std::vector<GroupPtr> subs;
  std::deque<std::size_t> todo;

  auto add = [&](GroupPtr h) {
    std::vector<long> key = index_key(*g, *h);
    auto [it, fresh] = seen.emplace(std::move(key), subs.size());
    if (fresh) {
      subs.push_back(std::move(h));
      todo.push_back(subs.size() - 1);
    }
  };

  add(trivial_group(g->degree()));
  for (const Perm& x : g->elements()) {
    if (!x.is_identity()) add(generate({x}));
  }

  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    GroupPtr h = subs[i];
    if (h->order() == g->order()) continue;
    // <H, x> = <H, hx>, so one extension attempt per coset of H suffices.
    std::vector<bool> used(g->order(), false);
    for (long ei = 0; ei < g->order(); ++ei) {
      if (used[ei]) continue;
      const Perm& rep = g->elements()[ei];
      for (const Perm& s : h->elements()) used[g->index_of(rep * s)] = true;
      if (h->contains(rep)) continue;
      std::vector<Perm> gens = h->generators();
      gens.push_back(rep);
      add(generate(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (GroupPtr& h : subs) out.push_back(Subgroup{g, std::move(h)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.group->order() != b.group->order()) return a.group->order() < b.group->order();
    return a.group->elements() < b.group->elements();
  });
  return out;
}

std::vector<Subgroup> maximal_subgroups(GroupPtr g, long lattice_cap) {
  std::vector<Subgroup> subs = all_subgroups(g, lattice_cap);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup& m = subs[i];
    if (m.group->order() == g->order()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (j == i) continue;
      const Subgroup& k = subs[j];
      if (k.group->order() <= m.group->order() || k.group->order() == g->order()) continue;
      if (is_subset_group(*m.group, *k.group)) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::optional<Subgroup> exists_overgroup_of_type(const Subgroup& h,
                                                 const std::vector<IsoType::Kind>& kinds) {
  long n = h.group->order();
  if ((n & (n - 1)) != 0) {
    throw NotTwoGroup("exists_overgroup_of_type requires a 2-subgroup");
  }
  Subgroup norm = normalizer(h);
  for (const Perm& a : norm.group->elements()) {
    if (h.group->contains(a)) continue;
    if (!h.group->contains(a * a)) continue;
    std::vector<Perm> gens = h.group->generators();
    gens.push_back(a);
    GroupPtr k = generate(gens);
    if (k->order() != 2 * n) continue;  // cannot happen: a normalizes H, a^2 in H
    IsoType t = classify_2group(*k);
    for (IsoType::Kind kind : kinds) {
      if (t.kind == kind) return make_subgroup(h.ambient, k);
    }
  }
  return std::nullopt;
}

}  // namespace pcode
