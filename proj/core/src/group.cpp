#include "pcode/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"

namespace pcode {

bool FiniteGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

long FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<long>(it - elements_.begin());
}

GroupPtr FiniteGroup::sylow2_group() const {
  std::call_once(sylow_once_, [this] {
    sylow_cache_ = sylow2(shared_from_this()).group;
  });
  return sylow_cache_;
}

GroupPtr generate(std::vector<Perm> gens, long order_cap) {
  if (gens.empty()) {
    throw BadParameters("generate() requires a nonempty generator list");
  }
  const int degree = gens[0].degree();
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generators have mixed degrees");
    }
  }

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  Perm e = Perm::identity(degree);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (static_cast<long>(seen.size()) > order_cap) {
          throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
        }
        frontier.push_back(std::move(y));
      }
    }
  }

  std::vector<Perm> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  // Drop identity generators unless the group is trivial.
  std::vector<Perm> kept;
  for (Perm& g : gens) {
    if (!g.is_identity()) kept.push_back(std::move(g));
  }
  if (kept.empty()) kept.push_back(e);
  return GroupPtr(new FiniteGroup(degree, std::move(kept), std::move(elements)));
}

GroupPtr trivial_group(int degree) {
  Perm e = Perm::identity(degree);
  return GroupPtr(new FiniteGroup(degree, {e}, {e}));
}

GroupPtr group_from_sorted_elements(std::vector<Perm> sorted_elements) {
  if (sorted_elements.empty()) {
    throw BadParameters("element set must be nonempty");
  }
  const int degree = sorted_elements[0].degree();
  // Greedy generating set: walk the canonical order, adding any element not
  // yet in the closure of the picked generators. The final closure check
  // doubles as validation that the input set really is a group.
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> closed;
  closed.insert(Perm::identity(degree));
  for (const Perm& x : sorted_elements) {
    if (closed.count(x)) continue;
    gens.push_back(x);
    std::deque<Perm> frontier;
    for (const Perm& c : closed) frontier.push_back(c);
    std::unordered_set<Perm, PermHash> next(closed);
    while (!frontier.empty()) {
      Perm a = std::move(frontier.front());
      frontier.pop_front();
      for (const Perm& g : gens) {
        Perm b = a * g;
        if (next.insert(b).second) frontier.push_back(std::move(b));
      }
    }
    closed = std::move(next);
    if (closed.size() > sorted_elements.size()) {
      throw ConsistencyError("element set is not closed under products");
    }
  }
  if (closed.size() != sorted_elements.size()) {
    throw ConsistencyError("element set is not closed under products");
  }
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  return GroupPtr(new FiniteGroup(degree, std::move(gens), std::move(sorted_elements)));
}

bool is_subset_group(const FiniteGroup& inner, const FiniteGroup& outer) {
  if (inner.degree() != outer.degree()) return false;
  if (inner.order() > outer.order()) return false;
  for (const Perm& x : inner.elements()) {
    if (!outer.contains(x)) return false;
  }
  return true;
}

Subgroup make_subgroup(GroupPtr ambient, GroupPtr group) {
  if (!is_subset_group(*group, *ambient)) {
    throw NotSubgroup("group is not contained in the ambient group");
  }
  return Subgroup{std::move(ambient), std::move(group)};
}

Subgroup make_subgroup(GroupPtr ambient, const std::vector<Perm>& gens, long order_cap) {
  GroupPtr h = generate(gens, order_cap);
  return make_subgroup(std::move(ambient), std::move(h));
}

Subgroup whole_group(GroupPtr g) { return Subgroup{g, g}; }

Subgroup trivial_subgroup(GroupPtr g) {
  int degree = g->degree();
  return Subgroup{std::move(g), trivial_group(degree)};
}

namespace {

CosetDecomposition cosets_impl(const Subgroup& h, bool left) {
  const FiniteGroup& g = *h.ambient;
  const FiniteGroup& sub = *h.group;
  std::vector<bool> used(g.order(), false);
  CosetDecomposition out;
  out.left = left;
  for (long i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    const Perm& rep = g.elements()[i];
    Coset c;
    c.members.reserve(sub.order());
    for (const Perm& s : sub.elements()) {
      Perm m = left ? rep * s : s * rep;
      long idx = g.index_of(m);
      if (idx < 0) throw NotSubgroup("subgroup element leaves the ambient group");
      used[idx] = true;
      c.members.push_back(std::move(m));
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();  // rep itself is minimal: cosets are
                                           // scanned in canonical order, so the
                                           // first unused element is the least
    out.cosets.push_back(std::move(c));
  }
  return out;
}

}  // namespace

CosetDecomposition left_cosets(const Subgroup& h) { return cosets_impl(h, true); }
CosetDecomposition right_cosets(const Subgroup& h) { return cosets_impl(h, false); }

std::vector<Perm> double_coset(const Subgroup& h, const Perm& a) {
  if (!h.ambient->contains(a)) {
    throw ElementOutsideGroup("double_coset: element outside the ambient group");
  }
  std::unordered_set<Perm, PermHash> acc;
  for (const Perm& h1 : h.group->elements()) {
    Perm h1a = h1 * a;
    for (const Perm& h2 : h.group->elements()) {
      acc.insert(h1a * h2);
    }
  }
  std::vector<Perm> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end());
  return out;
}

long two_part(long n) {
  long t = 1;
  while (n % 2 == 0) {
    n /= 2;
    t *= 2;
  }
  return t;
}

}  // namespace pcode
