#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pcode/permutation.hpp"

namespace pcode {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr long kDefaultOrderCap = 2'000'000;

// A finite permutation group with its element set fully materialized at
// construction time, after which the object is immutable (frozen) and may be
// shared freely across threads. Elements are stored sorted in canonical
// (lexicographic) order, so every element has a stable canonical index.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  Perm identity() const { return Perm::identity(degree_); }

  bool contains(const Perm& p) const;
  // Canonical index of p in elements(), or -1 if absent.
  long index_of(const Perm& p) const;

  // Memoized Sylow 2-subgroup of this group (see sylow2() in group_ops.hpp);
  // computed once on first use, thread safe.
  GroupPtr sylow2_group() const;

 private:
  FiniteGroup(int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements)
      : degree_(degree),
        generators_(std::move(generators)),
        elements_(std::move(sorted_elements)) {}

  friend GroupPtr generate(std::vector<Perm> gens, long order_cap);
  friend GroupPtr group_from_sorted_elements(std::vector<Perm> sorted_elements);
  friend GroupPtr trivial_group(int degree);

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;

  mutable std::once_flag sylow_once_;
  mutable GroupPtr sylow_cache_;
};

// Closure of a nonempty generating set (inductive/Dimino-style with a hash
// set keyed on the image arrays). Exceeding the cap raises CapExceeded,
// never silent truncation.
GroupPtr generate(std::vector<Perm> gens, long order_cap = kDefaultOrderCap);

GroupPtr trivial_group(int degree);

// Builds a group directly from its full (sorted, duplicate-free) element
// set. A small generating set is extracted greedily; raises ConsistencyError
// if the set is not actually closed.
GroupPtr group_from_sorted_elements(std::vector<Perm> sorted_elements);

// H <= G with the ambient group kept alongside.
struct Subgroup {
  GroupPtr ambient;
  GroupPtr group;

  long order() const { return group->order(); }
  long index() const { return ambient->order() / group->order(); }
};

// Verifies group <= ambient elementwise.
Subgroup make_subgroup(GroupPtr ambient, GroupPtr group);
Subgroup make_subgroup(GroupPtr ambient, const std::vector<Perm>& gens,
                       long order_cap = kDefaultOrderCap);
Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);

bool is_subset_group(const FiniteGroup& inner, const FiniteGroup& outer);

struct Coset {
  Perm representative;  // canonical: least member
  std::vector<Perm> members;
};

struct CosetDecomposition {
  bool left = true;
  std::vector<Coset> cosets;  // ordered by representative, canonical order
};

CosetDecomposition left_cosets(const Subgroup& h);
CosetDecomposition right_cosets(const Subgroup& h);

// The set {h1 * a * h2 : h1,h2 in H} as a sorted element list.
std::vector<Perm> double_coset(const Subgroup& h, const Perm& a);

// Largest power of 2 dividing n.
long two_part(long n);

}  // namespace pcode
