#pragma once

#include <utility>
#include <vector>

#include "pcode/group.hpp"

namespace pcode {

// Cay(G,S): vertices are the group elements, g is adjacent to sg for each s
// in the inverse-closed connection set S (identity excluded). Adjacency is
// computed on the fly; no edge list is stored.
struct CayleyGraph {
  GroupPtr group;
  std::vector<Perm> connection;  // sorted canonically
};

// Validates S = S^-1 and e not in S.
CayleyGraph make_cayley_graph(GroupPtr g, std::vector<Perm> connection);

struct CodeCheckReport {
  bool independent = false;
  std::vector<int> domination;  // per vertex: count of neighbors inside C
  bool verdict = false;
};

// Definition-level check: C independent and every outside vertex dominated
// exactly once.
CodeCheckReport is_perfect_code_in_graph(const CayleyGraph& graph,
                                         const std::vector<Perm>& code);

// S = L \ {e} for an inverse-closed left transversal L with the H-coset
// representative normalized to e; H is then a perfect code of Cay(G,S).
std::vector<Perm> connection_set_from_transversal(const Subgroup& h,
                                                  const std::vector<Perm>& transversal);

inline constexpr long kDefaultOracleIndexCap = 4096;

// Independent decision procedure: exhaustive backtracking selection of one
// element per *right* coset of H, constrained to inverse-closure, with the
// H-coset fixed to e. Shares no search code with the perfect-code engine.
bool oracle_decide(const Subgroup& h, long index_cap = kDefaultOracleIndexCap);

// All subgroups decided by both engines; a disagreement is a hard error.
std::vector<std::pair<Subgroup, bool>> brute_subgroup_survey(GroupPtr g);

// Edge list as pairs of canonical element indices, each edge once, sorted.
std::vector<std::pair<long, long>> edge_list(const CayleyGraph& graph);

}  // namespace pcode
