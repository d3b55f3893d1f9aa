#include "pcode/cayley.hpp"

#include <algorithm>
#include <unordered_set>

#include "pcode/errors.hpp"
#include "pcode/lattice.hpp"
#include "pcode/perfect_code.hpp"

namespace pcode {

CayleyGraph make_cayley_graph(GroupPtr g, std::vector<Perm> connection) {
  std::sort(connection.begin(), connection.end());
  connection.erase(std::unique(connection.begin(), connection.end()), connection.end());
  for (const Perm& s : connection) {
    if (!g->contains(s)) throw BadSubset("connection element outside the group");
    if (s.is_identity()) throw BadSubset("connection set must avoid the identity");
  }
  for (const Perm& s : connection) {
    Perm si = s.inverse();
    if (!std::binary_search(connection.begin(), connection.end(), si)) {
      throw BadSubset("connection set must be inverse-closed");
    }
  }
  return CayleyGraph{std::move(g), std::move(connection)};
}

CodeCheckReport is_perfect_code_in_graph(const CayleyGraph& graph,
                                         const std::vector<Perm>& code) {
  const FiniteGroup& g = *graph.group;
  std::vector<bool> in_code(g.order(), false);
  for (const Perm& c : code) {
    long idx = g.index_of(c);
    if (idx < 0) throw BadSubset("code vertex outside the group");
    in_code[idx] = true;
  }
  CodeCheckReport report;
  report.independent = true;
  report.domination.assign(g.order(), 0);
  for (long v = 0; v < g.order(); ++v) {
    const Perm& vert = g.elements()[v];
    int count = 0;
    for (const Perm& s : graph.connection) {
      long w = g.index_of(s * vert);
      if (in_code[w]) ++count;
    }
    report.domination[v] = count;
    if (in_code[v] && count > 0) report.independent = false;
  }
  report.verdict = report.independent;
  for (long v = 0; v < g.order() && report.verdict; ++v) {
    if (!in_code[v] && report.domination[v] != 1) report.verdict = false;
  }
  return report;
}

std::vector<Perm> connection_set_from_transversal(const Subgroup& h,
                                                  const std::vector<Perm>& transversal) {
  if (!validate_transversal(*h.ambient, *h.group, transversal)) {
    throw InvalidTransversal("connection_set_from_transversal requires a valid transversal");
  }
  // Normalize the H-coset representative to e, then drop e.
  std::vector<Perm> s;
  for (const Perm& t : transversal) {
    if (h.group->contains(t)) continue;  // the H-coset; replaced by e
    s.push_back(t);
  }
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Right-coset bookkeeping for the oracle, written independently of the
// perfect-code engine's left-coset search.
struct OracleState {
  const FiniteGroup* g;
  std::vector<std::vector<long>> coset_members;  // element indices per coset
  std::vector<long> coset_of;                    // element index -> coset
  std::vector<long> inverse_of;                  // element index -> element index
  std::vector<long> chosen;                      // coset -> element index or -1
  long remaining = 0;

  bool admissible(long coset, long elem) const {
    long inv = inverse_of[elem];
    long partner = coset_of[inv];
    if (partner == coset) return inv == elem;
    return chosen[partner] == -1;
  }

  bool solve() {
    if (remaining == 0) return true;
    // Smallest admissible-candidate count; ties by coset index.
    long pick = -1;
    std::vector<long> pick_cands;
    for (std::size_t c = 0; c < coset_members.size(); ++c) {
      if (chosen[c] != -1) continue;
      std::vector<long> cands;
      for (long e : coset_members[c]) {
        if (admissible(static_cast<long>(c), e)) cands.push_back(e);
      }
      if (pick == -1 || cands.size() < pick_cands.size()) {
        pick = static_cast<long>(c);
        pick_cands = std::move(cands);
        if (pick_cands.empty()) return false;
      }
    }
    for (long e : pick_cands) {
      long inv = inverse_of[e];
      long partner = coset_of[inv];
      chosen[pick] = e;
      remaining -= 1;
      if (partner != pick) {
        chosen[partner] = inv;
        remaining -= 1;
      }
      if (solve()) return true;
      chosen[pick] = -1;
      remaining += 1;
      if (partner != pick) {
        chosen[partner] = -1;
        remaining += 1;
      }
    }
    return false;
  }
};

}  // namespace

bool oracle_decide(const Subgroup& h, long index_cap) {
  const FiniteGroup& g = *h.ambient;
  const FiniteGroup& sub = *h.group;
  long index = g.order() / sub.order();
  if (index > index_cap) {
    throw CapExceeded("oracle index " + std::to_string(index) + " exceeds cap");
  }

  OracleState st;
  st.g = &g;
  st.coset_of.assign(g.order(), -1);
  st.inverse_of.resize(g.order());
  for (long i = 0; i < g.order(); ++i) {
    st.inverse_of[i] = g.index_of(g.elements()[i].inverse());
  }
  // Right cosets Hx, canonical scan.
  for (long i = 0; i < g.order(); ++i) {
    if (st.coset_of[i] != -1) continue;
    long c = static_cast<long>(st.coset_members.size());
    std::vector<long> members;
    for (const Perm& s : sub.elements()) {
      long m = g.index_of(s * g.elements()[i]);
      st.coset_of[m] = c;
      members.push_back(m);
    }
    std::sort(members.begin(), members.end());
    st.coset_members.push_back(std::move(members));
  }
  st.chosen.assign(st.coset_members.size(), -1);
  st.remaining = static_cast<long>(st.coset_members.size());

  // The H-coset is fixed to e.
  long e_idx = g.index_of(g.identity());
  st.chosen[st.coset_of[e_idx]] = e_idx;
  st.remaining -= 1;

  return st.solve();
}

std::vector<std::pair<Subgroup, bool>> brute_subgroup_survey(GroupPtr g) {
  std::vector<std::pair<Subgroup, bool>> out;
  for (Subgroup& h : all_subgroups(g)) {
    bool via_oracle = oracle_decide(h);
    bool via_engine = auto_check(h).is_perfect_code;
    if (via_oracle != via_engine) {
      throw ConsistencyError("oracle and engine disagree on a subgroup of order " +
                             std::to_string(h.group->order()));
    }
    out.emplace_back(std::move(h), via_oracle);
  }
  return out;
}

std::vector<std::pair<long, long>> edge_list(const CayleyGraph& graph) {
  const FiniteGroup& g = *graph.group;
  std::vector<std::pair<long, long>> edges;
  for (long v = 0; v < g.order(); ++v) {
    for (const Perm& s : graph.connection) {
      long w = g.index_of(s * g.elements()[v]);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace pcode
