#pragma once

#include <optional>

#include "pcode/classify.hpp"
#include "pcode/group.hpp"

namespace pcode {

inline constexpr long kDefaultLatticeCap = 10'000;

// Complete list of subgroups up to equality, via cyclic-subgroup seeding and
// closure extension. Output is sorted by (order, element list), so it is
// deterministic. Raises CapExceeded when |G| exceeds the lattice cap.
std::vector<Subgroup> all_subgroups(GroupPtr g, long lattice_cap = kDefaultLatticeCap);

std::vector<Subgroup> maximal_subgroups(GroupPtr g, long lattice_cap = kDefaultLatticeCap);

// Searches K = <H, a> over a in N_G(H) \ H with a^2 in H (canonical order)
// and returns the first K of order 2|H| whose classify_2group kind is in
// `kinds`. H must be a 2-subgroup.
std::optional<Subgroup> exists_overgroup_of_type(const Subgroup& h,
                                                 const std::vector<IsoType::Kind>& kinds);

}  // namespace pcode
