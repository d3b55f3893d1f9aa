#pragma once

#include "pcode/classify.hpp"
#include "pcode/group.hpp"

namespace pcode {

// Construction library for the standard small groups. The two-generator
// families (cyclic, dihedral, generalized quaternion, semidihedral, modular)
// and elementary abelians are built in their right regular representation,
// so classify_2group(small2group(t)) == t holds by construction. Symmetric
// and alternating groups act naturally on n points.
//
// All constructors are memoized; repeated calls return the same shared
// instance.

GroupPtr cyclic_group(long n);
GroupPtr dihedral_group(long order);          // order = 2m, m >= 2
GroupPtr quaternion_group(long order);        // order = 2^n >= 8
GroupPtr semidihedral_group(long order);      // order = 2^n >= 16
GroupPtr modular_group(long order);           // order = 2^n >= 16
GroupPtr elementary_abelian_group(long p, long k);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);

GroupPtr small2group(const IsoType& tag);

}  // namespace pcode
