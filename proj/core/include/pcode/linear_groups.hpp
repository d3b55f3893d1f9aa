#pragma once

#include <optional>

#include "pcode/classify.hpp"
#include "pcode/finite_field.hpp"
#include "pcode/group.hpp"

namespace pcode {

// 2x2 matrix over a finite field, entries encoded as field elements.
struct Mat2 {
  FieldPtr field;
  long a, b, c, d;

  long det() const { return field->sub(field->mul(a, d), field->mul(b, c)); }
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
};

// The projective line over GF(q): point 0 is (0:1), point 1+v is (1:v) for
// v in GF(q) in encoding order; degree q+1.
int projective_degree(long q);
// Permutation of the projective line induced by an invertible matrix.
Perm projective_action(const Mat2& m);
// Permutation induced by the Frobenius map on coordinates.
Perm projective_frobenius(const FiniteField& field);

// --- group families --------------------------------------------------------

// On the projective line (degree q+1):
GroupPtr psl2(long q);
GroupPtr pgl2(long q);
GroupPtr psigmal2(long q);   // PSL_2(q) x| <phi>
GroupPtr pgammal2(long q);   // PGL_2(q) x| <phi>

// On the nonzero vectors of GF(q)^2 (degree q^2-1):
GroupPtr sl2(long q);
GroupPtr gl2(long q);

// Affine groups: AGL_1(q) on q points, AGL_2(q) on q^2 points.
GroupPtr agl1(long q);
GroupPtr agl2(long q);

struct AlmostSimple {
  GroupPtr group;
  Subgroup socle;
};

// <PSL_2(q), g*phi^k> inside PGammaL_2(q), with g the diagonal matrix
// diag(zeta,1) of non-square determinant. k = 0 gives PGL_2(q).
AlmostSimple extension_t_delta_phi(long q, long k);

// The Mathieu group M10 = extension_t_delta_phi(9, 1), of order 720.
AlmostSimple m10();

// The PSL_2(q) part of an overgroup on the same projective line.
Subgroup socle_subgroup(GroupPtr g, long q);

// --- maximal subgroup rows --------------------------------------------------

struct MaximalTag {
  enum class Family { Borel, DMinus, DPlus, SubfieldPGL, SubfieldPSL, A4, S4, A5, PSL };
  Family family;
  long q0 = 0;  // subfield rows only

  std::string to_string() const;
  static MaximalTag parse(const std::string& text);
};

// The row tags constructable for PSL_2(q) / PGL_2(q) at this q, in table order.
std::vector<MaximalTag> psl2_maximal_tags(long q);
std::vector<MaximalTag> pgl2_maximal_tags(long q);

// Constructs the named maximal subgroup; raises ConditionViolated when the
// row's condition fails at this q, SearchFailed if a bounded generator
// search is exhausted.
Subgroup psl2_maximal(long q, const MaximalTag& tag);
Subgroup pgl2_maximal(long q, const MaximalTag& tag);

// Expected order and Sylow 2-subgroup type of a row, per the tables.
long psl2_maximal_order(long q, const MaximalTag& tag);
long pgl2_maximal_order(long q, const MaximalTag& tag);
IsoType psl2_row_sylow_type(long q, const MaximalTag& tag);
IsoType pgl2_row_sylow_type(long q, const MaximalTag& tag);

// Full preimage of M <= PSL_2(q) in SL_2(q) (q odd); contains the center and
// has order 2|M|.
Subgroup preimage_in_sl2(long q, const Subgroup& m_in_psl2);

}  // namespace pcode
