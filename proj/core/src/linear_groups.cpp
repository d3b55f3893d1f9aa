#include "pcode/linear_groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "pcode/classify.hpp"
#include "pcode/errors.hpp"
#include "pcode/group_ops.hpp"
#include "pcode/small_groups.hpp"

namespace pcode {

namespace {

std::mutex cache_mutex;
std::map<std::string, GroupPtr>& cache() {
  static std::map<std::string, GroupPtr> c;
  return c;
}

GroupPtr cached(const std::string& key, const std::function<GroupPtr()>& build) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  GroupPtr g = build();
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache().emplace(key, std::move(g)).first->second;
}

std::mutex field_mutex;
FieldPtr field_of(long q) {
  static std::map<long, FieldPtr> fields;
  std::lock_guard<std::mutex> lock(field_mutex);
  auto it = fields.find(q);
  if (it != fields.end()) return it->second;
  long p = 0, f = 0;
  if (!is_prime_power(q, &p, &f)) {
    throw BadParameters(std::to_string(q) + " is not a prime power");
  }
  FieldPtr field = FiniteField::make(p, f);
  fields.emplace(q, field);
  return field;
}

long require_prime_power(long q, long min_q) {
  long p = 0, f = 0;
  if (!is_prime_power(q, &p, &f) || q < min_q) {
    throw BadParameters("q = " + std::to_string(q) + " out of range");
  }
  return p;
}

// Transvection generators for SL_2(q): upper unipotents over a basis of
// GF(q) plus the Weyl element [[0,1],[-1,0]].
std::vector<Mat2> sl2_matrix_generators(const FieldPtr& field) {
  std::vector<Mat2> gens;
  long basis = 1;  // powers of zeta span GF(q) over GF(p)
  for (long i = 0; i < field->degree(); ++i) {
    gens.push_back(Mat2{field, 1, basis, 0, 1});
    basis = field->mul(basis, field->zeta());
  }
  gens.push_back(Mat2{field, 0, 1, field->neg(1), 0});
  return gens;
}

// Vector index for sl2/gl2 actions: nonzero (u,v) -> u*q + v - 1.
long vec_index(const FiniteField& f, long u, long v) { return u * f.size() + v - 1; }

Perm vector_action(const Mat2& m) {
  const FiniteField& f = *m.field;
  const long q = f.size();
  std::vector<uint8_t> img(q * q - 1);
  for (long u = 0; u < q; ++u) {
    for (long v = 0; v < q; ++v) {
      if (u == 0 && v == 0) continue;
      long u2 = f.add(f.mul(m.a, u), f.mul(m.b, v));
      long v2 = f.add(f.mul(m.c, u), f.mul(m.d, v));
      img[vec_index(f, u, v)] = static_cast<uint8_t>(vec_index(f, u2, v2));
    }
  }
  return Perm(std::move(img));
}

}  // namespace

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{field, field->add(field->mul(a, o.a), field->mul(b, o.c)),
              field->add(field->mul(a, o.b), field->mul(b, o.d)),
              field->add(field->mul(c, o.a), field->mul(d, o.c)),
              field->add(field->mul(c, o.b), field->mul(d, o.d))};
}

Mat2 Mat2::inverse() const {
  long dt = det();
  if (dt == 0) throw BadParameters("matrix is singular");
  long di = field->inv(dt);
  return Mat2{field, field->mul(d, di), field->mul(field->neg(b), di),
              field->mul(field->neg(c), di), field->mul(a, di)};
}

int projective_degree(long q) { return static_cast<int>(q + 1); }

Perm projective_action(const Mat2& m) {
  const FiniteField& f = *m.field;
  const long q = f.size();
  if (m.det() == 0) throw BadParameters("projective action of a singular matrix");
  std::vector<uint8_t> img(q + 1);
  auto point_of = [&](long u, long v) -> long {
    if (u != 0) {
      long ui = f.inv(u);
      return 1 + f.mul(v, ui);
    }
    return 0;  // (0:1)
  };
  // point 0 = (0:1)
  img[0] = static_cast<uint8_t>(point_of(m.b, m.d));
  for (long v = 0; v < q; ++v) {
    long u2 = f.add(m.a, f.mul(m.b, v));
    long v2 = f.add(m.c, f.mul(m.d, v));
    img[1 + v] = static_cast<uint8_t>(point_of(u2, v2));
  }
  return Perm(std::move(img));
}

Perm projective_frobenius(const FiniteField& field) {
  const long q = field.size();
  std::vector<uint8_t> img(q + 1);
  img[0] = 0;
  for (long v = 0; v < q; ++v) img[1 + v] = static_cast<uint8_t>(1 + field.frobenius(v));
  return Perm(std::move(img));
}

GroupPtr psl2(long q) {
  require_prime_power(q, 4);
  return cached("psl2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens;
    for (const Mat2& m : sl2_matrix_generators(f)) gens.push_back(projective_action(m));
    GroupPtr g = generate(gens);
    long expect = q * (q * q - 1) / std::gcd<long>(2, q - 1);
    if (g->order() != expect) throw ConsistencyError("psl2 closure has wrong order");
    return g;
  });
}

GroupPtr pgl2(long q) {
  long p = require_prime_power(q, 4);
  if (p == 2) return psl2(q);
  return cached("pgl2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens;
    for (const Mat2& m : sl2_matrix_generators(f)) gens.push_back(projective_action(m));
    gens.push_back(projective_action(Mat2{f, f->zeta(), 0, 0, 1}));
    GroupPtr g = generate(gens);
    if (g->order() != q * (q * q - 1)) throw ConsistencyError("pgl2 closure has wrong order");
    return g;
  });
}

GroupPtr psigmal2(long q) {
  require_prime_power(q, 4);
  return cached("psigmal2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens = psl2(q)->generators();
    gens.push_back(projective_frobenius(*f));
    return generate(gens);
  });
}

GroupPtr pgammal2(long q) {
  require_prime_power(q, 4);
  return cached("pgammal2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens = pgl2(q)->generators();
    gens.push_back(projective_frobenius(*f));
    return generate(gens);
  });
}

GroupPtr sl2(long q) {
  require_prime_power(q, 3);
  return cached("sl2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens;
    for (const Mat2& m : sl2_matrix_generators(f)) gens.push_back(vector_action(m));
    GroupPtr g = generate(gens);
    if (g->order() != q * (q * q - 1)) throw ConsistencyError("sl2 closure has wrong order");
    return g;
  });
}

GroupPtr gl2(long q) {
  require_prime_power(q, 3);
  return cached("gl2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<Perm> gens;
    for (const Mat2& m : sl2_matrix_generators(f)) gens.push_back(vector_action(m));
    gens.push_back(vector_action(Mat2{f, f->zeta(), 0, 0, 1}));
    GroupPtr g = generate(gens);
    if (g->order() != q * (q - 1) * (q * q - 1)) {
      throw ConsistencyError("gl2 closure has wrong order");
    }
    return g;
  });
}

GroupPtr agl1(long q) {
  require_prime_power(q, 2);
  return cached("agl1:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    std::vector<uint8_t> tr(q), sc(q);
    for (long v = 0; v < q; ++v) {
      tr[v] = static_cast<uint8_t>(f->add(v, 1));
      sc[v] = static_cast<uint8_t>(f->mul(v, f->zeta()));
    }
    std::vector<Perm> gens = {Perm(std::move(tr))};
    if (q > 2) gens.push_back(Perm(std::move(sc)));
    GroupPtr g = generate(gens);
    if (g->order() != q * (q - 1)) throw ConsistencyError("agl1 closure has wrong order");
    return g;
  });
}

GroupPtr agl2(long q) {
  require_prime_power(q, 2);
  return cached("agl2:" + std::to_string(q), [q] {
    FieldPtr f = field_of(q);
    if (q * q > 255) throw CapExceeded("agl2 degree exceeds 255");
    auto idx = [q](long u, long v) { return u * q + v; };
    std::vector<Perm> gens;
    // Translations by the two unit vectors.
    for (int which = 0; which < 2; ++which) {
      std::vector<uint8_t> img(q * q);
      for (long u = 0; u < q; ++u)
        for (long v = 0; v < q; ++v)
          img[idx(u, v)] = static_cast<uint8_t>(which == 0 ? idx(f->add(u, 1), v)
                                                           : idx(u, f->add(v, 1)));
      gens.push_back(Perm(std::move(img)));
    }
    // GL_2(q) generators acting linearly.
    std::vector<Mat2> mats = sl2_matrix_generators(f);
    mats.push_back(Mat2{f, f->zeta(), 0, 0, 1});
    for (const Mat2& m : mats) {
      std::vector<uint8_t> img(q * q);
      for (long u = 0; u < q; ++u) {
        for (long v = 0; v < q; ++v) {
          long u2 = f->add(f->mul(m.a, u), f->mul(m.b, v));
          long v2 = f->add(f->mul(m.c, u), f->mul(m.d, v));
          img[idx(u, v)] = static_cast<uint8_t>(idx(u2, v2));
        }
      }
      gens.push_back(Perm(std::move(img)));
    }
    GroupPtr g = generate(gens);
    long gl_order = q * (q - 1) * (q * q - 1);
    if (g->order() != q * q * gl_order) throw ConsistencyError("agl2 closure has wrong order");
    return g;
  });
}

AlmostSimple extension_t_delta_phi(long q, long k) {
  long p = 0, f = 0;
  is_prime_power(q, &p, &f);
  if (p == 2 || q < 5) throw BadParameters("extension requires odd q");
  if (k < 0 || k >= f) throw BadParameters("extension exponent must satisfy 0 <= k < f");
  GroupPtr g = cached("ext:" + std::to_string(q) + ":" + std::to_string(k), [q, k] {
    FieldPtr field = field_of(q);
    std::vector<Perm> gens = psl2(q)->generators();
    Perm s = projective_action(Mat2{field, field->zeta(), 0, 0, 1});
    for (long i = 0; i < k; ++i) s = s * projective_frobenius(*field);
    gens.push_back(s);
    return generate(gens);
  });
  return AlmostSimple{g, socle_subgroup(g, q)};
}

AlmostSimple m10() {
  AlmostSimple g = extension_t_delta_phi(9, 1);
  if (g.group->order() != 720) throw ConsistencyError("M10 closure has wrong order");
  return g;
}

Subgroup socle_subgroup(GroupPtr g, long q) { return make_subgroup(g, psl2(q)); }

std::string MaximalTag::to_string() const {
  switch (family) {
    case Family::Borel:
      return "borel";
    case Family::DMinus:
      return "d-1";
    case Family::DPlus:
      return "d+1";
    case Family::SubfieldPGL:
      return "pgl:" + std::to_string(q0);
    case Family::SubfieldPSL:
      return "psl:" + std::to_string(q0);
    case Family::A4:
      return "a4";
    case Family::S4:
      return "s4";
    case Family::A5:
      return "a5";
    case Family::PSL:
      return "psl";
  }
  return "?";
}

MaximalTag MaximalTag::parse(const std::string& text) {
  if (text == "borel") return {Family::Borel};
  if (text == "d-1") return {Family::DMinus};
  if (text == "d+1") return {Family::DPlus};
  if (text == "a4") return {Family::A4};
  if (text == "s4") return {Family::S4};
  if (text == "a5") return {Family::A5};
  if (text == "psl") return {Family::PSL};
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    long q0 = std::stol(text.substr(colon + 1));
    if (head == "pgl") return {Family::SubfieldPGL, q0};
    if (head == "psl") return {Family::SubfieldPSL, q0};
  }
  throw BadTag("unknown maximal subgroup tag: " + text);
}

namespace {

bool residue_in(long q, long mod, std::initializer_list<long> classes) {
  long r = ((q % mod) + mod) % mod;
  for (long c : classes) {
    if (r == ((c % mod) + mod) % mod) return true;
  }
  return false;
}

// Least element of the given order, in canonical order.
std::optional<Perm> canonical_element_of_order(const FiniteGroup& g, long m) {
  for (const Perm& x : g.elements()) {
    if (element_order(x) == m) return x;
  }
  return std::nullopt;
}

Subgroup point_stabilizer(GroupPtr g, int point) {
  std::vector<Perm> kept;
  for (const Perm& x : g->elements()) {
    if (x[point] == point) kept.push_back(x);
  }
  return Subgroup{g, group_from_sorted_elements(std::move(kept))};
}

Subgroup setwise_stabilizer_01(GroupPtr g) {
  std::vector<Perm> kept;
  for (const Perm& x : g->elements()) {
    int a = x[0], b = x[1];
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) kept.push_back(x);
  }
  return Subgroup{g, group_from_sorted_elements(std::move(kept))};
}

Subgroup torus_normalizer(GroupPtr g, long torus_order) {
  auto t = canonical_element_of_order(*g, torus_order);
  if (!t) throw SearchFailed("no element of the torus order found");
  GroupPtr c = generate({*t});
  return normalizer(g, *c);
}

// Deterministic (involution, canonical-least order-3 element) search for the
// A4/S4/A5 rows, confirmed by is_isomorphic.
Subgroup search_small_row(GroupPtr g, long target_order, const FiniteGroup& reference) {
  auto u = canonical_element_of_order(*g, 3);
  if (!u) throw SearchFailed("no element of order 3");
  for (const Perm& t : g->elements()) {
    if (element_order(t) != 2) continue;
    GroupPtr cand;
    try {
      cand = generate({t, *u}, target_order);
    } catch (const CapExceeded&) {
      continue;
    }
    if (cand->order() == target_order && is_isomorphic(*cand, reference)) {
      return make_subgroup(g, cand);
    }
  }
  throw SearchFailed("generator search exhausted for order " + std::to_string(target_order));
}

// Projective generators of PSL2(q0) or PGL2(q0) over the prime subfield,
// viewed inside the projective line of GF(q).
Subgroup subfield_subgroup(GroupPtr g, long q, long q0, bool want_pgl) {
  if (!is_prime(q0)) {
    throw BadParameters("subfield rows are supported for prime q0 only");
  }
  FieldPtr f = field_of(q);
  // Elements 0..p-1 of GF(q) form the prime subfield, and integer values
  // below q0 = p encode the same residues.
  std::vector<Perm> gens;
  gens.push_back(projective_action(Mat2{f, 1, 1, 0, 1}));
  gens.push_back(projective_action(Mat2{f, 1, 0, 1, 1}));
  if (want_pgl) {
    // Least primitive root mod q0.
    long root = 0;
    for (long a = 2; a < q0; ++a) {
      long r = a % q0, m = 1;
      while (r != 1) {
        r = (r * a) % q0;
        ++m;
      }
      if (m == q0 - 1) {
        root = a;
        break;
      }
    }
    gens.push_back(projective_action(Mat2{f, root, 0, 0, 1}));
  }
  GroupPtr sub = generate(gens);
  long expect = q0 * (q0 * q0 - 1) / (want_pgl ? 1 : std::gcd<long>(2, q0 - 1));
  if (sub->order() != expect) throw ConsistencyError("subfield row has wrong order");
  return make_subgroup(g, sub);
}

}  // namespace

std::vector<MaximalTag> psl2_maximal_tags(long q) {
  long p = 0, f = 0;
  is_prime_power(q, &p, &f);
  std::vector<MaximalTag> tags;
  using F = MaximalTag::Family;
  tags.push_back({F::Borel});
  if (p == 2) {
    if (q >= 4) tags.push_back({F::DMinus});
    if (q >= 4) tags.push_back({F::DPlus});
    return tags;
  }
  if (q >= 13) tags.push_back({F::DMinus});
  if (q != 7 && q != 9) tags.push_back({F::DPlus});
  // subfield rows
  for (long q0 = 2; q0 * q0 <= q; ++q0) {
    if (q0 * q0 == q && is_prime(q0)) tags.push_back({F::SubfieldPGL, q0});
  }
  for (long r = 3; r < 30; r += 2) {
    if (!is_prime(r)) continue;
    long q0 = std::lround(std::pow(static_cast<double>(q), 1.0 / r));
    for (long cand = std::max<long>(2, q0 - 1); cand <= q0 + 1; ++cand) {
      long pw = 1;
      for (long i = 0; i < r; ++i) pw *= cand;
      if (pw == q && is_prime(cand) && cand >= 2) tags.push_back({F::SubfieldPSL, cand});
    }
  }
  if (is_prime(q) && residue_in(q, 40, {3, -3, 5, 13, -13})) tags.push_back({F::A4});
  if (is_prime(q) && residue_in(q, 8, {1, -1})) tags.push_back({F::S4});
  if ((is_prime(q) && residue_in(q, 10, {1, -1})) ||
      (f == 2 && is_prime(p) && residue_in(p, 10, {3, -3}))) {
    tags.push_back({F::A5});
  }
  return tags;
}

std::vector<MaximalTag> pgl2_maximal_tags(long q) {
  long p = 0, f = 0;
  is_prime_power(q, &p, &f);
  std::vector<MaximalTag> tags;
  using F = MaximalTag::Family;
  if (p == 2) return psl2_maximal_tags(q);
  tags.push_back({F::Borel});
  if (q > 5) tags.push_back({F::DMinus});
  tags.push_back({F::DPlus});
  // Subfield rows need odd prime degree: for q = q0^2 the subgroup PGL2(q0)
  // has all determinants square in GF(q) and falls inside PSL2(q).
  for (long r = 3; r < 30; r += 2) {
    if (!is_prime(r)) continue;
    long q0 = std::lround(std::pow(static_cast<double>(q), 1.0 / r));
    for (long cand = std::max<long>(2, q0 - 1); cand <= q0 + 1; ++cand) {
      long pw = 1;
      for (long i = 0; i < r; ++i) pw *= cand;
      if (pw == q && is_prime(cand)) tags.push_back({F::SubfieldPGL, cand});
    }
  }
  tags.push_back({F::PSL});
  if (is_prime(q) && residue_in(q, 8, {3, -3})) tags.push_back({F::S4});
  return tags;
}

namespace {

bool tag_available(const std::vector<MaximalTag>& tags, const MaximalTag& tag) {
  for (const MaximalTag& t : tags) {
    if (t.family == tag.family && (t.q0 == tag.q0 || tag.q0 == 0)) return true;
  }
  return false;
}

long resolve_q0(const std::vector<MaximalTag>& tags, const MaximalTag& tag) {
  for (const MaximalTag& t : tags) {
    if (t.family == tag.family && (t.q0 == tag.q0 || tag.q0 == 0)) return t.q0;
  }
  return tag.q0;
}

}  // namespace

Subgroup psl2_maximal(long q, const MaximalTag& tag) {
  require_prime_power(q, 4);
  auto tags = psl2_maximal_tags(q);
  if (!tag_available(tags, tag)) {
    throw ConditionViolated("row " + tag.to_string() + " is not defined for PSL2(" +
                            std::to_string(q) + ")");
  }
  GroupPtr g = psl2(q);
  long d = std::gcd<long>(2, q - 1);
  using F = MaximalTag::Family;
  switch (tag.family) {
    case F::Borel:
      return point_stabilizer(g, 0);
    case F::DMinus:
      return setwise_stabilizer_01(g);
    case F::DPlus:
      return torus_normalizer(g, (q + 1) / d);
    case F::SubfieldPGL:
      return subfield_subgroup(g, q, resolve_q0(tags, tag), true);
    case F::SubfieldPSL:
      return subfield_subgroup(g, q, resolve_q0(tags, tag), false);
    case F::A4:
      return search_small_row(g, 12, *alternating_group(4));
    case F::S4:
      return search_small_row(g, 24, *symmetric_group(4));
    case F::A5:
      return search_small_row(g, 60, *alternating_group(5));
    default:
      throw BadTag("tag " + tag.to_string() + " does not apply to PSL2");
  }
}

Subgroup pgl2_maximal(long q, const MaximalTag& tag) {
  long p = require_prime_power(q, 4);
  if (p == 2) return psl2_maximal(q, tag);
  auto tags = pgl2_maximal_tags(q);
  if (!tag_available(tags, tag)) {
    throw ConditionViolated("row " + tag.to_string() + " is not defined for PGL2(" +
                            std::to_string(q) + ")");
  }
  GroupPtr g = pgl2(q);
  using F = MaximalTag::Family;
  switch (tag.family) {
    case F::Borel:
      return point_stabilizer(g, 0);
    case F::DMinus:
      return setwise_stabilizer_01(g);
    case F::DPlus:
      return torus_normalizer(g, q + 1);
    case F::SubfieldPGL:
      return subfield_subgroup(g, q, resolve_q0(tags, tag), true);
    case F::PSL:
      return make_subgroup(g, psl2(q));
    case F::S4:
      return search_small_row(g, 24, *symmetric_group(4));
    default:
      throw BadTag("tag " + tag.to_string() + " does not apply to PGL2");
  }
}

long psl2_maximal_order(long q, const MaximalTag& tag) {
  long d = std::gcd<long>(2, q - 1);
  using F = MaximalTag::Family;
  switch (tag.family) {
    case F::Borel:
      return q * (q - 1) / d;
    case F::DMinus:
      return 2 * (q - 1) / d;
    case F::DPlus:
      return 2 * (q + 1) / d;
    case F::SubfieldPGL:
      return tag.q0 * (tag.q0 * tag.q0 - 1);
    case F::SubfieldPSL:
      return tag.q0 * (tag.q0 * tag.q0 - 1) / std::gcd<long>(2, tag.q0 - 1);
    case F::A4:
      return 12;
    case F::S4:
      return 24;
    case F::A5:
      return 60;
    default:
      throw BadTag("bad PSL2 row tag");
  }
}

long pgl2_maximal_order(long q, const MaximalTag& tag) {
  using F = MaximalTag::Family;
  switch (tag.family) {
    case F::Borel:
      return q * (q - 1);
    case F::DMinus:
      return 2 * (q - 1);
    case F::DPlus:
      return 2 * (q + 1);
    case F::SubfieldPGL:
      return tag.q0 * (tag.q0 * tag.q0 - 1);
    case F::PSL:
      return q * (q * q - 1) / 2;
    case F::S4:
      return 24;
    default:
      throw BadTag("bad PGL2 row tag");
  }
}

namespace {

IsoType cyclic_or_trivial(long n) {
  return n <= 1 ? IsoType::cyclic(1) : IsoType::cyclic(n);
}

}  // namespace

IsoType psl2_row_sylow_type(long q, const MaximalTag& tag) {
  long p = 0, f = 0;
  is_prime_power(q, &p, &f);
  using F = MaximalTag::Family;
  if (p == 2) {
    switch (tag.family) {
      case F::Borel:
        return IsoType::elementary_abelian(2, f);
      case F::DMinus:
      case F::DPlus:
        return IsoType::cyclic(2);  // 2(q -+ 1) has 2-part 2 for even q
      default:
        throw BadTag("bad even-q PSL2 row tag");
    }
  }
  switch (tag.family) {
    case F::Borel:
      return cyclic_or_trivial(two_part(q - 1) / 2);
    case F::DMinus:
      return q % 4 == 1 ? dihedral_tag(two_part(q - 1)) : IsoType::cyclic(2);
    case F::DPlus:
      return q % 4 == 3 ? dihedral_tag(two_part(q + 1)) : IsoType::cyclic(2);
    case F::SubfieldPGL:
      return tag.q0 % 4 == 1 ? dihedral_tag(2 * two_part(tag.q0 - 1))
                             : dihedral_tag(2 * two_part(tag.q0 + 1));
    case F::SubfieldPSL:
      return tag.q0 % 4 == 1 ? dihedral_tag(two_part(tag.q0 - 1))
                             : dihedral_tag(two_part(tag.q0 + 1));
    case F::A4:
      return IsoType::elementary_abelian(2, 2);
    case F::S4:
      return IsoType::dihedral(8);
    case F::A5:
      // |A5|_2 = 4, so the Sylow 2-subgroup is the Klein group.
      return IsoType::elementary_abelian(2, 2);
    default:
      throw BadTag("bad PSL2 row tag");
  }
}

IsoType pgl2_row_sylow_type(long q, const MaximalTag& tag) {
  long p = 0, f = 0;
  is_prime_power(q, &p, &f);
  if (p == 2) return psl2_row_sylow_type(q, tag);
  using F = MaximalTag::Family;
  switch (tag.family) {
    case F::Borel:
      return cyclic_or_trivial(two_part(q - 1));
    case F::DMinus:
      return dihedral_tag(2 * two_part(q - 1));
    case F::DPlus:
      return dihedral_tag(2 * two_part(q + 1));
    case F::SubfieldPGL:
      return tag.q0 % 4 == 1 ? dihedral_tag(2 * two_part(tag.q0 - 1))
                             : dihedral_tag(2 * two_part(tag.q0 + 1));
    case F::PSL:
      return q % 4 == 1 ? dihedral_tag(two_part(q - 1)) : dihedral_tag(two_part(q + 1));
    case F::S4:
      return IsoType::dihedral(8);
    default:
      throw BadTag("bad PGL2 row tag");
  }
}

Subgroup preimage_in_sl2(long q, const Subgroup& m_in_psl2) {
  long p = require_prime_power(q, 3);
  if (p == 2) throw BadParameters("preimage_in_sl2 requires odd q");
  GroupPtr big = sl2(q);
  FieldPtr f = field_of(q);
  const long qq = q;

  // Induced projective permutation of an SL2 element given as a permutation
  // of the nonzero vectors.
  auto project = [&](const Perm& s) {
    std::vector<uint8_t> img(qq + 1);
    auto apply = [&](long u, long v, long* u2, long* v2) {
      long w = s[vec_index(*f, u, v)] + 1;
      *u2 = w / qq;
      *v2 = w % qq;
    };
    auto point_of = [&](long u, long v) -> long {
      if (u != 0) return 1 + f->mul(v, f->inv(u));
      return 0;
    };
    long u2, v2;
    apply(0, 1, &u2, &v2);
    img[0] = static_cast<uint8_t>(point_of(u2, v2));
    for (long v = 0; v < qq; ++v) {
      apply(1, v, &u2, &v2);
      img[1 + v] = static_cast<uint8_t>(point_of(u2, v2));
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> kept;
  for (const Perm& s : big->elements()) {
    if (m_in_psl2.group->contains(project(s))) kept.push_back(s);
  }
  Subgroup out{big, group_from_sorted_elements(std::move(kept))};
  if (out.group->order() != 2 * m_in_psl2.group->order()) {
    throw ConsistencyError("preimage has wrong order");
  }
  return out;
}

}  // namespace pcode
