#include "pcode/small_groups.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "pcode/errors.hpp"
#include "pcode/finite_field.hpp"

namespace pcode {

namespace {

std::mutex registry_mutex;
std::map<std::string, GroupPtr>& registry() {
  static std::map<std::string, GroupPtr> r;
  return r;
}

GroupPtr cached(const std::string& key, const std::function<GroupPtr()>& build) {
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  GroupPtr g = build();
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry().emplace(key, std::move(g)).first->second;
}

// Regular representation of <x> x| <y> with |x| = m, |y| = 2, x^y = x^k.
// Element x^i y^j has index j*m + i; generators act by right multiplication.
GroupPtr two_generator_regular(long m, long k, bool quaternion) {
  const long n = 2 * m;
  if (n > 255) throw CapExceeded("regular representation degree exceeds 255");
  auto idx = [m](long i, long j) { return j * m + i; };
  auto mod = [m](long v) { return ((v % m) + m) % m; };
  // (i1,j1) * (i2,j2) = (i1 + k^{j1} i2 [+ m/2 if quaternion and j1=j2=1], j1+j2)
  auto mul = [&](long i1, long j1, long i2, long j2) {
    long i = mod(i1 + (j1 ? mod(k * i2) : i2));
    long j = (j1 + j2) % 2;
    if (quaternion && j1 == 1 && j2 == 1) i = mod(i + m / 2);
    return idx(i, j);
  };
  std::vector<uint8_t> gx(n), gy(n);
  for (long j = 0; j < 2; ++j) {
    for (long i = 0; i < m; ++i) {
      gx[idx(i, j)] = static_cast<uint8_t>(mul(i, j, 1, 0));
      gy[idx(i, j)] = static_cast<uint8_t>(mul(i, j, 0, 1));
    }
  }
  return generate({Perm(std::move(gx)), Perm(std::move(gy))});
}

bool power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

GroupPtr cyclic_group(long n) {
  if (n < 1 || n > 255) throw BadParameters("cyclic order out of range");
  return cached("cyclic:" + std::to_string(n), [n]() -> GroupPtr {
    if (n == 1) return trivial_group(1);
    std::vector<int> cyc(n);
    for (long i = 0; i < n; ++i) cyc[i] = static_cast<int>(i);
    return generate({Perm::from_cycles(static_cast<int>(n), {cyc})});
  });
}

GroupPtr dihedral_group(long order) {
  if (order < 4 || order % 2 != 0) {
    throw BadParameters("dihedral order must be an even number >= 4");
  }
  return cached("dihedral:" + std::to_string(order), [order] {
    return two_generator_regular(order / 2, order / 2 - 1, false);
  });
}

GroupPtr quaternion_group(long order) {
  if (!power_of_two(order) || order < 8) {
    throw BadParameters("generalized quaternion order must be a 2-power >= 8");
  }
  return cached("quaternion:" + std::to_string(order), [order] {
    return two_generator_regular(order / 2, order / 2 - 1, true);
  });
}

GroupPtr semidihedral_group(long order) {
  if (!power_of_two(order) || order < 16) {
    throw BadParameters("semidihedral order must be a 2-power >= 16");
  }
  return cached("semidihedral:" + std::to_string(order), [order] {
    return two_generator_regular(order / 2, order / 4 - 1, false);
  });
}

GroupPtr modular_group(long order) {
  if (!power_of_two(order) || order < 16) {
    throw BadParameters("modular order must be a 2-power >= 16");
  }
  return cached("modular:" + std::to_string(order), [order] {
    return two_generator_regular(order / 2, order / 4 + 1, false);
  });
}

GroupPtr elementary_abelian_group(long p, long k) {
  if (!is_prime(p)) throw NotPrime("elementary abelian base must be prime");
  if (k < 1) throw BadParameters("elementary abelian rank must be >= 1");
  long n = 1;
  for (long i = 0; i < k; ++i) {
    n *= p;
    if (n > 255) throw CapExceeded("regular representation degree exceeds 255");
  }
  return cached("elemab:" + std::to_string(p) + "^" + std::to_string(k), [p, k, n] {
    // Points are vectors over GF(p) encoded base p; generators translate by
    // the unit vectors.
    std::vector<Perm> gens;
    long unit = 1;
    for (long d = 0; d < k; ++d) {
      std::vector<uint8_t> img(n);
      for (long v = 0; v < n; ++v) {
        long digit = (v / unit) % p;
        long w = v - digit * unit + ((digit + 1) % p) * unit;
        img[v] = static_cast<uint8_t>(w);
      }
      gens.push_back(Perm(std::move(img)));
      unit *= p;
    }
    return generate(gens);
  });
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 12) throw BadParameters("symmetric degree out of range");
  return cached("sym:" + std::to_string(n), [n]() -> GroupPtr {
    if (n == 1) return trivial_group(1);
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    std::vector<Perm> gens = {Perm::from_cycles(n, {{0, 1}})};
    if (n > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
    return generate(gens);
  });
}

GroupPtr alternating_group(int n) {
  if (n < 1 || n > 12) throw BadParameters("alternating degree out of range");
  return cached("alt:" + std::to_string(n), [n]() -> GroupPtr {
    if (n <= 2) return trivial_group(n);
    std::vector<Perm> gens = {Perm::from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
      std::vector<int> cyc;
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cyc.push_back(i);
      } else {
        for (int i = 1; i < n; ++i) cyc.push_back(i);
      }
      gens.push_back(Perm::from_cycles(n, {cyc}));
    }
    return generate(gens);
  });
}

GroupPtr small2group(const IsoType& tag) {
  switch (tag.kind) {
    case IsoType::Kind::Cyclic:
      if (!power_of_two(tag.n)) throw BadTag("cyclic 2-group tag needs a 2-power order");
      return cyclic_group(tag.n);
    case IsoType::Kind::Dihedral:
      if (!power_of_two(tag.n) || tag.n < 8) {
        throw BadTag("dihedral 2-group tag needs a 2-power order >= 8");
      }
      return dihedral_group(tag.n);
    case IsoType::Kind::GeneralizedQuaternion:
      return quaternion_group(tag.n);
    case IsoType::Kind::Semidihedral:
      return semidihedral_group(tag.n);
    case IsoType::Kind::Modular:
      return modular_group(tag.n);
    case IsoType::Kind::ElementaryAbelian:
      if (tag.p != 2) throw BadTag("small2group builds 2-groups only");
      return elementary_abelian_group(2, tag.k);
    default:
      throw BadTag("unsupported small2group tag: " + tag.to_string());
  }
}

}  // namespace pcode
