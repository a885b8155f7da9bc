#pragma once

// Hand-checked cones shared by several test binaries.

#include "oracles/lattice_oracles.hpp"
#include "toric/cone.hpp"

#include <random>
#include <vector>

namespace toric::testing {

inline IntVector unit(std::size_t d, std::size_t i) {
  IntVector e(d, Integer(0));
  e[i] = 1;
  return e;
}

inline IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Cone orthant(std::size_t d) {
  std::vector<IntVector> n;
  for (std::size_t i = 0; i < d; ++i) n.push_back(unit(d, i));
  return Cone::make(d, n);
}

// R x (R>=0)^d, the free direction first.
inline Cone half_free(std::size_t d) {
  std::vector<IntVector> n;
  for (std::size_t i = 1; i <= d; ++i) n.push_back(unit(d + 1, i));
  return Cone::make(d + 1, n);
}

// Cone over the unit square: a non-simplicial good pointed cone in R^3.
inline Cone square_cone() {
  return Cone::make(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, 0, 1}), iv({0, -1, 1})});
}

// Cone over the cube [-1,1]^3 at height 1: normals e_4 +- e_i.
inline Cone cube_cone() {
  std::vector<IntVector> n;
  for (std::size_t i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      IntVector v = unit(4, 3);
      v[i] = s;
      n.push_back(v);
    }
  return Cone::make(4, n);
}

// Good pointed cone in R^2 whose apex has Smith invariants (1, 3).
inline Cone det3_cone() { return Cone::make(2, {iv({1, 0}), iv({-1, 3})}); }

// Cone over a trapezoid (Hirzebruch-type): good, pointed, four facets.
inline Cone trapezoid_cone() {
  return Cone::make(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, -1, 1}), iv({-1, -1, 2})});
}

inline std::vector<Cone> known_reeb_cones() {
  return {orthant(1), orthant(2), orthant(3), orthant(4), square_cone(), cube_cone(), det3_cone(), trapezoid_cone()};
}

// A known Reeb type cone of dimension <= max_dim under a random unimodular map.
inline Cone random_reeb_cone(std::mt19937_64& rng, std::size_t max_dim = 4) {
  std::vector<Cone> pool;
  for (Cone& c : known_reeb_cones())
    if (c.dim() <= max_dim) pool.push_back(std::move(c));
  const Cone& base = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  return unimodular_transform(base, oracle::random_unimodular(base.dim(), rng, 3));
}

}  // namespace toric::testing
