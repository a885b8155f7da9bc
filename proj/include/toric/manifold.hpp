#pragma once

#include "toric/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace toric {

enum class ManifoldKind { Sphere, Lens, ProductS1S2d, TkSphere, CosphereTorus };

/// One of the explicit toric contact manifolds:
///   Sphere(d)          S^{2d-1} in C^d, torus T^d
///   Lens(d, p)         S^{2d-1} / Z_p, torus T^d
///   ProductS1S2d(d)    S^1 x S^{2d}, torus T^{d+1}
///   TkSphere(k, d)     T^k x S^{2d+k-1}, torus T^{d+k}
///   CosphereTorus(d)   T^d x S^{d-1}, unit cosphere bundle of T^d
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Sphere;
  std::size_t d = 1;
  std::size_t p = 1;  // Lens only
  std::size_t k = 0;  // TkSphere only

  static ManifoldSpec sphere(std::size_t d);
  static ManifoldSpec lens(std::size_t d, std::size_t p);
  static ManifoldSpec product(std::size_t d);
  static ManifoldSpec tk_sphere(std::size_t k, std::size_t d);
  static ManifoldSpec cosphere(std::size_t d);

  std::size_t torus_rank() const;
  /// Number of moment coordinates beyond the d squared moduli (h, x_l, y_l).
  std::size_t extra_count() const;
  /// "sphere:3", "lens:3:2", "product:2", "tk:2:3" (k then d), "cosphere:3".
  std::string name() const;

  friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

/// Inverse of ManifoldSpec::name; also accepts "s1xs2d:<d>" for product.
/// Throws InvalidArgument.
ManifoldSpec parse_manifold(std::string_view text);

/// A pre-Lagrangian toric fiber given by exact moment levels.
///  - levels: the squared moduli |z_j|^2 = c_j^2, j = 1..d, each in (0, 1);
///    empty for CosphereTorus.
///  - extra: ProductS1S2d (h); TkSphere (x_1, y_1, ..., x_n, y_n[, h]) with
///    k = 2n or 2n + 1 entries; CosphereTorus the unit vector p; otherwise empty.
/// Invariant: sum(levels) + sum(extra_i^2) = 1 exactly.
struct Fiber {
  ManifoldSpec spec;
  RatVector levels;
  RatVector extra;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Validates shape (InvalidArgument) and the level identity (InvariantViolation).
Fiber make_fiber(const ManifoldSpec& spec, RatVector levels, RatVector extra = {});

}  // namespace toric
