#pragma once

#include "toric/lattice.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// Facet {x : <x, normal> >= constant} with an orbifold label.
struct LabeledFacet {
  IntVector normal;  // inward, primitive
  Rational constant;
  Integer label = 1;

  friend bool operator==(const LabeledFacet&, const LabeledFacet&) = default;
};

/// Bounded, full-dimensional, simple rational polytope with positive integer
/// facet labels. Vertices are computed once at construction.
class LabeledPolytope {
 public:
  /// Validates the invariants and caches the vertex list (lexicographic).
  /// Throws InvalidPolytope on unbounded, lower-dimensional or non-simple
  /// input, non-primitive normals or labels < 1.
  static LabeledPolytope make(std::size_t dim, std::vector<LabeledFacet> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LabeledFacet>& facets() const noexcept { return facets_; }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }

  /// <x, u_i> - kappa_i, the slack of x against facet i.
  Rational slack(std::size_t facet, const RatVector& x) const;

  bool contains(const RatVector& x) const;
  bool is_interior(const RatVector& x) const;
  /// x on facet i and strictly inside every other facet.
  bool in_facet_interior(std::size_t facet, const RatVector& x) const;

  /// Image under x -> A x + b with A unimodular. Facet order and labels are
  /// kept. Throws NotUnimodular.
  LabeledPolytope affine_image(const IntMatrix& A, const RatVector& b) const;

  /// Equality up to facet order.
  bool same_facets(const LabeledPolytope& other) const;

  friend bool operator==(const LabeledPolytope& a, const LabeledPolytope& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  LabeledPolytope(std::size_t dim, std::vector<LabeledFacet> facets)
      : dim_(dim), facets_(std::move(facets)) {}

  std::size_t dim_ = 0;
  std::vector<LabeledFacet> facets_;
  std::vector<RatVector> vertices_;
};

/// Solves the square rational system M x = b; returns false when singular.
bool solve_square(std::vector<RatVector> M, RatVector b, RatVector& x);

}  // namespace toric
