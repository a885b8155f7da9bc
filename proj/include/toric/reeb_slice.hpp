#pragma once

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// A Reeb direction R = sum a_j v_j with every a_j > 0, together with d - 1
/// facets meeting in an edge whose normals complete R to a Z-basis.
struct ReebSynthesis {
  IntVector reeb;
  RatVector coefficients;                   // one per normal, in cone order
  std::vector<std::size_t> basis_witness;  // empty when no such edge exists

  friend bool operator==(const ReebSynthesis&, const ReebSynthesis&) = default;
};

/// Constructs an integral Reeb vector for a good, strictly convex cone:
/// normalize an edge's normals to e_1..e_{d-1}, choose positive weights on
/// the remaining normals so the last coordinate is +-1, then raise the edge
/// weights until every other coordinate is integral.
/// Throws NotReebType or NoEdge.
ReebSynthesis synthesize_reeb(const Cone& c);

/// Wraps a caller-supplied R. Finds positive coefficients by LP and the first
/// edge (lexicographic) whose normals complete R to a Z-basis, if any.
/// Throws NotReebType when the cone is not of Reeb type or R is not a
/// positive combination of all the normals.
ReebSynthesis reeb_from_vector(const Cone& c, const IntVector& R);

/// Index of Zv + ZR in span(v, R) ∩ Z^d. Throws Collinear.
Integer facet_label(const IntVector& v, const IntVector& R);

/// Unimodular W with W r = e_d for r = R / gcd(R). Slice coordinates of a
/// point x are the first d - 1 entries of W^{-T} x; the last entry is <x, r>.
IntMatrix slice_chart(const IntVector& R);

RatVector to_slice_coords(const IntMatrix& chart, const RatVector& x);
/// Inverse of to_slice_coords: x = W^T (y, height) with height = <x, r>.
RatVector from_slice_coords(const IntMatrix& chart, const RatVector& y, const Rational& height);

/// C ∩ {<x, R> = level} in slice coordinates; facet i comes from normal i and
/// carries facet_label(v_i, R). For d = 1 the slice is a point.
/// Throws EmptySlice for level <= 0, NotReebType if R is not interior to the
/// dual cone.
LabeledPolytope slice(const Cone& c, const ReebSynthesis& rs, const Rational& level = 1);

}  // namespace toric
