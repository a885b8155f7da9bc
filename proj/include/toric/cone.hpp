#pragma once

#include "toric/lattice.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// Rational polyhedral cone {x : <x, v_i> >= 0 for all i} in (R^d)^*, given by
/// primitive inward facet normals v_i in Z^d. Normals are kept primitive,
/// pairwise non-parallel and in lexicographic order, so equality is structural.
class Cone {
 public:
  /// Normalizes each normal to its primitive vector and sorts. Throws
  /// ZeroVector for a zero normal and InvalidCone for duplicate or
  /// anti-parallel normals or a dimension mismatch.
  static Cone make(std::size_t dim, std::vector<IntVector> normals);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector>& normals() const noexcept { return normals_; }
  std::size_t size() const noexcept { return normals_.size(); }

  /// Membership for a rational point of the dual space.
  bool contains(const RatVector& x) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  Cone(std::size_t dim, std::vector<IntVector> normals) : dim_(dim), normals_(std::move(normals)) {}

  std::size_t dim_ = 0;
  std::vector<IntVector> normals_;
};

/// Which faces the goodness test ranges over.
///  - ProperFaces: every face of dimension >= 1 (the apex of a pointed cone is
///    exempt). This is the convention under which non-simplicial Reeb type
///    cones, e.g. the cone over a square, are good.
///  - AllFaces: every face including the apex; for pointed cones this only
///    accepts unimodular simplicial cones.
enum class GoodnessConvention { ProperFaces, AllFaces };

struct Face {
  std::vector<std::size_t> facets;  // indices into normals(), sorted
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

struct ConeClassification {
  bool strictly_convex = false;
  bool good = false;
  std::size_t lineality_dim = 0;
  bool reeb_type = false;

  friend bool operator==(const ConeClassification&, const ConeClassification&) = default;
};

/// All faces of the cone, the cone itself first, computed from the extreme rays
/// of the cone modulo its lineality space. Face sets are closed: a face
/// lists every normal that vanishes on it. Throws DegenerateCone when the cone
/// has empty interior and InvalidCone when some normal is redundant.
std::vector<Face> faces(const Cone& c);

/// dim - rank(normals): the dimension of {x : <x, v_i> = 0 for all i}.
std::size_t lineality_dim(const Cone& c);

/// Independent check of lineality through exact LPs: maximize and minimize
/// each coordinate over {x : <x, v_i> = 0, |x_k| <= 1}.
bool contains_line(const Cone& c);

bool is_good(const Cone& c, GoodnessConvention convention = GoodnessConvention::ProperFaces);

ConeClassification classify(const Cone& c, GoodnessConvention convention = GoodnessConvention::ProperFaces);

/// Image of the cone under x -> U x on the dual space; normals transform by
/// U^{-T}. Throws NotUnimodular.
Cone unimodular_transform(const Cone& c, const IntMatrix& U);

/// Maps a lattice vector (Lie algebra side, like a normal or a Reeb vector)
/// consistently with unimodular_transform: v -> U^{-T} v.
IntVector transform_lattice_vector(const IntVector& v, const IntMatrix& U);

}  // namespace toric
