#pragma once

#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

/// A rational segment entering the polytope through the interior of a facet,
/// integrally transverse to it (<direction, u_F> = 1).
struct Probe {
  std::size_t facet = 0;
  RatVector entry;      // w, relative interior of the facet
  IntVector direction;  // lambda
  Rational length;      // largest s with w + s lambda in the polytope

  friend bool operator==(const Probe&, const Probe&) = default;
};

struct ProbeVerdict {
  RatVector point;
  bool displaceable = false;
  std::optional<Probe> witness;
  Rational parameter;  // s with point = entry + s direction, when displaced
};

/// Exact probe length. Throws InvalidEntry when w is not in the relative
/// interior of the facet and NotTransverse when <lambda, u_F> != 1.
Rational probe_length(const LabeledPolytope& p, std::size_t facet, const RatVector& w, const IntVector& lambda);

/// Assembles a probe, computing its length.
Probe make_probe(const LabeledPolytope& p, std::size_t facet, const RatVector& w, const IntVector& lambda);

/// True iff u = w + s lambda with 0 < s < length/2, the entry facet has label
/// 1 and the probe leaves through the interior of a single facet.
/// Throws NotInterior when u is not an interior point.
bool displaces(const LabeledPolytope& p, const Probe& probe, const RatVector& u);

/// First displacing probe for u with direction entries in [-radius, radius]:
/// facets in order, then directions by L1 norm and lexicographically.
/// Throws NotInterior.
std::optional<Probe> find_probe(const LabeledPolytope& p, const RatVector& u, int search_radius);

/// Verdicts for every interior point of (1/q)Z^n, in lexicographic order.
std::vector<ProbeVerdict> scan_grid(const LabeledPolytope& p, int q, int search_radius);

/// Rechecks a displaceable verdict from scratch: transversality, label 1,
/// facet-interior entry and exit, and s < length/2.
bool verify_verdict(const LabeledPolytope& p, const ProbeVerdict& v);

}  // namespace toric
