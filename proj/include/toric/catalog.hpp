#pragma once

#include "toric/cone.hpp"
#include "toric/manifold.hpp"
#include "toric/numerics/forms.hpp"
#include "toric/polytope.hpp"
#include "toric/probes.hpp"
#include "toric/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace toric {

/// Moment map divided by pi, at a point of the standard embedding
/// (see numerics::Manifold for the coordinate layout):
///   Sphere, Lens:   (|z_1|^2, ..., |z_d|^2)
///   ProductS1S2d:   (|z_1|^2, ..., |z_d|^2, h)
///   TkSphere:       (|z_1|^2, ..., |z_d|^2, x_1, y_1, ..., x_n, y_n[, h])
///   CosphereTorus:  (x_1, ..., x_d)
/// Throws OffManifold when the sphere constraint is off by more than 1e-12.
std::vector<double> moment_map(const ManifoldSpec& spec, const numerics::Vec& point);

/// Exact variant on rational coordinates; the constraint must hold exactly.
RatVector moment_map_exact(const ManifoldSpec& spec, const RatVector& point);

/// Moment value of a fiber divided by pi: levels followed by extra.
RatVector fiber_moment(const Fiber& f);

/// Torus action. The element lists turns in moment-map order: first the
/// rotations of z_1..z_d, then the shifts of the circle coordinates.
numerics::Vec torus_act(const ManifoldSpec& spec, const std::vector<double>& element, const numerics::Vec& point);

/// Cone over the moment image. Circle (free) directions come first:
/// ProductS1S2d(d) is R x (R_{>=0})^d with normals e_2..e_{d+1}.
Cone moment_cone(const ManifoldSpec& spec);

/// Lattice remark attached to a moment cone: for Lens(d, p) the cone is the
/// sphere cone read in the lattice of the Z_p quotient.
std::string lattice_note(const ManifoldSpec& spec);

/// Moment polytope of the base CP^{d-1} of Sphere(d) or Lens(d, p), scaled by
/// p: {y >= 0, y_1 + ... + y_{d-1} <= p}. Throws InvalidArgument otherwise or
/// for d < 2.
LabeledPolytope base_polytope(const ManifoldSpec& spec);

enum class VerdictStatus { Displaceable, NonDisplaceable, Unknown };
enum class VerdictMethod { None, GirouxIsotopy, Probe, ReductionLift, PrequantizationLift, GraphOfClosedForm };

/// tau_t displaces the sphere fiber at time t > T(c_1).
struct GirouxWitness {
  Fiber fiber;
  double c1 = 0;
  double t = 0;
  double bound = 0;  // T(c_1)
  double criterion = 0;
};

/// A probe in the base polytope displacing the base fiber at `point`.
struct ProbeWitness {
  LabeledPolytope base;
  RatVector point;
  Probe probe;
};

/// The displaceable `inner` fiber lifts through contact reduction to `outer`.
struct ReductionStep {
  Fiber inner;
  Fiber outer;
};

/// The displaceable base fiber at `base_point` lifts to `outer` through the
/// prequantization map.
struct PrequantizationStep {
  RatVector base_point;
  Fiber outer;
};

struct Citation {
  std::string text;
};

using Evidence = std::variant<GirouxWitness, ProbeWitness, ReductionStep, PrequantizationStep, Citation>;

/// Evidence is ordered from the starting witness to the classified fiber.
struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  VerdictMethod method = VerdictMethod::None;
  std::vector<Evidence> provenance;
};

std::string to_string(VerdictStatus s);
std::string to_string(VerdictMethod m);

/// Verdict for a fiber:
///   Sphere(d >= 2)                   Displaceable by tau_t, t = T(c_1) + 0.01
///   Lens(d, 1)                       as Sphere(d)
///   Lens(d >= 2, p >= 2)             Displaceable when a probe in the base
///                                    displaces the base fiber, else Unknown
///   ProductS1S2d, h = 0, d >= 2      Displaceable, reduction lift of Sphere(d)
///   TkSphere, extra = 0, d >= 2      Displaceable, reduction chain from Sphere(d)
///   CosphereTorus                    NonDisplaceable (cited)
///   everything else                  Unknown
/// Throws InvariantViolation when the fiber's level identity fails.
Verdict classify_fiber(const Fiber& f);

/// Replays every witness of a verdict for f: Giroux bounds and sampled
/// displacement, probe arithmetic, each lift against reduction_lift, and the
/// chain linking consecutive steps and ending at f.
bool reverify(const Verdict& v, const Fiber& f);

/// The reduction pairs (inner <- outer): Sphere(d) <- ProductS1S2d(d),
/// Sphere(d) <- TkSphere(1, d), ProductS1S2d(d) <- TkSphere(2, d) and
/// TkSphere(k - 1, d) <- TkSphere(k, d). The lift keeps the levels and appends
/// a zero moment coordinate for the reduced circle. Throws NotAReductionPair.
Fiber reduction_lift(const Fiber& inner, const ManifoldSpec& outer);

/// Inverse of reduction_lift on the reduction level. Throws NotAReductionPair
/// for other pairs or when the reduced coordinate is not zero.
Fiber reduction_project(const Fiber& outer, const ManifoldSpec& inner);

/// The fiber T^d x {p} of CosphereTorus(d) and the coefficients of the closed
/// 1-form sum p_i dtheta_i whose graph it is.
struct GraphIdentification {
  Fiber fiber;
  RatVector form;
};

/// Throws NotUnitVector unless |p| = 1 exactly, InvalidArgument for
/// d < 2 or a length mismatch.
GraphIdentification graph_identification(std::size_t d, const RatVector& p);

/// Floating variant: returns the form coefficients; |p| = 1 within tolerance.
std::vector<double> graph_identification(std::size_t d, const std::vector<double>& p, double tolerance = 1e-12);

}  // namespace toric
