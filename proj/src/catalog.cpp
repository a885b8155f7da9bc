#include "toric/catalog.hpp"

#include "toric/error.hpp"
#include "toric/numerics/giroux.hpp"

#include <cmath>
#include <numbers>

namespace toric {

namespace {

using numerics::Vec;

void check_on_manifold(const ManifoldSpec& spec, const Vec& point) {
  const numerics::Manifold m = numerics::Manifold::of(spec);
  if (static_cast<std::size_t>(point.size()) != m.ambient_dim)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m.ambient_dim) + " coordinates for " + spec.name());
  if (std::abs(m.constraint(point)) > 1e-12) throw Error(ErrorCode::OffManifold, "point is off " + spec.name());
}

// First index of the complex block z_1 in the standard embedding.
std::size_t z_offset(const ManifoldSpec& spec) {
  switch (spec.kind) {
    case ManifoldKind::ProductS1S2d: return 1;
    case ManifoldKind::TkSphere: return spec.k;
    default: return 0;
  }
}

bool all_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Citation note(std::string text) { return Citation{std::move(text)}; }

}  // namespace

std::vector<double> moment_map(const ManifoldSpec& spec, const Vec& point) {
  check_on_manifold(spec, point);
  std::vector<double> out;
  if (spec.kind == ManifoldKind::CosphereTorus) {
    for (std::size_t i = 0; i < spec.d; ++i) out.push_back(point[static_cast<Eigen::Index>(spec.d + i)]);
    return out;
  }
  const std::size_t z0 = z_offset(spec);
  for (std::size_t j = 0; j < spec.d; ++j) {
    const double x = point[static_cast<Eigen::Index>(z0 + 2 * j)], y = point[static_cast<Eigen::Index>(z0 + 2 * j + 1)];
    out.push_back(x * x + y * y);
  }
  // The remaining sphere coordinates are the moment coordinates themselves.
  for (auto i = static_cast<Eigen::Index>(z0 + 2 * spec.d); i < point.size(); ++i) out.push_back(point[i]);
  return out;
}

RatVector moment_map_exact(const ManifoldSpec& spec, const RatVector& point) {
  const numerics::Manifold m = numerics::Manifold::of(spec);
  if (point.size() != m.ambient_dim)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m.ambient_dim) + " coordinates for " + spec.name());
  Rational s = 0;
  for (std::size_t i : m.sphere) s += point[i] * point[i];
  if (s != 1) throw Error(ErrorCode::OffManifold, "point is off " + spec.name() + " (sum of squares " + format_rational(s) + ")");
  RatVector out;
  if (spec.kind == ManifoldKind::CosphereTorus) return RatVector(point.begin() + static_cast<std::ptrdiff_t>(spec.d), point.end());
  const std::size_t z0 = z_offset(spec);
  for (std::size_t j = 0; j < spec.d; ++j)
    out.push_back(point[z0 + 2 * j] * point[z0 + 2 * j] + point[z0 + 2 * j + 1] * point[z0 + 2 * j + 1]);
  out.insert(out.end(), point.begin() + static_cast<std::ptrdiff_t>(z0 + 2 * spec.d), point.end());
  return out;
}

RatVector fiber_moment(const Fiber& f) {
  RatVector out = f.levels;
  out.insert(out.end(), f.extra.begin(), f.extra.end());
  return out;
}

Vec torus_act(const ManifoldSpec& spec, const std::vector<double>& element, const Vec& point) {
  if (element.size() != spec.torus_rank())
    throw Error(ErrorCode::InvalidArgument, "expected a torus element of rank " + std::to_string(spec.torus_rank()));
  Vec q = point;
  const std::size_t rotations = spec.kind == ManifoldKind::CosphereTorus ? 0 : spec.d;
  const std::size_t z0 = z_offset(spec);
  for (std::size_t j = 0; j < rotations; ++j) {
    const auto x = static_cast<Eigen::Index>(z0 + 2 * j);
    const double c = std::cos(2 * std::numbers::pi * element[j]), s = std::sin(2 * std::numbers::pi * element[j]);
    q[x] = c * point[x] - s * point[x + 1];
    q[x + 1] = s * point[x] + c * point[x + 1];
  }
  const numerics::Manifold m = numerics::Manifold::of(spec);
  for (std::size_t a = 0; a < m.angles.size(); ++a) {
    const auto i = static_cast<Eigen::Index>(m.angles[a]);
    q[i] = point[i] + element[rotations + a];
  }
  return q;
}

Cone moment_cone(const ManifoldSpec& spec) {
  const std::size_t dim = spec.torus_rank();
  const std::size_t free = spec.kind == ManifoldKind::CosphereTorus ? dim : dim - spec.d;
  std::vector<IntVector> normals;
  for (std::size_t i = free; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    normals.push_back(std::move(e));
  }
  return Cone::make(dim, std::move(normals));
}

std::string lattice_note(const ManifoldSpec& spec) {
  if (spec.kind != ManifoldKind::Lens || spec.p == 1) return {};
  return "sphere cone read in the lattice of the Z_" + std::to_string(spec.p) +
         " quotient: Z^d + Z (1, ..., 1) / " + std::to_string(spec.p);
}

LabeledPolytope base_polytope(const ManifoldSpec& spec) {
  if (spec.kind != ManifoldKind::Sphere && spec.kind != ManifoldKind::Lens)
    throw Error(ErrorCode::InvalidArgument, spec.name() + " is not a prequantization of CP^{d-1}");
  if (spec.d < 2) throw Error(ErrorCode::InvalidArgument, "the base of " + spec.name() + " is a point");
  const std::size_t n = spec.d - 1;
  const long long p = spec.kind == ManifoldKind::Lens ? static_cast<long long>(spec.p) : 1;
  std::vector<LabeledFacet> facets;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    facets.push_back({e, 0, 1});
  }
  facets.push_back({IntVector(n, Integer(-1)), Rational(-p), 1});
  return LabeledPolytope::make(n, std::move(facets));
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Displaceable: return "Displaceable";
    case VerdictStatus::NonDisplaceable: return "NonDisplaceable";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return {};
}

std::string to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::None: return "None";
    case VerdictMethod::GirouxIsotopy: return "GirouxIsotopy";
    case VerdictMethod::Probe: return "Probe";
    case VerdictMethod::ReductionLift: return "ReductionLift";
    case VerdictMethod::PrequantizationLift: return "PrequantizationLift";
    case VerdictMethod::GraphOfClosedForm: return "GraphOfClosedForm";
  }
  return {};
}

namespace {

GirouxWitness giroux_witness(const Fiber& sphere_fiber) {
  GirouxWitness w{sphere_fiber};
  w.c1 = std::sqrt(to_double(sphere_fiber.levels[0]));
  w.bound = numerics::min_displacement_time(w.c1);
  w.t = w.bound + 0.01;
  w.criterion = numerics::displacement_criterion(w.c1, w.t);
  return w;
}

Verdict sphere_verdict(const Fiber& f) {
  const Fiber s = f.spec.kind == ManifoldKind::Sphere ? f : Fiber{ManifoldSpec::sphere(f.spec.d), f.levels, f.extra};
  Verdict v{VerdictStatus::Displaceable, VerdictMethod::GirouxIsotopy, {giroux_witness(s)}};
  if (f.spec.kind == ManifoldKind::Lens) v.provenance.push_back(note("Z_1 quotient: lens:" + std::to_string(f.spec.d) + ":1 is the sphere"));
  return v;
}

Verdict unknown(std::string why) { return {VerdictStatus::Unknown, VerdictMethod::None, {note(std::move(why))}}; }

Verdict lens_verdict(const Fiber& f) {
  const LabeledPolytope base = base_polytope(f.spec);
  RatVector y;
  for (std::size_t j = 0; j + 1 < f.spec.d; ++j) y.push_back(f.levels[j] * static_cast<long long>(f.spec.p));
  const auto probe = find_probe(base, y, 3);
  if (!probe) return unknown("no probe within search radius 3 displaces the base fiber");
  return {VerdictStatus::Displaceable, VerdictMethod::PrequantizationLift,
          {ProbeWitness{base, y, *probe}, PrequantizationStep{y, f}}};
}

// Sphere(d) -> TkSphere(1, d) -> ... -> TkSphere(k, d), or -> ProductS1S2d(d).
Verdict reduction_chain(const Fiber& f) {
  Fiber current = make_fiber(ManifoldSpec::sphere(f.spec.d), f.levels);
  Verdict v{VerdictStatus::Displaceable, VerdictMethod::ReductionLift, {giroux_witness(current)}};
  std::vector<ManifoldSpec> steps;
  if (f.spec.kind == ManifoldKind::ProductS1S2d) {
    steps.push_back(f.spec);
  } else {
    for (std::size_t k = 1; k <= f.spec.k; ++k) steps.push_back(ManifoldSpec::tk_sphere(k, f.spec.d));
  }
  for (const auto& spec : steps) {
    Fiber next = reduction_lift(current, spec);
    v.provenance.push_back(ReductionStep{current, next});
    current = std::move(next);
  }
  return v;
}

}  // namespace

Verdict classify_fiber(const Fiber& f) {
  make_fiber(f.spec, f.levels, f.extra);
  switch (f.spec.kind) {
    case ManifoldKind::Sphere:
      if (f.spec.d < 2) return unknown("the circle has a single fiber");
      return sphere_verdict(f);
    case ManifoldKind::Lens:
      if (f.spec.d < 2) return unknown("the circle has a single fiber");
      if (f.spec.p == 1) return sphere_verdict(f);
      return lens_verdict(f);
    case ManifoldKind::ProductS1S2d:
      if (f.extra[0] != 0) return unknown("h != 0: the displaceable neighborhoods of the poles and the equator are not quantified");
      if (f.spec.d < 2) return unknown("the reduced fiber lives in the circle");
      return reduction_chain(f);
    case ManifoldKind::TkSphere:
      if (!all_zero(f.extra)) return unknown("nonzero (p, q, c) is not reachable by the reduction chain from h = 0");
      if (f.spec.d < 2) return unknown("the reduced fiber lives in the circle");
      return reduction_chain(f);
    case ManifoldKind::CosphereTorus: {
      std::string form;
      for (std::size_t i = 0; i < f.extra.size(); ++i) {
        if (f.extra[i] == 0) continue;
        if (!form.empty()) form += " + ";
        form += "(" + format_rational(f.extra[i]) + ") dtheta_" + std::to_string(i + 1);
      }
      return {VerdictStatus::NonDisplaceable, VerdictMethod::GraphOfClosedForm,
              {note("Eliashberg-Hofer-Salamon: the graph of a nowhere vanishing closed 1-form is a "
                    "non-displaceable pre-Lagrangian in the cosphere bundle; this fiber is the graph of " + form)}};
    }
  }
  return unknown("unsupported manifold");
}

namespace {

const Fiber* outer_of(const Evidence& e) {
  if (const auto* g = std::get_if<GirouxWitness>(&e)) return &g->fiber;
  if (const auto* r = std::get_if<ReductionStep>(&e)) return &r->outer;
  if (const auto* p = std::get_if<PrequantizationStep>(&e)) return &p->outer;
  return nullptr;
}

bool check_giroux(const GirouxWitness& w) {
  if (w.fiber.spec.kind != ManifoldKind::Sphere || w.fiber.spec.d < 2) return false;
  std::vector<double> c;
  for (const auto& l : w.fiber.levels) c.push_back(std::sqrt(to_double(l)));
  if (c[0] != w.c1) return false;
  const double bound = numerics::min_displacement_time(w.c1);
  if (!(w.t > bound) || !(numerics::displacement_criterion(w.c1, w.t) > 0)) return false;
  return numerics::verify_fiber_displaced(c, w.t, 2000, 0).passed;
}

}  // namespace

bool reverify(const Verdict& v, const Fiber& f) {
  try {
    make_fiber(f.spec, f.levels, f.extra);
    switch (v.status) {
      case VerdictStatus::Unknown:
        return v.method == VerdictMethod::None;
      case VerdictStatus::NonDisplaceable:
        return f.spec.kind == ManifoldKind::CosphereTorus && v.method == VerdictMethod::GraphOfClosedForm &&
               v.provenance.size() == 1 && std::holds_alternative<Citation>(v.provenance[0]);
      case VerdictStatus::Displaceable:
        break;
    }
    if (v.provenance.empty()) return false;

    const Fiber* previous = nullptr;
    bool started = false;
    const ProbeWitness* probe = nullptr;
    for (const Evidence& e : v.provenance) {
      if (const auto* g = std::get_if<GirouxWitness>(&e)) {
        if (started || !check_giroux(*g)) return false;
        started = true;
      } else if (const auto* p = std::get_if<ProbeWitness>(&e)) {
        if (started || !p->base.is_interior(p->point) || !displaces(p->base, p->probe, p->point)) return false;
        probe = p;
        started = true;
      } else if (const auto* r = std::get_if<ReductionStep>(&e)) {
        if (!previous || !(*previous == r->inner) || !(reduction_lift(r->inner, r->outer.spec) == r->outer)) return false;
      } else if (const auto* q = std::get_if<PrequantizationStep>(&e)) {
        if (!probe || q->base_point != probe->point || previous) return false;
        const ManifoldSpec& s = q->outer.spec;
        if (!(base_polytope(s) == probe->base)) return false;
        const long long scale = s.kind == ManifoldKind::Lens ? static_cast<long long>(s.p) : 1;
        for (std::size_t j = 0; j + 1 < s.d; ++j)
          if (q->outer.levels[j] * scale != q->base_point[j]) return false;
      } else {
        continue;  // citations carry no arithmetic
      }
      if (const Fiber* o = outer_of(e)) previous = o;
    }
    if (!previous) return false;
    if (*previous == f) return true;
    // A Lens(d, 1) fiber is verified through the sphere fiber with its levels.
    return f.spec.kind == ManifoldKind::Lens && f.spec.p == 1 && previous->spec == ManifoldSpec::sphere(f.spec.d) &&
           previous->levels == f.levels;
  } catch (const Error&) {
    return false;
  }
}

namespace {

bool is_pair(const ManifoldSpec& inner, const ManifoldSpec& outer) {
  if (inner.d != outer.d) return false;
  if (inner.kind == ManifoldKind::Sphere)
    return outer.kind == ManifoldKind::ProductS1S2d || (outer.kind == ManifoldKind::TkSphere && outer.k == 1);
  if (outer.kind != ManifoldKind::TkSphere) return false;
  if (inner.kind == ManifoldKind::ProductS1S2d) return outer.k == 2;
  return inner.kind == ManifoldKind::TkSphere && inner.k + 1 == outer.k;
}

[[noreturn]] void not_a_pair(const ManifoldSpec& inner, const ManifoldSpec& outer) {
  throw Error(ErrorCode::NotAReductionPair, inner.name() + " is not a reduction of " + outer.name());
}

}  // namespace

Fiber reduction_lift(const Fiber& inner, const ManifoldSpec& outer) {
  if (!is_pair(inner.spec, outer)) not_a_pair(inner.spec, outer);
  RatVector extra = inner.extra;
  extra.push_back(0);
  return make_fiber(outer, inner.levels, std::move(extra));
}

Fiber reduction_project(const Fiber& outer, const ManifoldSpec& inner) {
  if (!is_pair(inner, outer.spec)) not_a_pair(inner, outer.spec);
  if (outer.extra.back() != 0)
    throw Error(ErrorCode::NotAReductionPair, "fiber is not on the zero level of the reduced circle");
  return make_fiber(inner, outer.levels, RatVector(outer.extra.begin(), outer.extra.end() - 1));
}

GraphIdentification graph_identification(std::size_t d, const RatVector& p) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "the cosphere bundle needs d >= 2");
  if (p.size() != d) throw Error(ErrorCode::InvalidArgument, "expected a point of S^{d-1} with d coordinates");
  Rational s = 0;
  for (const auto& x : p) s += x * x;
  if (s != 1) throw Error(ErrorCode::NotUnitVector, "|p|^2 = " + format_rational(s));
  return {make_fiber(ManifoldSpec::cosphere(d), {}, p), p};
}

std::vector<double> graph_identification(std::size_t d, const std::vector<double>& p, double tolerance) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "the cosphere bundle needs d >= 2");
  if (p.size() != d) throw Error(ErrorCode::InvalidArgument, "expected a point of S^{d-1} with d coordinates");
  double s = 0;
  for (double x : p) s += x * x;
  if (std::abs(std::sqrt(s) - 1) > tolerance) throw Error(ErrorCode::NotUnitVector, "point is not on the unit sphere");
  return p;
}

}  // namespace toric
