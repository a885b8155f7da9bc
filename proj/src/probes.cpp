#include "toric/probes.hpp"

#include "toric/error.hpp"

#include <algorithm>

namespace toric {

namespace {

RatVector along(const RatVector& w, const Rational& s, const IntVector& lambda) {
  RatVector x = w;
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += s * lambda[k];
  return x;
}

// Facets attaining the exit parameter.
std::size_t exit_multiplicity(const LabeledPolytope& p, const Probe& probe) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Integer pair = dot(probe.direction, p.facets()[i].normal);
    if (pair >= 0) continue;
    if (p.slack(i, probe.entry) / Rational(-pair) == probe.length) ++count;
  }
  return count;
}

void require_interior(const LabeledPolytope& p, const RatVector& u) {
  if (!p.is_interior(u)) throw Error(ErrorCode::NotInterior, "point is not interior to the polytope");
}

// Integer vectors in [-r, r]^n ordered by L1 norm, then lexicographically.
std::vector<IntVector> directions(std::size_t n, int r) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(n, -r);
  while (true) {
    all.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == r) cur[--i] = -r;
    if (i == 0) break;
    ++cur[i - 1];
  }
  auto l1 = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x < 0 ? -x : x;
    return s;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return l1(a) < l1(b); });
  std::vector<IntVector> out;
  out.reserve(all.size());
  for (const auto& v : all) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace

Rational probe_length(const LabeledPolytope& p, std::size_t facet, const RatVector& w, const IntVector& lambda) {
  if (lambda.size() != p.dim()) throw Error(ErrorCode::InvalidArgument, "direction length differs from polytope dimension");
  if (!p.in_facet_interior(facet, w)) throw Error(ErrorCode::InvalidEntry, "entry point is not in the facet interior");
  if (dot(lambda, p.facets()[facet].normal) != 1)
    throw Error(ErrorCode::NotTransverse, "direction does not pair to 1 with the facet normal");
  std::optional<Rational> best;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Integer pair = dot(lambda, p.facets()[i].normal);
    if (pair >= 0) continue;
    const Rational t = p.slack(i, w) / Rational(-pair);
    if (!best || t < *best) best = t;
  }
  if (!best) throw Error(ErrorCode::InvalidPolytope, "probe never leaves the polytope");
  return *best;
}

Probe make_probe(const LabeledPolytope& p, std::size_t facet, const RatVector& w, const IntVector& lambda) {
  return Probe{facet, w, lambda, probe_length(p, facet, w, lambda)};
}

bool displaces(const LabeledPolytope& p, const Probe& probe, const RatVector& u) {
  require_interior(p, u);
  if (probe.facet >= p.facets().size() || p.facets()[probe.facet].label != 1) return false;
  if (probe_length(p, probe.facet, probe.entry, probe.direction) != probe.length) return false;
  if (exit_multiplicity(p, probe) != 1) return false;
  const Rational s = dot(u, p.facets()[probe.facet].normal) - dot(probe.entry, p.facets()[probe.facet].normal);
  if (along(probe.entry, s, probe.direction) != u) return false;
  return s > 0 && s * 2 < probe.length;
}

std::optional<Probe> find_probe(const LabeledPolytope& p, const RatVector& u, int search_radius) {
  require_interior(p, u);
  if (search_radius < 1) return std::nullopt;
  const auto dirs = directions(p.dim(), search_radius);
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    if (p.facets()[f].label != 1) continue;
    const Rational s = p.slack(f, u);
    for (const auto& lambda : dirs) {
      if (dot(lambda, p.facets()[f].normal) != 1) continue;
      RatVector w = along(u, -s, lambda);
      if (!p.in_facet_interior(f, w)) continue;
      Probe probe{f, std::move(w), lambda, 0};
      probe.length = probe_length(p, f, probe.entry, lambda);
      if (s * 2 < probe.length && exit_multiplicity(p, probe) == 1) return probe;
    }
  }
  return std::nullopt;
}

std::vector<ProbeVerdict> scan_grid(const LabeledPolytope& p, int q, int search_radius) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "grid denominator must be at least 2");
  const std::size_t n = p.dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational mn = p.vertices().front()[k], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    lo[k] = floor_div(mn * q);
    hi[k] = ceil_div(mx * q);
  }
  std::vector<ProbeVerdict> out;
  if (n == 0) return out;
  std::vector<Integer> cur = lo;
  while (true) {
    RatVector u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = make_rational(cur[k], q);
    if (p.is_interior(u)) {
      ProbeVerdict v;
      v.point = u;
      v.witness = find_probe(p, u, search_radius);
      v.displaceable = v.witness.has_value();
      if (v.displaceable) v.parameter = p.slack(v.witness->facet, u);
      out.push_back(std::move(v));
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == hi[i - 1]) {
      --i;
      cur[i] = lo[i];
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

bool verify_verdict(const LabeledPolytope& p, const ProbeVerdict& v) {
  if (!v.displaceable) return !v.witness.has_value();
  if (!v.witness) return false;
  const Probe& probe = *v.witness;
  if (probe.facet >= p.facets().size() || p.facets()[probe.facet].label != 1) return false;
  if (dot(probe.direction, p.facets()[probe.facet].normal) != 1) return false;
  if (!p.in_facet_interior(probe.facet, probe.entry) || !p.is_interior(v.point)) return false;
  if (along(probe.entry, v.parameter, probe.direction) != v.point) return false;
  return v.parameter > 0 && v.parameter * 2 < probe.length && displaces(p, probe, v.point);
}

}  // namespace toric
