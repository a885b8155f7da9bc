#pragma once

// Brute-force displaceability check: walks the full line through u in every
// small direction and locates both boundary crossings directly.

#include "toric/polytope.hpp"

#include <optional>
#include <vector>

namespace toric::oracle {

struct LineHit {
  Rational t;
  std::vector<std::size_t> facets;
};

// Smallest t >= 0 with u + sign * t * lambda on the boundary, and the facets hit.
inline std::optional<LineHit> boundary_hit(const LabeledPolytope& p, const RatVector& u, const IntVector& lambda,
                                           int sign) {
  std::optional<LineHit> best;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto& f = p.facets()[i];
    Rational rate = 0, value = -f.constant;
    for (std::size_t k = 0; k < u.size(); ++k) {
      rate += Rational(f.normal[k] * lambda[k] * sign);
      value += u[k] * f.normal[k];
    }
    if (rate >= 0) continue;
    const Rational t = value / -rate;
    if (!best || t < best->t) best = LineHit{t, {i}};
    else if (t == best->t) best->facets.push_back(i);
  }
  return best;
}

inline bool brute_force_displaced(const LabeledPolytope& p, const RatVector& u, int radius) {
  const std::size_t n = p.dim();
  std::vector<int> lam(n, -radius);
  while (true) {
    IntVector lambda(lam.begin(), lam.end());
    const auto back = boundary_hit(p, u, lambda, -1), fwd = boundary_hit(p, u, lambda, 1);
    if (back && fwd && back->facets.size() == 1 && fwd->facets.size() == 1) {
      const auto& entry = p.facets()[back->facets[0]];
      Integer pair = 0;
      for (std::size_t k = 0; k < n; ++k) pair += entry.normal[k] * lambda[k];
      const Rational length = back->t + fwd->t;
      if (entry.label == 1 && pair == 1 && back->t * 2 < length) return true;
    }
    std::size_t i = n;
    while (i > 0 && lam[i - 1] == radius) lam[--i] = -radius;
    if (i == 0) return false;
    ++lam[i - 1];
  }
}

inline LabeledPolytope standard_simplex(std::size_t n) {
  std::vector<LabeledFacet> f;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    f.push_back({e, 0, 1});
  }
  f.push_back({IntVector(n, Integer(-1)), -1, 1});
  return LabeledPolytope::make(n, f);
}

}  // namespace toric::oracle
