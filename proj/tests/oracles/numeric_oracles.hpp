#pragma once

// Reference computations for the numerics tests, written from the closed
// formulas without the library's scaled or batched code paths.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace toric::oracle {

using C = std::complex<double>;

// tau_t exactly as written: (sinh t + z1 cosh t, z2, ...) / (cosh t + z1 sinh t).
inline std::vector<C> giroux_naive(double t, std::vector<C> z) {
  const C den = std::cosh(t) + z[0] * std::sinh(t);
  z[0] = (std::sinh(t) + z[0] * std::cosh(t)) / den;
  for (std::size_t j = 1; j < z.size(); ++j) z[j] /= den;
  return z;
}

// min over |z1| = c1 of |cosh t + z1 sinh t|^2 - 1, by dense angle sampling.
inline double min_return_gap(double c1, double t, int angles = 20000) {
  double best = INFINITY;
  for (int i = 0; i < angles; ++i) {
    const double phi = 2 * std::numbers::pi * i / angles;
    const C z1 = std::polar(c1, phi);
    best = std::min(best, std::norm(std::cosh(t) + z1 * std::sinh(t)) - 1);
  }
  return best;
}

// Root in t of g by bisection on [lo, hi] with g(lo) < 0 < g(hi).
inline double bisect(const std::function<double(double)>& g, double lo, double hi, int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline std::vector<C> random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  std::vector<C> z(d);
  double s = 0;
  for (auto& w : z) {
    w = {n(rng), n(rng)};
    s += std::norm(w);
  }
  for (auto& w : z) w /= std::sqrt(s);
  return z;
}

}  // namespace toric::oracle
