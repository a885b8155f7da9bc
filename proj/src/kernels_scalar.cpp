#include "toric/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace toric::kernels::scalar {

// cosh t and sinh t both scaled by 2e^{-t}; the common factor cancels in
// tau_t except on the coordinates z_2..z_d, which pick up `scale`.
struct Hyperbolic {
  double ch, sh, scale;
};

static Hyperbolic scaled_hyperbolic(double t) {
  const double q = std::exp(-2 * t);
  return {1 + q, 1 - q, 2 * std::exp(-t)};
}

void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im) {
  const Hyperbolic hy = scaled_hyperbolic(t);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = re[i], y = im[i];
    const double dr = hy.ch + hy.sh * x, di = hy.sh * y;
    const double nr = hy.sh + hy.ch * x, ni = hy.ch * y;
    const double inv = 1 / (dr * dr + di * di);
    re[i] = (nr * dr + ni * di) * inv;
    im[i] = (ni * dr - nr * di) * inv;
    // scale / den = scale * conj(den) / |den|^2
    const double fr = hy.scale * dr * inv, fi = -hy.scale * di * inv;
    for (std::size_t j = 1; j < d; ++j) {
      const double a = re[j * n + i], b = im[j * n + i];
      re[j * n + i] = a * fr - b * fi;
      im[j * n + i] = a * fi + b * fr;
    }
  }
}

void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out) {
  const Hyperbolic hy = scaled_hyperbolic(t);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = c[0] * cos_phi[i], y = c[0] * sin_phi[i];
    const double dr = hy.ch + hy.sh * x, di = hy.sh * y;
    const double nr = hy.sh + hy.ch * x, ni = hy.ch * y;
    const double den = std::sqrt(dr * dr + di * di);
    double m = std::abs(std::sqrt(nr * nr + ni * ni) / den - c[0]);
    for (std::size_t j = 1; j < d; ++j) m = std::max(m, std::abs(hy.scale * c[j] / den - c[j]));
    out[i] = m;
  }
}

void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double e = std::exp(2 * t[i]), a = c1[i] - 1, b = c1[i] + 1;
    out[i] = e * a * a / 4 + b * b / (4 * e) - (0.5 + 0.5 * c1[i] * c1[i]);
  }
}

Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid) {
  const double a3 = 10 - 4 * eps, a4 = 7 * eps - 15, a5 = 6 - 3 * eps;
  Extrema ex;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double h = -1 + (2.0 * static_cast<double>(i)) / static_cast<double>(grid);
    double delta, ddelta;
    if (h <= -eps) {
      delta = -1;
      ddelta = 0;
    } else if (h >= 0) {
      delta = h;
      ddelta = 1;
    } else {
      const double u = (h + eps) / eps, u2 = u * u, u3 = u2 * u;
      delta = -1 + u3 * (a3 + u * (a4 + u * a5));
      ddelta = u2 * (3 * a3 + u * (4 * a4 + u * 5 * a5)) / eps;
    }
    const double g = (1 - s) * h + s * delta, dg = (1 - s) + s * ddelta;
    const double e = 2 * h * g + dg * (1 - h * h);
    if (i == 0 || e < ex.min) ex.min = e;
    if (i == 0 || e > ex.max) ex.max = e;
    if (i == 0 || std::abs(e) < ex.min_abs) {
      ex.min_abs = std::abs(e);
      ex.argmin_abs = i;
    }
  }
  return ex;
}

}  // namespace toric::kernels::scalar
