#include "toric/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace toric::kernels::avx2 {

namespace {

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

}  // namespace

void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im) {
  const double q = std::exp(-2 * t);
  const __m256d ch = _mm256_set1_pd(1 + q), sh = _mm256_set1_pd(1 - q), scale = _mm256_set1_pd(2 * std::exp(-t));
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(re + i), y = _mm256_loadu_pd(im + i);
    const __m256d dr = _mm256_add_pd(ch, _mm256_mul_pd(sh, x)), di = _mm256_mul_pd(sh, y);
    const __m256d nr = _mm256_add_pd(sh, _mm256_mul_pd(ch, x)), ni = _mm256_mul_pd(ch, y);
    const __m256d inv = _mm256_div_pd(one, _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di)));
    _mm256_storeu_pd(re + i, _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(nr, dr), _mm256_mul_pd(ni, di)), inv));
    _mm256_storeu_pd(im + i, _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(ni, dr), _mm256_mul_pd(nr, di)), inv));
    const __m256d fr = _mm256_mul_pd(_mm256_mul_pd(scale, dr), inv);
    const __m256d fi = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(_mm256_mul_pd(scale, di), inv));
    for (std::size_t j = 1; j < d; ++j) {
      double* pr = re + j * n + i;
      double* pi = im + j * n + i;
      const __m256d a = _mm256_loadu_pd(pr), b = _mm256_loadu_pd(pi);
      _mm256_storeu_pd(pr, _mm256_sub_pd(_mm256_mul_pd(a, fr), _mm256_mul_pd(b, fi)));
      _mm256_storeu_pd(pi, _mm256_add_pd(_mm256_mul_pd(a, fi), _mm256_mul_pd(b, fr)));
    }
  }
  if (i < n) {
    // Tail through the reference loop on a compacted copy.
    const std::size_t m = n - i;
    std::vector<double> r(d * m), s(d * m);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        r[j * m + l] = re[j * n + i + l];
        s[j * m + l] = im[j * n + i + l];
      }
    scalar::giroux_apply(t, d, m, r.data(), s.data());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        re[j * n + i + l] = r[j * m + l];
        im[j * n + i + l] = s[j * m + l];
      }
  }
}

void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out) {
  const double q = std::exp(-2 * t);
  const __m256d ch = _mm256_set1_pd(1 + q), sh = _mm256_set1_pd(1 - q);
  const double scale = 2 * std::exp(-t);
  const __m256d c0 = _mm256_set1_pd(c[0]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_mul_pd(c0, _mm256_loadu_pd(cos_phi + i));
    const __m256d y = _mm256_mul_pd(c0, _mm256_loadu_pd(sin_phi + i));
    const __m256d dr = _mm256_add_pd(ch, _mm256_mul_pd(sh, x)), di = _mm256_mul_pd(sh, y);
    const __m256d nr = _mm256_add_pd(sh, _mm256_mul_pd(ch, x)), ni = _mm256_mul_pd(ch, y);
    const __m256d den = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di)));
    const __m256d num = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(nr, nr), _mm256_mul_pd(ni, ni)));
    __m256d m = vabs(_mm256_sub_pd(_mm256_div_pd(num, den), c0));
    for (std::size_t j = 1; j < d; ++j) {
      const __m256d cj = _mm256_set1_pd(c[j]);
      const __m256d r = _mm256_div_pd(_mm256_set1_pd(scale * c[j]), den);
      m = _mm256_max_pd(m, vabs(_mm256_sub_pd(r, cj)));
    }
    _mm256_storeu_pd(out + i, m);
  }
  if (i < n) scalar::giroux_fiber_margins(t, c, d, cos_phi + i, sin_phi + i, n - i, out + i);
}

void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out) {
  // exp has no AVX2 instruction; only the polynomial part is vectorized.
  std::size_t i = 0;
  alignas(32) double e[4];
  const __m256d quarter = _mm256_set1_pd(0.25), half = _mm256_set1_pd(0.5), one = _mm256_set1_pd(1.0);
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) e[l] = std::exp(2 * t[i + l]);
    const __m256d ev = _mm256_load_pd(e), c = _mm256_loadu_pd(c1 + i);
    const __m256d a = _mm256_sub_pd(c, one), b = _mm256_add_pd(c, one);
    const __m256d first = _mm256_mul_pd(_mm256_mul_pd(ev, _mm256_mul_pd(a, a)), quarter);
    const __m256d second = _mm256_div_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(_mm256_set1_pd(4.0), ev));
    const __m256d third = _mm256_add_pd(half, _mm256_mul_pd(half, _mm256_mul_pd(c, c)));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_add_pd(first, second), third));
  }
  if (i < n) scalar::displacement_criterion_batch(c1 + i, t + i, n - i, out + i);
}

Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid) {
  const double a3 = 10 - 4 * eps, a4 = 7 * eps - 15, a5 = 6 - 3 * eps;
  const __m256d va3 = _mm256_set1_pd(a3), va4 = _mm256_set1_pd(a4), va5 = _mm256_set1_pd(a5);
  const __m256d v3a3 = _mm256_set1_pd(3 * a3), v4a4 = _mm256_set1_pd(4 * a4), v5a5 = _mm256_set1_pd(5 * a5);
  const __m256d veps = _mm256_set1_pd(eps), vneg_eps = _mm256_set1_pd(-eps);
  const __m256d one = _mm256_set1_pd(1.0), mone = _mm256_set1_pd(-1.0), zero = _mm256_setzero_pd();
  const __m256d two = _mm256_set1_pd(2.0), vs = _mm256_set1_pd(s), vrs = _mm256_set1_pd(1 - s);
  const __m256d vgrid = _mm256_set1_pd(static_cast<double>(grid));

  const std::size_t count = grid + 1;
  __m256d vmin = _mm256_set1_pd(INFINITY), vmax = _mm256_set1_pd(-INFINITY), vmin_abs = _mm256_set1_pd(INFINITY);
  __m256d varg = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d idx = _mm256_set_pd(static_cast<double>(i + 3), static_cast<double>(i + 2),
                                      static_cast<double>(i + 1), static_cast<double>(i));
    const __m256d h = _mm256_add_pd(mone, _mm256_div_pd(_mm256_mul_pd(two, idx), vgrid));
    const __m256d u = _mm256_div_pd(_mm256_add_pd(h, veps), veps);
    const __m256d u2 = _mm256_mul_pd(u, u), u3 = _mm256_mul_pd(u2, u);
    const __m256d poly = _mm256_add_pd(va3, _mm256_mul_pd(u, _mm256_add_pd(va4, _mm256_mul_pd(u, va5))));
    const __m256d dpoly = _mm256_add_pd(v3a3, _mm256_mul_pd(u, _mm256_add_pd(v4a4, _mm256_mul_pd(u, v5a5))));
    __m256d delta = _mm256_add_pd(mone, _mm256_mul_pd(u3, poly));
    __m256d ddelta = _mm256_div_pd(_mm256_mul_pd(u2, dpoly), veps);
    const __m256d low = _mm256_cmp_pd(h, vneg_eps, _CMP_LE_OQ), high = _mm256_cmp_pd(h, zero, _CMP_GE_OQ);
    delta = _mm256_blendv_pd(_mm256_blendv_pd(delta, mone, low), h, high);
    ddelta = _mm256_blendv_pd(_mm256_blendv_pd(ddelta, zero, low), one, high);
    const __m256d g = _mm256_add_pd(_mm256_mul_pd(vrs, h), _mm256_mul_pd(vs, delta));
    const __m256d dg = _mm256_add_pd(vrs, _mm256_mul_pd(vs, ddelta));
    const __m256d e = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(two, h), g),
                                    _mm256_mul_pd(dg, _mm256_sub_pd(one, _mm256_mul_pd(h, h))));
    vmin = _mm256_min_pd(vmin, e);
    vmax = _mm256_max_pd(vmax, e);
    const __m256d ae = vabs(e);
    const __m256d better = _mm256_cmp_pd(ae, vmin_abs, _CMP_LT_OQ);
    vmin_abs = _mm256_blendv_pd(vmin_abs, ae, better);
    varg = _mm256_blendv_pd(varg, idx, better);
  }
  alignas(32) double mn[4], mx[4], ma[4], ag[4];
  _mm256_store_pd(mn, vmin);
  _mm256_store_pd(mx, vmax);
  _mm256_store_pd(ma, vmin_abs);
  _mm256_store_pd(ag, varg);
  Extrema ex{INFINITY, -INFINITY, INFINITY, 0};
  for (int l = 0; l < 4; ++l) {
    ex.min = std::min(ex.min, mn[l]);
    ex.max = std::max(ex.max, mx[l]);
    const auto a = static_cast<std::size_t>(ag[l]);
    if (ma[l] < ex.min_abs || (ma[l] == ex.min_abs && a < ex.argmin_abs)) {
      ex.min_abs = ma[l];
      ex.argmin_abs = a;
    }
  }
  // Tail: same formula, point by point.
  for (; i < count; ++i) {
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
    ex.min = std::min(ex.min, e);
    ex.max = std::max(ex.max, e);
    if (std::abs(e) < ex.min_abs) {
      ex.min_abs = std::abs(e);
      ex.argmin_abs = i;
    }
  }
  return ex;
}

}  // namespace toric::kernels::avx2
