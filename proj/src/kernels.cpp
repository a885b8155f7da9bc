#include "toric/kernels.hpp"

#include <atomic>

namespace toric::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available() {
#if defined(TORIC_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() { return !g_force_scalar && avx2_available() ? Backend::Avx2 : Backend::Scalar; }

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void force_scalar(bool on) { g_force_scalar = on; }

void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im) {
  if (active_backend() == Backend::Avx2) return avx2::giroux_apply(t, d, n, re, im);
  scalar::giroux_apply(t, d, n, re, im);
}

void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out) {
  if (active_backend() == Backend::Avx2) return avx2::giroux_fiber_margins(t, c, d, cos_phi, sin_phi, n, out);
  scalar::giroux_fiber_margins(t, c, d, cos_phi, sin_phi, n, out);
}

void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out) {
  if (active_backend() == Backend::Avx2) return avx2::displacement_criterion_batch(c1, t, n, out);
  scalar::displacement_criterion_batch(c1, t, n, out);
}

Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid) {
  if (active_backend() == Backend::Avx2) return avx2::beta_g_delta_extrema(eps, s, grid);
  return scalar::beta_g_delta_extrema(eps, s, grid);
}

}  // namespace toric::kernels

#if !defined(TORIC_HAVE_AVX2)
// Non-x86 builds: the AVX2 entry points fall back to the reference loops.
namespace toric::kernels::avx2 {
void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im) {
  scalar::giroux_apply(t, d, n, re, im);
}
void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out) {
  scalar::giroux_fiber_margins(t, c, d, cos_phi, sin_phi, n, out);
}
void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out) {
  scalar::displacement_criterion_batch(c1, t, n, out);
}
Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid) {
  return scalar::beta_g_delta_extrema(eps, s, grid);
}
}  // namespace toric::kernels::avx2
#endif
