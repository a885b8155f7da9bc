#pragma once

#include <cstddef>
#include <string_view>

// Batch floating-point loops used by the numerics module. Each kernel has a
// scalar reference and an AVX2 variant; the variant is picked at runtime.
namespace toric::kernels {

enum class Backend { Scalar, Avx2 };

bool avx2_available();
Backend active_backend();
std::string_view to_string(Backend b);

/// Test hook: pin the scalar path even when AVX2 is available.
void force_scalar(bool on);

/// Applies the Giroux map tau_t in place to n points of C^d stored as
/// structure-of-arrays: coordinate j of point i at re[j * n + i], im[j * n + i].
void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im);

/// Return margins for a sphere fiber |z_j| = c_j: sample i has
/// z_1 = c_1 (cos_phi[i] + i sin_phi[i]); out[i] = max_j | |tau_t(z)_j| - c_j |.
void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out);

/// f_t(-c1) for n pairs (c1[i], t[i]) in the exponential form.
void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out);

struct Extrema {
  double min = 0;
  double max = 0;
  double min_abs = 0;
  std::size_t argmin_abs = 0;
};

/// E(h) = 2h g(h) + g'(h)(1 - h^2) for g = (1 - s) id + s delta_eps on the
/// grid h_i = -1 + 2i/grid, i = 0..grid.
Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid);

// Direct entry points for equivalence testing.
namespace scalar {
void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im);
void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out);
void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out);
Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid);
}  // namespace scalar

namespace avx2 {
void giroux_apply(double t, std::size_t d, std::size_t n, double* re, double* im);
void giroux_fiber_margins(double t, const double* c, std::size_t d, const double* cos_phi, const double* sin_phi,
                          std::size_t n, double* out);
void displacement_criterion_batch(const double* c1, const double* t, std::size_t n, double* out);
Extrema beta_g_delta_extrema(double eps, double s, std::size_t grid);
}  // namespace avx2

}  // namespace toric::kernels
