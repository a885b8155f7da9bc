#pragma once

#include "toric/manifold.hpp"
#include "toric/numerics/report.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace toric::numerics {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// tau_t(z) = (sinh t + z_1 cosh t, z_2, ..., z_d) / (cosh t + z_1 sinh t),
/// evaluated with e^{-t}-scaled hyperbolics for t > 20. Throws OutOfBall when
/// |z| > 1 + ball_tolerance and InvalidArgument for t < 0.
CVector giroux_map(double t, const CVector& z, double ball_tolerance = 1e-12);

/// max ||tau_s(tau_t(z)) - tau_{s+t}(z)||_inf over random z on the unit sphere.
/// Passes below 1e-9.
VerificationReport giroux_group_law_check(double s, double t, std::size_t d, std::size_t samples, std::uint64_t seed);

/// T(c1) = (ln 2 + ln((c1^2 + 1) / (c1 - 1)^2)) / 2. Throws DegenerateLevel
/// unless 0 < c1 < 1.
double min_displacement_time(double c1);

/// f_t(-c1) = e^{2t}(c1 - 1)^2/4 + e^{-2t}(c1 + 1)^2/4 - (1 + c1^2)/2.
double displacement_criterion(double c1, double t);

/// The same quantity as cosh^2 t - 2 c1 cosh t sinh t + c1^2 sinh^2 t - 1.
double displacement_criterion_quadratic(double c1, double t);

/// Samples points of the fiber |z_j| = c_j and checks that none is mapped back
/// into it: min over samples of max_j | |tau_t(z)_j| - c_j | must be positive
/// and f_t(-c_1) > 0. Throws DimensionTooSmall for d = 1.
VerificationReport verify_fiber_displaced(const std::vector<double>& c, double t, std::size_t samples,
                                          std::uint64_t seed);

/// Sphere fiber overload; levels are the exact squared moduli.
VerificationReport verify_fiber_displaced(const Fiber& f, double t, std::size_t samples, std::uint64_t seed);

}  // namespace toric::numerics
