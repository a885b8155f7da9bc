#pragma once

#include "toric/numerics/forms.hpp"
#include "toric/numerics/report.hpp"

#include <cstdint>

namespace toric::numerics {

/// Affine chart of CP^{d-1} used for the base: w = (z_2, ..., z_d) / z_1 in
/// real coordinates (Re w_1, Im w_1, ...). Throws ChartSingularity when
/// |z_1| < 1e-8.
Vec hopf_chart(const Vec& z);

/// The connection potential theta = (1/2) Im(conj(w) . dw) / (1 + |w|^2) on the
/// chart; its differential is the Fubini-Study form pulling back to d alpha_st.
Vec chart_potential(const Vec& w);

/// Hamiltonian field Y of h on the chart: omega(Y, .) = -dh with
/// omega = d(chart_potential), both by central differences.
Vec base_hamiltonian_field(const ScalarField& h, const Vec& w, double fd_step = 1e-5);

/// Lifts h to the sphere as h o pi, solves the contact Hamiltonian equations upstairs for alpha_st,
/// pushes the field down by a central difference of the chart map and
/// compares with base_hamiltonian_field. Sample points with |z_1| < 0.1 are
/// redrawn. Passes when the largest discrepancy is below 1e-5.
/// Throws InvalidArgument for d < 2.
VerificationReport prequantization_lift_check(const ScalarField& h, std::size_t d, std::size_t samples,
                                              std::uint64_t seed, double fd_step = 1e-5);

}  // namespace toric::numerics
