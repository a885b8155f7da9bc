#pragma once

#include "toric/numerics/report.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric::numerics {

/// The quintic step profile: -1 on [-1, -eps], h on [0, 1] and the unique
/// quintic on [-eps, 0] matching value, slope and curvature at both ends.
/// Throws InvalidArgument unless 0 < eps <= 1.
double delta_eps(double eps, double h);
double delta_eps_derivative(double eps, double h);

/// A profile g with its derivative for beta_g = g(h) dtheta + alpha_st.
struct Profile {
  std::string name;
  std::function<double(double)> g;
  std::function<double(double)> dg;
  /// Set for the interpolation family (1 - s) id + s delta_eps.
  std::optional<std::pair<double, double>> delta_family;

  static Profile identity();
  static Profile zero();
  static Profile constant(double c);
  static Profile delta(double eps, double s);
};

/// E(h) = 2h g(h) + g'(h)(1 - h^2).
double beta_g_criterion(const Profile& p, double h);

/// E on the grid h_i = -1 + 2i / grid, i = 0..grid (both endpoints included).
/// Passes iff E has one strict sign on the whole grid. min_margin is min |E|;
/// values carry min, max, argmin_h and sign (+1, -1 or 0 for mixed/zero).
/// Throws InvalidArgument for grid < 1.
VerificationReport contact_condition_beta_g(const Profile& p, std::size_t grid);

/// (h_i, E(h_i)) on the same grid, for plotting.
std::vector<std::pair<double, double>> beta_g_series(const Profile& p, std::size_t grid);

}  // namespace toric::numerics
