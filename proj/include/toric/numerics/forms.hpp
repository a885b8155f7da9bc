#pragma once

#include "toric/manifold.hpp"
#include "toric/numerics/report.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace toric::numerics {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Standard embedding of a manifold as {p : sum_{i in S} p_i^2 = 1} inside R^n,
/// with the remaining coordinates being free or circle angles (in turns).
///   Sphere(d), Lens(d, p):  (x_1, y_1, ..., x_d, y_d)
///   ProductS1S2d(d):        (theta, x_1, y_1, ..., x_d, y_d, h)
///   TkSphere(k, d):         (theta_1..theta_k, x_1, y_1, ..., x_{d+n}, y_{d+n}[, h]),
///                           k = 2n or 2n + 1
///   CosphereTorus(d):       (theta_1..theta_d, x_1..x_d)
struct Manifold {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> sphere;  // coordinates under the unit-sphere constraint
  std::vector<std::size_t> angles;  // circle coordinates
  double tolerance = 1e-12;

  static Manifold of(const ManifoldSpec& spec);

  double constraint(const Vec& p) const;  // sum p_i^2 - 1 over `sphere`
  Vec gradient(const Vec& p) const;
  /// Rescales the sphere coordinates onto the constraint.
  Vec project(const Vec& p) const;
  /// Uniform on the sphere factor, uniform angles in [0, 1).
  Vec sample(std::mt19937_64& rng) const;
  /// Orthonormal basis of the tangent space (columns). Throws
  /// SingularTangentFrame when the constraint gradient vanishes.
  Mat tangent_frame(const Vec& p) const;
};

/// A contact form on an ambient space, evaluated as a covector field.
struct FormSpec {
  enum class Kind { Standard, Beta, BetaG, BetaK, Cosphere };
  Kind kind = Kind::Standard;
  std::size_t d = 1;
  std::size_t k = 0;
  std::function<double(double)> g;   // BetaG profile
  std::function<double(double)> dg;  // its derivative

  /// alpha_st = (1/2) sum (x dy - y dx) on C^d.
  static FormSpec standard(std::size_t d);
  /// h dtheta + alpha_st on S^1 x S^{2d}.
  static FormSpec beta(std::size_t d);
  /// g(h) dtheta + alpha_st on S^1 x S^{2d}.
  static FormSpec beta_g(std::size_t d, std::function<double(double)> g, std::function<double(double)> dg);
  /// sum_l (x_l dtheta_{2l-1} + y_l dtheta_{2l}) [+ h dtheta_k] + alpha_st(z_1..z_d).
  static FormSpec beta_k(std::size_t k, std::size_t d);
  /// sum x_i dtheta_i on T^d x S^{d-1}.
  static FormSpec cosphere(std::size_t d);
  /// The form belonging to a catalog manifold (Lens uses its covering sphere).
  static FormSpec of(const ManifoldSpec& spec);

  std::size_t ambient_dim() const;
  Vec operator()(const Vec& p) const;
  std::string name() const;
};

using MapUnderTest = std::function<Vec(const Vec&)>;
using ScalarField = std::function<double(const Vec&)>;
using VectorField = std::function<Vec(const Vec&)>;

/// Maps on the sphere ambient R^{2d} used by the checks.
MapUnderTest identity_map();
MapUnderTest giroux_ambient_map(double t, std::size_t d);
/// z_1 -> conj(z_1), orientation reversing on the contact planes.
MapUnderTest conjugate_first_map();

/// Checks phi^* alpha = f alpha with f > 0 on sampled points by comparing
/// A_i = alpha_{phi(p)}(D phi u_i) with B_i = alpha_p(u_i) over a tangent frame.
/// D phi u_i is a central difference; u_i is replaced by the realized step
/// ((p + h u_i) - (p - h u_i)) / 2h in both A and B so rounding of the
/// perturbed points does not enter the comparison.
/// residual = |A - (A.B / B.B) B| / max(|A|, 1e-300); passes when every
/// residual is below `tolerance` and every factor A.B / B.B is positive.
/// min_margin is the smallest factor. Throws OffManifold when phi(p) leaves
/// the manifold by more than 1e-9.
VerificationReport verify_contactomorphism(const MapUnderTest& map, const FormSpec& form, const Manifold& m,
                                           std::size_t samples, double fd_step, std::uint64_t seed,
                                           double tolerance = 1e-6);

/// Solution of the contact Hamiltonian equations at a point. `reeb` and `field` are ambient vectors tangent
/// to the manifold.
struct ContactField {
  Vec reeb;
  Vec field;
  double reeb_residual = 0;   // |dalpha(R, .)| + |alpha(R) - 1|
  double field_residual = 0;  // |alpha(X) - h| + |X -| dalpha - (dh(R) alpha - dh)|
  double condition = 0;       // of the stacked system for X
};

/// Solves alpha(R) = 1, R -| dalpha = 0 and alpha(X) = h,
/// X -| dalpha = dh(R) alpha - dh on the tangent space, with dalpha and dh by
/// central differences. Throws IllConditioned when a residual exceeds 1e-8 or
/// the system is numerically singular, OffManifold when p is off the manifold.
ContactField hamiltonian_vector_field(const FormSpec& form, const Manifold& m, const ScalarField& h, const Vec& p,
                                      double fd_step = 1e-5);

Vec reeb_field(const FormSpec& form, const Manifold& m, const Vec& p, double fd_step = 1e-5);

/// X_h as a vector field for `flow`. Intermediate Runge-Kutta stages leave the
/// manifold by O(dt^2), so the field is evaluated at the projected point.
VectorField hamiltonian_flow_field(const FormSpec& form, const Manifold& m, ScalarField h, double fd_step = 1e-5);

struct FlowResult {
  Vec point;
  double max_drift = 0;  // largest constraint residual before projection
  std::size_t steps = 0;
  std::vector<Vec> trajectory;  // every `record_every` steps, when requested
};

/// Classical RK4 with projection back onto the manifold after each step; the
/// last step is shortened to land exactly on T. Throws BlowUp when |p| grows
/// past 10 times its initial size (plus one), InvalidArgument for dt <= 0.
FlowResult flow(const VectorField& field, const Manifold& m, const Vec& p, double T, double dt,
                std::size_t record_every = 0);

/// First return time of the flow to p: integrates with step dt up to t_max,
/// takes the first local minimum of |p(t) - p| after the orbit has left a
/// neighborhood of p, and refines it by a parabola through three samples.
/// Throws InvalidArgument when no return is seen.
double measure_period(const VectorField& field, const Manifold& m, const Vec& p, double dt, double t_max);

/// Convenience: rotation generator 2 pi i z_j on chosen complex coordinates of
/// the sphere ambient (period 1).
VectorField rotation_field(std::size_t d, const std::vector<std::size_t>& coords);

/// Complex coordinates of a sphere ambient point.
std::vector<std::complex<double>> to_complex(const Vec& p);
Vec from_complex(const std::vector<std::complex<double>>& z);

}  // namespace toric::numerics
