#include "toric/numerics/giroux.hpp"

#include "toric/error.hpp"
#include "toric/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace toric::numerics {

CVector giroux_map(double t, const CVector& z, double ball_tolerance) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "Giroux time must be nonnegative");
  if (z.empty()) throw Error(ErrorCode::InvalidArgument, "empty point");
  double norm2 = 0;
  for (const auto& w : z) norm2 += std::norm(w);
  if (std::sqrt(norm2) > 1 + ball_tolerance) throw Error(ErrorCode::OutOfBall, "point lies outside the closed unit ball");

  Complex num, den;
  Complex scale;
  if (t <= 20) {
    const double ch = std::cosh(t), sh = std::sinh(t);
    den = ch + z[0] * sh;
    num = sh + z[0] * ch;
    scale = 1;
  } else {
    // Multiply through by 2e^{-t}: cosh t -> 1 + q, sinh t -> 1 - q.
    const double q = std::exp(-2 * t);
    den = (1.0 + z[0]) + q * (1.0 - z[0]);
    num = (1.0 + z[0]) - q * (1.0 - z[0]);
    scale = 2 * std::exp(-t);
  }
  CVector out(z.size());
  out[0] = num / den;
  for (std::size_t j = 1; j < z.size(); ++j) out[j] = scale * z[j] / den;
  return out;
}

namespace {

CVector random_sphere_point(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  CVector z(d);
  double norm2 = 0;
  for (auto& w : z) {
    w = {n(rng), n(rng)};
    norm2 += std::norm(w);
  }
  for (auto& w : z) w /= std::sqrt(norm2);
  return z;
}

}  // namespace

VerificationReport giroux_group_law_check(double s, double t, std::size_t d, std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.check = "giroux_group_law";
  r.samples = samples;
  r.tolerance = 1e-9;
  r.seed = seed;
  r.values["s"] = s;
  r.values["t"] = t;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CVector z = random_sphere_point(d, rng);
    // tau_t(z) may sit a rounding error outside the ball.
    const CVector a = giroux_map(s, giroux_map(t, z), 1e-9), b = giroux_map(s + t, z);
    for (std::size_t j = 0; j < d; ++j) r.max_residual = std::max(r.max_residual, std::abs(a[j] - b[j]));
  }
  r.passed = r.max_residual < r.tolerance;
  return r;
}

double min_displacement_time(double c1) {
  if (!(c1 > 0 && c1 < 1)) throw Error(ErrorCode::DegenerateLevel, "c1 must lie in (0, 1)");
  return 0.5 * (std::log(2.0) + std::log((c1 * c1 + 1) / ((c1 - 1) * (c1 - 1))));
}

double displacement_criterion(double c1, double t) {
  double out = 0;
  kernels::scalar::displacement_criterion_batch(&c1, &t, 1, &out);
  return out;
}

double displacement_criterion_quadratic(double c1, double t) {
  const double ch = std::cosh(t), sh = std::sinh(t);
  return ch * ch - 2 * c1 * ch * sh + c1 * c1 * sh * sh - 1;
}

VerificationReport verify_fiber_displaced(const std::vector<double>& c, double t, std::size_t samples,
                                          std::uint64_t seed) {
  if (c.size() < 2) throw Error(ErrorCode::DimensionTooSmall, "the circle's only fiber is the whole circle");
  VerificationReport r;
  r.check = "giroux_fiber_displaced";
  r.samples = samples;
  r.seed = seed;
  r.values["t"] = t;
  r.values["c1"] = c[0];
  r.values["criterion"] = displacement_criterion(c[0], t);
  if (c[0] > 0 && c[0] < 1) r.values["T"] = min_displacement_time(c[0]);

  // Margins depend only on the angle of z_1; the other angles are irrelevant.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::vector<double> cs(samples), sn(samples), margin(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double phi = angle(rng);
    cs[i] = std::cos(phi);
    sn[i] = std::sin(phi);
  }
  kernels::giroux_fiber_margins(t, c.data(), c.size(), cs.data(), sn.data(), samples, margin.data());
  r.min_margin = samples ? *std::min_element(margin.begin(), margin.end()) : 0;
  r.passed = samples > 0 && r.min_margin > 0 && r.values["criterion"] > 0;
  return r;
}

VerificationReport verify_fiber_displaced(const Fiber& f, double t, std::size_t samples, std::uint64_t seed) {
  if (f.spec.kind != ManifoldKind::Sphere) throw Error(ErrorCode::InvalidArgument, "expected a sphere fiber");
  std::vector<double> c;
  for (const auto& l : f.levels) c.push_back(std::sqrt(to_double(l)));
  return verify_fiber_displaced(c, t, samples, seed);
}

}  // namespace toric::numerics
