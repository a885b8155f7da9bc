#include "toric/numerics/prequantization.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace toric::numerics {

Vec hopf_chart(const Vec& z) {
  const auto c = to_complex(z);
  if (std::abs(c[0]) < 1e-8) throw Error(ErrorCode::ChartSingularity, "z_1 vanishes; outside the chart");
  std::vector<std::complex<double>> w(c.begin() + 1, c.end());
  for (auto& x : w) x /= c[0];
  return from_complex(w);
}

Vec chart_potential(const Vec& w) {
  // Im(conj(w_j) dw_j) = u_j dv_j - v_j du_j for w_j = u_j + i v_j.
  const double scale = 0.5 / (1 + w.squaredNorm());
  Vec theta(w.size());
  for (Eigen::Index j = 0; j + 1 < w.size(); j += 2) {
    theta[j] = -scale * w[j + 1];
    theta[j + 1] = scale * w[j];
  }
  return theta;
}

Vec base_hamiltonian_field(const ScalarField& h, const Vec& w, double fd_step) {
  const Eigen::Index n = w.size();
  Mat J(n, n);
  Vec grad(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec plus = w, minus = w;
    plus[j] += fd_step;
    minus[j] -= fd_step;
    const double step = plus[j] - minus[j];
    J.col(j) = (chart_potential(plus) - chart_potential(minus)) / step;
    grad[j] = (h(plus) - h(minus)) / step;
  }
  // omega(u, v) = u^T (J^T - J) v, so omega(Y, .) = -dh reads (J^T - J)^T Y = -grad.
  const Mat W = J.transpose() - J;
  return W.transpose().fullPivLu().solve(-grad);
}

VerificationReport prequantization_lift_check(const ScalarField& h, std::size_t d, std::size_t samples,
                                              std::uint64_t seed, double fd_step) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "the base CP^{d-1} needs d >= 2");
  const Manifold m = Manifold::of(ManifoldSpec::sphere(d));
  const FormSpec alpha = FormSpec::standard(d);
  const ScalarField lifted = [&h](const Vec& z) { return h(hopf_chart(z)); };

  VerificationReport r;
  r.check = "prequantization_lift";
  r.samples = samples;
  r.fd_step = fd_step;
  r.tolerance = 1e-5;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::size_t redrawn = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec z = m.sample(rng);
    while (std::hypot(z[0], z[1]) < 0.1) {
      z = m.sample(rng);
      ++redrawn;
    }
    const Vec X = hamiltonian_vector_field(alpha, m, lifted, z, fd_step).field;
    const Vec pushed = (hopf_chart(z + fd_step * X) - hopf_chart(z - fd_step * X)) / (2 * fd_step);
    const Vec Y = base_hamiltonian_field(h, hopf_chart(z), fd_step);
    r.max_residual = std::max(r.max_residual, (pushed - Y).norm());
  }
  r.passed = r.max_residual < r.tolerance;
  r.values["redrawn"] = static_cast<double>(redrawn);
  return r;
}

}  // namespace toric::numerics
