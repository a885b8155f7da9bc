#include "toric/numerics/forms.hpp"

#include "toric/error.hpp"
#include "toric/numerics/giroux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace toric::numerics {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out(to - from);
  std::iota(out.begin(), out.end(), from);
  return out;
}

}  // namespace

Manifold Manifold::of(const ManifoldSpec& spec) {
  Manifold m;
  switch (spec.kind) {
    case ManifoldKind::Sphere:
    case ManifoldKind::Lens:
      m.ambient_dim = 2 * spec.d;
      m.sphere = range(0, m.ambient_dim);
      break;
    case ManifoldKind::ProductS1S2d:
      m.ambient_dim = 2 * spec.d + 2;
      m.angles = {0};
      m.sphere = range(1, m.ambient_dim);
      break;
    case ManifoldKind::TkSphere: {
      const std::size_t n = spec.k / 2, delta = spec.k % 2;
      m.ambient_dim = spec.k + 2 * (spec.d + n) + delta;
      m.angles = range(0, spec.k);
      m.sphere = range(spec.k, m.ambient_dim);
      break;
    }
    case ManifoldKind::CosphereTorus:
      m.ambient_dim = 2 * spec.d;
      m.angles = range(0, spec.d);
      m.sphere = range(spec.d, m.ambient_dim);
      break;
  }
  return m;
}

double Manifold::constraint(const Vec& p) const {
  double s = 0;
  for (std::size_t i : sphere) s += p[static_cast<Eigen::Index>(i)] * p[static_cast<Eigen::Index>(i)];
  return s - 1;
}

Vec Manifold::gradient(const Vec& p) const {
  Vec g = Vec::Zero(p.size());
  for (std::size_t i : sphere) g[static_cast<Eigen::Index>(i)] = 2 * p[static_cast<Eigen::Index>(i)];
  return g;
}

Vec Manifold::project(const Vec& p) const {
  const double r = std::sqrt(constraint(p) + 1);
  if (!(r > 0)) throw Error(ErrorCode::OffManifold, "cannot project the origin onto the sphere");
  Vec q = p;
  for (std::size_t i : sphere) q[static_cast<Eigen::Index>(i)] /= r;
  return q;
}

Vec Manifold::sample(std::mt19937_64& rng) const {
  std::normal_distribution<double> normal(0, 1);
  std::uniform_real_distribution<double> unit(0, 1);
  Vec p = Vec::Zero(static_cast<Eigen::Index>(ambient_dim));
  for (std::size_t i : sphere) p[static_cast<Eigen::Index>(i)] = normal(rng);
  for (std::size_t i : angles) p[static_cast<Eigen::Index>(i)] = unit(rng);
  return project(p);
}

Mat Manifold::tangent_frame(const Vec& p) const {
  const Vec g = gradient(p);
  if (g.norm() < 1e-8) throw Error(ErrorCode::SingularTangentFrame, "constraint gradient vanishes");
  const Eigen::HouseholderQR<Mat> qr(g);
  const Mat Q = qr.householderQ();
  return Q.rightCols(Q.cols() - 1);
}

FormSpec FormSpec::standard(std::size_t d) {
  FormSpec f;
  f.kind = Kind::Standard;
  f.d = d;
  return f;
}

FormSpec FormSpec::beta(std::size_t d) {
  FormSpec f;
  f.kind = Kind::Beta;
  f.d = d;
  return f;
}

FormSpec FormSpec::beta_g(std::size_t d, std::function<double(double)> g, std::function<double(double)> dg) {
  FormSpec f;
  f.kind = Kind::BetaG;
  f.d = d;
  f.g = std::move(g);
  f.dg = std::move(dg);
  return f;
}

FormSpec FormSpec::beta_k(std::size_t k, std::size_t d) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "beta_k needs k >= 1");
  FormSpec f;
  f.kind = Kind::BetaK;
  f.d = d;
  f.k = k;
  return f;
}

FormSpec FormSpec::cosphere(std::size_t d) {
  FormSpec f;
  f.kind = Kind::Cosphere;
  f.d = d;
  return f;
}

FormSpec FormSpec::of(const ManifoldSpec& spec) {
  switch (spec.kind) {
    case ManifoldKind::Sphere:
    case ManifoldKind::Lens:
      return standard(spec.d);
    case ManifoldKind::ProductS1S2d:
      return beta(spec.d);
    case ManifoldKind::TkSphere:
      return beta_k(spec.k, spec.d);
    case ManifoldKind::CosphereTorus:
      return cosphere(spec.d);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown manifold kind");
}

std::size_t FormSpec::ambient_dim() const {
  switch (kind) {
    case Kind::Standard:
      return 2 * d;
    case Kind::Beta:
    case Kind::BetaG:
      return 2 * d + 2;
    case Kind::BetaK:
      return k + 2 * (d + k / 2) + k % 2;
    case Kind::Cosphere:
      return 2 * d;
  }
  return 0;
}

namespace {

// Adds (1/2) sum (x dy - y dx) over `count` complex coordinates from `first`.
void add_standard(const Vec& p, std::size_t first, std::size_t count, Vec& out) {
  for (std::size_t j = 0; j < count; ++j) {
    const auto x = static_cast<Eigen::Index>(first + 2 * j), y = x + 1;
    out[x] += -0.5 * p[y];
    out[y] += 0.5 * p[x];
  }
}

}  // namespace

Vec FormSpec::operator()(const Vec& p) const {
  if (static_cast<std::size_t>(p.size()) != ambient_dim())
    throw Error(ErrorCode::InvalidArgument, "point has the wrong ambient dimension");
  Vec a = Vec::Zero(p.size());
  const Eigen::Index last = p.size() - 1;
  switch (kind) {
    case Kind::Standard:
      add_standard(p, 0, d, a);
      break;
    case Kind::Beta:
      a[0] = p[last];
      add_standard(p, 1, d, a);
      break;
    case Kind::BetaG:
      a[0] = g(p[last]);
      add_standard(p, 1, d, a);
      break;
    case Kind::BetaK: {
      const std::size_t n = k / 2;
      const std::size_t zfirst = k;
      for (std::size_t l = 0; l < n; ++l) {
        const auto x = static_cast<Eigen::Index>(zfirst + 2 * (d + l));
        a[static_cast<Eigen::Index>(2 * l)] = p[x];
        a[static_cast<Eigen::Index>(2 * l + 1)] = p[x + 1];
      }
      if (k % 2 == 1) a[static_cast<Eigen::Index>(k - 1)] = p[last];
      add_standard(p, zfirst, d, a);
      break;
    }
    case Kind::Cosphere:
      for (std::size_t i = 0; i < d; ++i) a[static_cast<Eigen::Index>(i)] = p[static_cast<Eigen::Index>(d + i)];
      break;
  }
  return a;
}

std::string FormSpec::name() const {
  switch (kind) {
    case Kind::Standard:
      return "alpha_st:" + std::to_string(d);
    case Kind::Beta:
      return "beta:" + std::to_string(d);
    case Kind::BetaG:
      return "beta_g:" + std::to_string(d);
    case Kind::BetaK:
      return "beta_k:" + std::to_string(k) + ":" + std::to_string(d);
    case Kind::Cosphere:
      return "cosphere:" + std::to_string(d);
  }
  return {};
}

std::vector<std::complex<double>> to_complex(const Vec& p) {
  std::vector<std::complex<double>> z(static_cast<std::size_t>(p.size()) / 2);
  for (std::size_t j = 0; j < z.size(); ++j)
    z[j] = {p[static_cast<Eigen::Index>(2 * j)], p[static_cast<Eigen::Index>(2 * j + 1)]};
  return z;
}

Vec from_complex(const std::vector<std::complex<double>>& z) {
  Vec p(static_cast<Eigen::Index>(2 * z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) {
    p[static_cast<Eigen::Index>(2 * j)] = z[j].real();
    p[static_cast<Eigen::Index>(2 * j + 1)] = z[j].imag();
  }
  return p;
}

MapUnderTest identity_map() {
  return [](const Vec& p) { return p; };
}

MapUnderTest giroux_ambient_map(double t, std::size_t d) {
  return [t, d](const Vec& p) {
    if (static_cast<std::size_t>(p.size()) != 2 * d) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
    // Difference stencils leave the sphere by O(h^2); tau_t is defined on a
    // neighborhood of the closed ball.
    return from_complex(giroux_map(t, to_complex(p), 1e-6));
  };
}

MapUnderTest conjugate_first_map() {
  return [](const Vec& p) {
    Vec q = p;
    q[1] = -q[1];
    return q;
  };
}

VerificationReport verify_contactomorphism(const MapUnderTest& map, const FormSpec& form, const Manifold& m,
                                           std::size_t samples, double fd_step, std::uint64_t seed,
                                           double tolerance) {
  VerificationReport r;
  r.check = "contactomorphism";
  r.samples = samples;
  r.fd_step = fd_step;
  r.tolerance = tolerance;
  r.seed = seed;
  r.min_margin = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Vec p = m.sample(rng);
    const Vec q = map(p);
    if (std::abs(m.constraint(q)) > 1e-9) throw Error(ErrorCode::OffManifold, "map leaves the manifold");
    const Mat U = m.tangent_frame(p);
    const Vec ap = form(p), aq = form(q);
    Vec A(U.cols()), B(U.cols());
    for (Eigen::Index i = 0; i < U.cols(); ++i) {
      const Vec plus = p + fd_step * U.col(i), minus = p - fd_step * U.col(i);
      const Vec step = (plus - minus) / (2 * fd_step);
      B[i] = ap.dot(step);
      A[i] = aq.dot((map(plus) - map(minus)) / (2 * fd_step));
    }
    const double bb = B.squaredNorm();
    const double factor = bb > 0 ? A.dot(B) / bb : 0;
    const double residual = (A - factor * B).norm() / std::max(A.norm(), 1e-300);
    r.max_residual = std::max(r.max_residual, residual);
    r.min_margin = std::min(r.min_margin, factor);
  }
  if (samples == 0) r.min_margin = 0;
  r.passed = samples > 0 && r.max_residual < tolerance && r.min_margin > 0;
  r.values["min_factor"] = r.min_margin;
  return r;
}

namespace {

Mat fd_jacobian(const FormSpec& form, const Vec& p, double h) {
  const Eigen::Index n = p.size();
  Mat J(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    J.col(j) = (form(plus) - form(minus)) / (plus[j] - minus[j]);
  }
  return J;
}

Vec fd_gradient(const ScalarField& f, const Vec& p, double h) {
  Vec g(p.size());
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    Vec plus = p, minus = p;
    plus[j] += h;
    minus[j] -= h;
    g[j] = (f(plus) - f(minus)) / (plus[j] - minus[j]);
  }
  return g;
}

constexpr double kSolveTolerance = 1e-8;
constexpr double kMaxCondition = 1e12;

struct StackedSolve {
  Vec x;
  double condition;
};

StackedSolve solve_stacked(const Mat& A, const Vec& b) {
  const Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vec& sv = svd.singularValues();
  const double smin = sv[sv.size() - 1];
  const double cond = smin > 0 ? sv[0] / smin : std::numeric_limits<double>::infinity();
  if (!(cond < kMaxCondition)) throw Error(ErrorCode::IllConditioned, "contact system is numerically singular");
  return {svd.solve(b), cond};
}

}  // namespace

ContactField hamiltonian_vector_field(const FormSpec& form, const Manifold& m, const ScalarField& h, const Vec& p,
                                      double fd_step) {
  if (static_cast<std::size_t>(p.size()) != m.ambient_dim)
    throw Error(ErrorCode::InvalidArgument, "point has the wrong ambient dimension");
  if (std::abs(m.constraint(p)) > 1e-9) throw Error(ErrorCode::OffManifold, "point is off the manifold");
  const Mat U = m.tangent_frame(p);
  const Eigen::Index k = U.cols();

  const Vec a = U.transpose() * form(p);
  const Mat J = fd_jacobian(form, p, fd_step);
  Mat Omega = U.transpose() * (J.transpose() - J) * U;
  Omega = (0.5 * (Omega - Omega.transpose())).eval();

  Mat S(k + 1, k);
  Vec rhs = Vec::Zero(k + 1);
  S.topRows(k) = Omega;
  S.row(k) = a.transpose();
  rhs[k] = 1;
  const StackedSolve reeb = solve_stacked(S, rhs);
  const Vec& r = reeb.x;

  ContactField out;
  out.reeb = U * r;
  out.reeb_residual = (Omega * r).norm() + std::abs(a.dot(r) - 1);

  const Vec dh = U.transpose() * fd_gradient(h, p, fd_step);
  const double dhR = dh.dot(r);
  const double hp = h(p);
  S.topRows(k) = Omega.transpose();
  rhs.head(k) = dhR * a - dh;
  rhs[k] = hp;
  const StackedSolve field = solve_stacked(S, rhs);
  const Vec& x = field.x;
  out.field = U * x;
  out.field_residual = (Omega.transpose() * x - rhs.head(k)).norm() + std::abs(a.dot(x) - hp);
  out.condition = field.condition;

  if (!(out.reeb_residual < kSolveTolerance) || !(out.field_residual < kSolveTolerance))
    throw Error(ErrorCode::IllConditioned, "contact system residual exceeds 1e-8");
  return out;
}

Vec reeb_field(const FormSpec& form, const Manifold& m, const Vec& p, double fd_step) {
  return hamiltonian_vector_field(form, m, [](const Vec&) { return 1.0; }, p, fd_step).reeb;
}

VectorField hamiltonian_flow_field(const FormSpec& form, const Manifold& m, ScalarField h, double fd_step) {
  return [form, m, h = std::move(h), fd_step](const Vec& p) {
    return hamiltonian_vector_field(form, m, h, m.project(p), fd_step).field;
  };
}

FlowResult flow(const VectorField& field, const Manifold& m, const Vec& p, double T, double dt,
                std::size_t record_every) {
  if (!(dt > 0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "T must be nonnegative");
  const double bound = 10 * (p.norm() + 1);
  FlowResult r;
  r.point = p;
  if (record_every > 0) r.trajectory.push_back(p);
  double t = 0;
  while (t < T) {
    const double h = std::min(dt, T - t);
    const Vec& y = r.point;
    const Vec k1 = field(y);
    const Vec k2 = field(y + 0.5 * h * k1);
    const Vec k3 = field(y + 0.5 * h * k2);
    const Vec k4 = field(y + h * k3);
    Vec next = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!next.allFinite() || next.norm() > bound) throw Error(ErrorCode::BlowUp, "trajectory left the ambient bound");
    r.max_drift = std::max(r.max_drift, std::abs(m.constraint(next)));
    r.point = m.project(next);
    ++r.steps;
    // Landing exactly on T avoids an extra sliver step from accumulated rounding.
    t = (T - t - h <= 1e-12 * std::max(1.0, T)) ? T : t + h;
    if (record_every > 0 && r.steps % record_every == 0) r.trajectory.push_back(r.point);
  }
  return r;
}

double measure_period(const VectorField& field, const Manifold& m, const Vec& p, double dt, double t_max) {
  const FlowResult path = flow(field, m, p, t_max, dt, 1);
  std::vector<double> dist;
  dist.reserve(path.trajectory.size());
  double far = 0;
  for (const Vec& q : path.trajectory) {
    dist.push_back((q - p).norm());
    far = std::max(far, dist.back());
  }
  if (far == 0) throw Error(ErrorCode::InvalidArgument, "stationary point has no period");
  bool left = false;
  for (std::size_t i = 1; i + 1 < dist.size(); ++i) {
    if (dist[i] > 0.5 * far) left = true;
    if (!left || dist[i] > dist[i - 1] || dist[i] > dist[i + 1]) continue;
    // Squared distance is smooth through the return; fit a parabola.
    const double a = dist[i - 1] * dist[i - 1], b = dist[i] * dist[i], c = dist[i + 1] * dist[i + 1];
    const double denom = a - 2 * b + c;
    const double shift = denom > 0 ? 0.5 * (a - c) / denom : 0;
    return (static_cast<double>(i) + shift) * dt;
  }
  throw Error(ErrorCode::InvalidArgument, "no return to the initial point before t_max");
}

VectorField rotation_field(std::size_t d, const std::vector<std::size_t>& coords) {
  return [d, coords](const Vec& p) {
    if (static_cast<std::size_t>(p.size()) != 2 * d) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
    Vec v = Vec::Zero(p.size());
    for (std::size_t j : coords) {
      const auto x = static_cast<Eigen::Index>(2 * j);
      v[x] = -2 * std::numbers::pi * p[x + 1];
      v[x + 1] = 2 * std::numbers::pi * p[x];
    }
    return v;
  };
}

}  // namespace toric::numerics
