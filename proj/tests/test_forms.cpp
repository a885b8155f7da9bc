#include "doctest.h"

#include "toric/error.hpp"
#include "toric/numerics/beta_g.hpp"
#include "toric/numerics/forms.hpp"
#include "toric/numerics/giroux.hpp"
#include "toric/numerics/prequantization.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace toric;
using namespace toric::numerics;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

Manifold sphere(std::size_t d) { return Manifold::of(ManifoldSpec::sphere(d)); }

// Multiplication by i on C^d in real coordinates.
Vec times_i(const Vec& p) {
  Vec v(p.size());
  for (Eigen::Index j = 0; j < p.size(); j += 2) {
    v[j] = -p[j + 1];
    v[j + 1] = p[j];
  }
  return v;
}

// Exact rotation of z_1 by the angle 2 pi s.
Vec rotate_first(const Vec& p, double s) {
  Vec q = p;
  const double c = std::cos(2 * kPi * s), n = std::sin(2 * kPi * s);
  q[0] = c * p[0] - n * p[1];
  q[1] = n * p[0] + c * p[1];
  return q;
}

}  // namespace

TEST_CASE("manifold embeddings") {
  const Manifold tk = Manifold::of(ManifoldSpec::tk_sphere(3, 2));
  CHECK(tk.ambient_dim == 3 + 2 * 3 + 1);
  CHECK(tk.angles.size() == 3);
  CHECK(FormSpec::beta_k(3, 2).ambient_dim() == tk.ambient_dim);
  CHECK(Manifold::of(ManifoldSpec::product(2)).ambient_dim == FormSpec::beta(2).ambient_dim());
  CHECK(Manifold::of(ManifoldSpec::cosphere(3)).ambient_dim == FormSpec::cosphere(3).ambient_dim());

  std::mt19937_64 rng(1);
  const Vec p = tk.sample(rng);
  CHECK(std::abs(tk.constraint(p)) < 1e-14);
  const Mat U = tk.tangent_frame(p);
  CHECK(U.cols() == static_cast<Eigen::Index>(tk.ambient_dim - 1));
  CHECK((U.transpose() * U - Mat::Identity(U.cols(), U.cols())).norm() < 1e-13);
  CHECK((U.transpose() * tk.gradient(p)).norm() < 1e-13);

  CHECK(code_of([] { sphere(2).tangent_frame(Vec::Zero(4)); }) == ErrorCode::SingularTangentFrame);
}

TEST_CASE("beta equals beta_1 on S^1 x S^2d") {
  std::mt19937_64 rng(2);
  const Manifold m = Manifold::of(ManifoldSpec::product(2));
  for (int i = 0; i < 20; ++i) {
    const Vec p = m.sample(rng);
    CHECK((FormSpec::beta(2)(p) - FormSpec::beta_k(1, 2)(p)).norm() == 0);
  }
}

TEST_CASE("verify_contactomorphism examples") {
  const auto id = verify_contactomorphism(identity_map(), FormSpec::standard(2), sphere(2), 200, 1e-5, 0);
  CHECK(id.passed);
  CHECK(id.max_residual < 1e-12);
  CHECK(id.min_margin == doctest::Approx(1).epsilon(1e-12));

  const auto tau = verify_contactomorphism(giroux_ambient_map(1, 2), FormSpec::standard(2), sphere(2), 300, 1e-5, 1);
  CHECK(tau.passed);
  CHECK(tau.max_residual < 1e-6);
  CHECK(tau.min_margin > 0);

  // On S^1 the conjugation pulls alpha back to -alpha: proportional, wrong sign.
  const auto flip1 = verify_contactomorphism(conjugate_first_map(), FormSpec::standard(1), sphere(1), 50, 1e-5, 2);
  CHECK_FALSE(flip1.passed);
  CHECK(flip1.min_margin < 0);
  const auto flip2 = verify_contactomorphism(conjugate_first_map(), FormSpec::standard(2), sphere(2), 50, 1e-5, 2);
  CHECK_FALSE(flip2.passed);
}

TEST_CASE("contactomorphism check detects a non-contact map") {
  // Real scaling of z_1 against z_2 preserves the sphere only at special
  // points, so use a unitary map that mixes with a real reflection instead:
  // (z1, z2) -> (z1, conj z2) reverses the second summand only.
  const MapUnderTest m = [](const Vec& p) {
    Vec q = p;
    q[3] = -q[3];
    return q;
  };
  CHECK_FALSE(verify_contactomorphism(m, FormSpec::standard(2), sphere(2), 50, 1e-5, 3).passed);
}

TEST_CASE("Reeb field of alpha_st is 2iz") {
  std::mt19937_64 rng(4);
  const Manifold m = sphere(3);
  const FormSpec a = FormSpec::standard(3);
  for (int i = 0; i < 50; ++i) {
    const Vec p = m.sample(rng);
    const ContactField f = hamiltonian_vector_field(a, m, [](const Vec&) { return 1.0; }, p);
    CHECK((f.field - 2 * times_i(p)).norm() < 1e-6);
    CHECK((f.reeb - f.field).norm() < 1e-9);
    CHECK(f.reeb_residual < 1e-8);
    CHECK(f.field_residual < 1e-8);
  }
}

TEST_CASE("contact Hamiltonian equations: h = 0 gives the zero field") {
  std::mt19937_64 rng(5);
  const Manifold m = sphere(2);
  const Vec p = m.sample(rng);
  const auto f = hamiltonian_vector_field(FormSpec::standard(2), m, [](const Vec&) { return 0.0; }, p);
  CHECK(f.field.norm() < 1e-12);
}

TEST_CASE("moment Hamiltonian pi |z_1|^2 generates 2 pi i z_1") {
  std::mt19937_64 rng(6);
  const Manifold m = sphere(2);
  const ScalarField h = [](const Vec& p) { return kPi * (p[0] * p[0] + p[1] * p[1]); };
  for (int i = 0; i < 20; ++i) {
    const Vec p = m.sample(rng);
    const auto f = hamiltonian_vector_field(FormSpec::standard(2), m, h, p);
    Vec expected = Vec::Zero(4);
    expected[0] = -2 * kPi * p[1];
    expected[1] = 2 * kPi * p[0];
    CHECK((f.field - expected).norm() < 1e-6);
  }
}

TEST_CASE("contact Hamiltonian equations: residuals on the other forms") {
  std::mt19937_64 rng(7);
  const ScalarField h = [](const Vec& p) { return std::sin(p[0]) + p[p.size() - 1] * p[1]; };
  for (const ManifoldSpec& spec :
       {ManifoldSpec::product(2), ManifoldSpec::tk_sphere(2, 2), ManifoldSpec::tk_sphere(3, 2),
        ManifoldSpec::cosphere(3)}) {
    const Manifold m = Manifold::of(spec);
    const FormSpec a = FormSpec::of(spec);
    for (int i = 0; i < 10; ++i) {
      const Vec p = m.sample(rng);
      const auto f = hamiltonian_vector_field(a, m, h, p);
      CHECK(f.reeb_residual < 1e-8);
      CHECK(f.field_residual < 1e-8);
      CHECK(std::abs(a(p).dot(f.field) - h(p)) < 1e-8);
      CHECK(std::abs(m.gradient(p).dot(f.field)) < 1e-10);
    }
  }
}

TEST_CASE("contact Hamiltonian equations: rejects a non-contact form and off-manifold points") {
  // beta_g with g = 0 degenerates at h = 0, the equator of S^2.
  const FormSpec degenerate = FormSpec::beta_g(1, [](double) { return 0.0; }, [](double) { return 0.0; });
  const Manifold m = Manifold::of(ManifoldSpec::product(1));
  Vec p(4);
  p << 0.2, 1, 0, 0;
  CHECK(code_of([&] { hamiltonian_vector_field(degenerate, m, [](const Vec&) { return 1.0; }, p); }) ==
        ErrorCode::IllConditioned);
  Vec off(4);
  off << 0.5, 0.5, 0, 0;
  CHECK(code_of([&] { reeb_field(FormSpec::standard(2), sphere(2), off); }) == ErrorCode::OffManifold);
}

TEST_CASE("flow: zero field, rotation accuracy and RK4 order") {
  const Manifold m = sphere(2);
  Vec p(4);
  p << 0.6, 0.0, 0.0, 0.8;
  const auto still = flow([](const Vec& q) { return Vec::Zero(q.size()); }, m, p, 1, 0.1);
  CHECK((still.point - p).norm() == 0);

  const VectorField rot = rotation_field(2, {0});
  const auto once = flow(rot, m, p, 1, 1e-3);
  CHECK((once.point - p).norm() < 1e-9);
  CHECK(once.steps == 1000);

  const double e1 = (flow(rot, m, p, 0.37, 0.02).point - rotate_first(p, 0.37)).norm();
  const double e2 = (flow(rot, m, p, 0.37, 0.01).point - rotate_first(p, 0.37)).norm();
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.7);
  CHECK(order < 4.3);

  CHECK(code_of([&] { flow(rot, m, p, 1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { flow([](const Vec& q) { return Vec(1e6 * q); }, m, p, 1, 0.1); }) == ErrorCode::BlowUp);
}

TEST_CASE("Reeb flow preserves the moment map and has a measurable period") {
  const Manifold m = sphere(2);
  const FormSpec a = FormSpec::standard(2);
  const VectorField reeb = hamiltonian_flow_field(a, m, [](const Vec&) { return 1.0; });
  Vec p(4);
  p << 0.6, 0.0, 0.0, 0.8;
  const auto half = flow(reeb, m, p, 0.5, 1e-3);
  CHECK(std::abs(half.point[0] * half.point[0] + half.point[1] * half.point[1] - 0.36) < 1e-8);
  const double period = measure_period(reeb, m, p, 1e-3, 4);
  CHECK(period == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("beta_g contact condition examples") {
  const auto id = contact_condition_beta_g(Profile::identity(), 1000);
  CHECK(id.passed);
  CHECK(std::abs(id.min_margin - 1) < 1e-12);
  CHECK(id.values.at("argmin_h") == 0);
  CHECK(id.samples == 1001);

  CHECK_FALSE(contact_condition_beta_g(Profile::zero(), 1000).passed);
  CHECK_FALSE(contact_condition_beta_g(Profile::constant(1), 1000).passed);
  for (double s : {0.0, 0.5, 1.0}) CHECK(contact_condition_beta_g(Profile::delta(0.5, s), 1000).passed);

  for (const auto& [h, e] : beta_g_series(Profile::identity(), 10)) CHECK(e == doctest::Approx(1 + h * h));
}

TEST_CASE("delta profile shape") {
  const double eps = 0.5;
  CHECK(delta_eps(eps, -1) == -1);
  CHECK(delta_eps(eps, -eps) == -1);
  CHECK(delta_eps(eps, 0) == 0);
  CHECK(delta_eps(eps, 0.3) == 0.3);
  CHECK(std::abs(delta_eps_derivative(eps, -eps)) < 1e-15);
  CHECK(delta_eps_derivative(eps, -1e-12) == doctest::Approx(1).epsilon(1e-9));
  double prev = -1;
  for (int i = 1; i < 1000; ++i) {
    const double h = -eps + eps * i / 1000.0;
    CHECK(delta_eps(eps, h) > prev);
    prev = delta_eps(eps, h);
    // Matches a central difference of the profile itself.
    const double fd = (delta_eps(eps, h + 1e-6) - delta_eps(eps, h - 1e-6)) / 2e-6;
    CHECK(delta_eps_derivative(eps, h) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK(code_of([] { delta_eps(0, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("beta_g kernel path agrees with the generic grid loop") {
  Profile p = Profile::delta(0.5, 0.5);
  const auto fast = contact_condition_beta_g(p, 999);
  p.delta_family.reset();
  const auto slow = contact_condition_beta_g(p, 999);
  CHECK(std::abs(fast.min_margin - slow.min_margin) < 1e-13);
  CHECK(fast.values.at("argmin_h") == slow.values.at("argmin_h"));
}

TEST_CASE("prequantization lift") {
  const auto constant = prequantization_lift_check([](const Vec&) { return 2.5; }, 2, 50, 0);
  CHECK(constant.passed);
  CHECK(constant.max_residual < 1e-6);

  const ScalarField moment = [](const Vec& w) { return kPi / (1 + w.squaredNorm()); };
  CHECK(prequantization_lift_check(moment, 2, 100, 1).passed);

  // A trigonometric polynomial in the bounded invariants |z_1|^2 and z_j conj(z_1)
  // of the homogeneous coordinates, so h is smooth on all of CP^{d-1}.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-1, 1);
  const double a = coef(rng), b = coef(rng), c = coef(rng);
  const ScalarField trig = [a, b, c](const Vec& w) {
    const double n = 1 / (1 + w.squaredNorm());
    const double u = n * w[0], v = n * w[1];
    return a * std::cos(3 * n) + b * std::sin(2 * u + v) + c * std::cos(u - 2 * v) * std::sin(n);
  };
  CHECK(prequantization_lift_check(trig, 2, 200, 2).passed);
  CHECK(prequantization_lift_check(trig, 3, 50, 3).passed);

  CHECK(code_of([] { prequantization_lift_check([](const Vec&) { return 0.0; }, 1, 1, 0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("lifted moment Hamiltonian flows like the base rotation") {
  // pi |z_1|^2 downstairs is pi / (1 + |w|^2); its field rotates w by -2 pi.
  const ScalarField moment = [](const Vec& w) { return kPi / (1 + w.squaredNorm()); };
  Vec w(2);
  w << 0.3, -0.4;
  const Vec Y = base_hamiltonian_field(moment, w);
  Vec expected(2);
  expected << -2 * kPi * 0.4, -2 * kPi * 0.3;
  CHECK((Y - expected).norm() < 1e-6);
}
