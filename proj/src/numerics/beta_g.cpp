#include "toric/numerics/beta_g.hpp"

#include "toric/error.hpp"
#include "toric/kernels.hpp"

#include <cmath>

namespace toric::numerics {

namespace {

void check_eps(double eps) {
  if (!(eps > 0 && eps <= 1)) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1]");
}

double grid_point(std::size_t i, std::size_t grid) {
  return -1 + (2.0 * static_cast<double>(i)) / static_cast<double>(grid);
}

}  // namespace

double delta_eps(double eps, double h) {
  check_eps(eps);
  if (h <= -eps) return -1;
  if (h >= 0) return h;
  const double a3 = 10 - 4 * eps, a4 = 7 * eps - 15, a5 = 6 - 3 * eps;
  const double s = (h + eps) / eps;
  return -1 + s * s * s * (a3 + s * (a4 + s * a5));
}

double delta_eps_derivative(double eps, double h) {
  check_eps(eps);
  if (h <= -eps) return 0;
  if (h >= 0) return 1;
  const double a3 = 10 - 4 * eps, a4 = 7 * eps - 15, a5 = 6 - 3 * eps;
  const double s = (h + eps) / eps;
  return s * s * (3 * a3 + s * (4 * a4 + s * 5 * a5)) / eps;
}

Profile Profile::identity() {
  return {"identity", [](double h) { return h; }, [](double) { return 1.0; }, std::nullopt};
}

Profile Profile::zero() {
  return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }, std::nullopt};
}

Profile Profile::constant(double c) {
  return {"constant", [c](double) { return c; }, [](double) { return 0.0; }, std::nullopt};
}

Profile Profile::delta(double eps, double s) {
  check_eps(eps);
  return {"delta",
          [eps, s](double h) { return (1 - s) * h + s * delta_eps(eps, h); },
          [eps, s](double h) { return (1 - s) + s * delta_eps_derivative(eps, h); },
          std::make_pair(eps, s)};
}

double beta_g_criterion(const Profile& p, double h) { return 2 * h * p.g(h) + p.dg(h) * (1 - h * h); }

VerificationReport contact_condition_beta_g(const Profile& p, std::size_t grid) {
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be at least 1");
  kernels::Extrema ex;
  if (p.delta_family) {
    ex = kernels::beta_g_delta_extrema(p.delta_family->first, p.delta_family->second, grid);
  } else {
    for (std::size_t i = 0; i <= grid; ++i) {
      const double e = beta_g_criterion(p, grid_point(i, grid));
      if (i == 0 || e < ex.min) ex.min = e;
      if (i == 0 || e > ex.max) ex.max = e;
      if (i == 0 || std::abs(e) < ex.min_abs) {
        ex.min_abs = std::abs(e);
        ex.argmin_abs = i;
      }
    }
  }
  VerificationReport r;
  r.check = "beta_g_contact_condition";
  r.samples = grid + 1;
  r.min_margin = ex.min_abs;
  const double sign = ex.min > 0 ? 1 : (ex.max < 0 ? -1 : 0);
  r.passed = sign != 0 && ex.min_abs > 0;
  r.values["min"] = ex.min;
  r.values["max"] = ex.max;
  r.values["argmin_h"] = grid_point(ex.argmin_abs, grid);
  r.values["sign"] = sign;
  if (p.delta_family) {
    r.values["eps"] = p.delta_family->first;
    r.values["s"] = p.delta_family->second;
  }
  return r;
}

std::vector<std::pair<double, double>> beta_g_series(const Profile& p, std::size_t grid) {
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be at least 1");
  std::vector<std::pair<double, double>> out;
  out.reserve(grid + 1);
  for (std::size_t i = 0; i <= grid; ++i) {
    const double h = grid_point(i, grid);
    out.emplace_back(h, beta_g_criterion(p, h));
  }
  return out;
}

}  // namespace toric::numerics
