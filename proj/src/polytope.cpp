#include "toric/polytope.hpp"

#include "toric/error.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

namespace toric {

bool solve_square(std::vector<RatVector> M, RatVector b, RatVector& x) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(M[p], M[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      const Rational f = M[i][c] / M[c][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
      b[i] -= f * b[c];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
  return true;
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidPolytope, what); }

lp::Problem feasible_region(std::size_t n, const std::vector<LabeledFacet>& facets, std::size_t extra) {
  lp::Problem lp(n + extra);
  for (const auto& f : facets) {
    RatVector row(n + extra, Rational(0));
    for (std::size_t k = 0; k < n; ++k) row[k] = f.normal[k];
    lp.add_ge(std::move(row), f.constant);
  }
  return lp;
}

void check_full_dimensional(std::size_t n, const std::vector<LabeledFacet>& facets) {
  // maximize s subject to <x, u_i> - s >= kappa_i, s <= 1.
  lp::Problem lp(n + 1);
  for (const auto& f : facets) {
    RatVector row(n + 1, Rational(0));
    for (std::size_t k = 0; k < n; ++k) row[k] = f.normal[k];
    row[n] = -1;
    lp.add_ge(std::move(row), f.constant);
  }
  RatVector cap(n + 1, Rational(0));
  cap[n] = 1;
  lp.add_le(cap, 1);
  lp.set_objective(cap);
  const lp::Solution sol = lp.maximize();
  if (sol.status != lp::Status::Optimal || sol.value <= 0) invalid("polytope is empty or not full-dimensional");
}

void check_bounded(std::size_t n, const std::vector<LabeledFacet>& facets) {
  for (std::size_t k = 0; k < n; ++k)
    for (int sign : {1, -1}) {
      lp::Problem lp = feasible_region(n, facets, 0);
      RatVector obj(n, Rational(0));
      obj[k] = sign;
      lp.set_objective(std::move(obj));
      if (lp.maximize().status != lp::Status::Optimal) invalid("polytope is unbounded");
    }
}

void for_each_subset(std::size_t N, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > N) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == N - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LabeledPolytope LabeledPolytope::make(std::size_t dim, std::vector<LabeledFacet> facets) {
  for (const auto& f : facets) {
    if (f.normal.size() != dim) invalid("facet normal length differs from polytope dimension");
    if (!is_primitive(f.normal)) invalid("facet normal is not primitive");
    if (f.label < 1) invalid("facet labels must be positive");
  }
  LabeledPolytope p(dim, std::move(facets));
  if (dim == 0) {
    if (!p.facets_.empty()) invalid("a point polytope has no facets");
    p.vertices_.push_back({});
    return p;
  }
  check_full_dimensional(dim, p.facets_);
  check_bounded(dim, p.facets_);

  const std::size_t N = p.facets_.size();
  std::vector<std::size_t> tight_count(N, 0);
  for_each_subset(N, dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> M;
    RatVector b;
    for (std::size_t i : idx) {
      M.push_back(to_rational(p.facets_[i].normal));
      b.push_back(p.facets_[i].constant);
    }
    RatVector x;
    if (!solve_square(std::move(M), std::move(b), x) || !p.contains(x)) return;
    if (std::find(p.vertices_.begin(), p.vertices_.end(), x) != p.vertices_.end()) return;
    std::size_t tight = 0;
    for (std::size_t i = 0; i < N; ++i)
      if (p.slack(i, x) == 0) {
        ++tight;
        ++tight_count[i];
      }
    if (tight != dim) invalid("polytope is not simple");
    p.vertices_.push_back(std::move(x));
  });
  for (std::size_t i = 0; i < N; ++i)
    if (tight_count[i] == 0) invalid("facet " + std::to_string(i) + " is redundant");
  std::sort(p.vertices_.begin(), p.vertices_.end());
  return p;
}

Rational LabeledPolytope::slack(std::size_t facet, const RatVector& x) const {
  return dot(x, facets_[facet].normal) - facets_[facet].constant;
}

bool LabeledPolytope::contains(const RatVector& x) const {
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (slack(i, x) < 0) return false;
  return true;
}

bool LabeledPolytope::is_interior(const RatVector& x) const {
  if (x.size() != dim_) return false;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (slack(i, x) <= 0) return false;
  return true;
}

bool LabeledPolytope::in_facet_interior(std::size_t facet, const RatVector& x) const {
  if (facet >= facets_.size() || x.size() != dim_) return false;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const Rational s = slack(i, x);
    if (i == facet ? s != 0 : s <= 0) return false;
  }
  return true;
}

LabeledPolytope LabeledPolytope::affine_image(const IntMatrix& A, const RatVector& b) const {
  // <x, u> >= k with x = A^{-1}(y - b) becomes <y, A^{-T} u> >= k + <b, A^{-T} u>.
  const IntMatrix inv_t = unimodular_inverse(A).transpose();
  std::vector<LabeledFacet> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    IntVector u = inv_t.apply(f.normal);
    Rational k = f.constant + dot(b, u);
    out.push_back({std::move(u), std::move(k), f.label});
  }
  return make(dim_, std::move(out));
}

bool LabeledPolytope::same_facets(const LabeledPolytope& other) const {
  if (dim_ != other.dim_ || facets_.size() != other.facets_.size()) return false;
  auto key = [](const LabeledFacet& f) { return std::make_tuple(f.normal, f.constant, f.label); };
  std::vector<std::tuple<IntVector, Rational, Integer>> a, b;
  for (const auto& f : facets_) a.push_back(key(f));
  for (const auto& f : other.facets_) b.push_back(key(f));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace toric
