#include "toric/reeb_slice.hpp"

#include "toric/error.hpp"
#include "toric/lp.hpp"

#include <algorithm>

namespace toric {

namespace {

std::vector<Face> edges(const Cone& c) {
  std::vector<Face> out;
  for (Face& f : faces(c))
    if (f.dim == 1 && f.facets.size() + 1 == c.dim()) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) { return a.facets < b.facets; });
  return out;
}

void require_reeb_type(const Cone& c) {
  if (!classify(c).reeb_type) throw Error(ErrorCode::NotReebType, "cone is not good and strictly convex");
}

bool completes_basis(const Cone& c, const std::vector<std::size_t>& idx, const IntVector& R) {
  IntMatrix M(c.dim(), c.dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t k = 0; k < c.dim(); ++k) M(r, k) = c.normals()[idx[r]][k];
  for (std::size_t k = 0; k < c.dim(); ++k) M(c.dim() - 1, k) = R[k];
  return is_unimodular(M);
}

// Permutation sending e_1 to e_d and e_i to e_{i-1} otherwise.
IntMatrix cycle_first_to_last(std::size_t d) {
  IntMatrix P(d, d);
  P(d - 1, 0) = 1;
  for (std::size_t i = 1; i < d; ++i) P(i - 1, i) = 1;
  return P;
}

}  // namespace

ReebSynthesis synthesize_reeb(const Cone& c) {
  require_reeb_type(c);
  const std::size_t d = c.dim();
  const auto& v = c.normals();
  const auto es = edges(c);
  if (es.empty()) throw Error(ErrorCode::NoEdge, "no d-1 facets meet in an edge");
  const std::vector<std::size_t>& edge = es.front().facets;

  std::vector<IntVector> edge_normals;
  for (std::size_t i : edge) edge_normals.push_back(v[i]);
  const IntMatrix W = unimodular_completion(edge_normals, d);

  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!std::binary_search(edge.begin(), edge.end(), j)) rest.push_back(j);
  std::vector<IntVector> moved;  // W v_j for j in rest
  for (std::size_t j : rest) moved.push_back(W.apply(v[j]));

  // Weights on the remaining normals with sum a_j (W v_j)_d = target.
  const bool any_positive =
      std::any_of(moved.begin(), moved.end(), [&](const IntVector& m) { return m[d - 1] > 0; });
  const int target = any_positive ? 1 : -1;
  Integer total = 0;
  for (const auto& m : moved) total += m[d - 1];
  RatVector a(v.size(), Rational(0));
  if (total * target > 0) {
    for (std::size_t r = 0; r < rest.size(); ++r) a[rest[r]] = make_rational(target, total);
  } else {
    std::size_t pivot = 0;
    while (moved[pivot][d - 1] * target <= 0) ++pivot;
    Integer others = 0;
    for (std::size_t r = 0; r < rest.size(); ++r)
      if (r != pivot) {
        a[rest[r]] = 1;
        others += moved[r][d - 1];
      }
    a[rest[pivot]] = make_rational(target - others, moved[pivot][d - 1]);
  }

  // Edge weights: raise each remaining coordinate to an integer.
  IntVector Rw(d, Integer(0));
  Rw[d - 1] = target;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    Rational s = 0;
    for (std::size_t r = 0; r < rest.size(); ++r) s += a[rest[r]] * moved[r][k];
    Rational ak = s > 0 ? Rational(ceil_div(s)) - s : -s;
    if (ak == 0) ak = 1;
    a[edge[k]] = ak;
    Rw[k] = numer(ak + s);
  }

  ReebSynthesis out;
  out.reeb = unimodular_inverse(W).apply(Rw);
  out.coefficients = std::move(a);
  out.basis_witness = edge;

  RatVector check(d, Rational(0));
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = 0; k < d; ++k) check[k] += out.coefficients[j] * v[j][k];
  if (check != to_rational(out.reeb) || !completes_basis(c, edge, out.reeb))
    throw Error(ErrorCode::InvariantViolation, "synthesized Reeb vector fails its own checks");
  return out;
}

ReebSynthesis reeb_from_vector(const Cone& c, const IntVector& R) {
  const std::size_t d = c.dim(), N = c.size();
  if (R.size() != d) throw Error(ErrorCode::InvalidArgument, "Reeb vector length differs from cone dimension");
  require_reeb_type(c);

  // maximize t subject to sum a_j v_j = R, a_j >= t, t <= 1.
  lp::Problem lp(N + 1);
  for (std::size_t k = 0; k < d; ++k) {
    RatVector row(N + 1, Rational(0));
    for (std::size_t j = 0; j < N; ++j) row[j] = c.normals()[j][k];
    lp.add_eq(std::move(row), R[k]);
  }
  for (std::size_t j = 0; j < N; ++j) {
    RatVector row(N + 1, Rational(0));
    row[j] = 1;
    row[N] = -1;
    lp.add_ge(std::move(row), 0);
  }
  RatVector t(N + 1, Rational(0));
  t[N] = 1;
  lp.add_le(t, 1);
  lp.set_objective(t);
  const lp::Solution sol = lp.maximize();
  if (sol.status != lp::Status::Optimal || sol.value <= 0)
    throw Error(ErrorCode::NotReebType, "vector is not in the interior of the dual cone");

  ReebSynthesis out;
  out.reeb = R;
  out.coefficients.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(N));
  for (const Face& e : edges(c))
    if (completes_basis(c, e.facets, R)) {
      out.basis_witness = e.facets;
      break;
    }
  return out;
}

Integer facet_label(const IntVector& v, const IntVector& R) {
  if (v.size() != R.size()) throw Error(ErrorCode::InvalidArgument, "vector lengths differ");
  if (rank({v, R}, v.size()) < 2) throw Error(ErrorCode::Collinear, "normal and Reeb vector are collinear");
  return saturation_index({v, R}, v.size());
}

IntMatrix slice_chart(const IntVector& R) {
  const IntVector p = primitive(R);
  return cycle_first_to_last(p.size()) * unimodular_completion({p}, p.size());
}

RatVector to_slice_coords(const IntMatrix& chart, const RatVector& x) {
  // x' = W^{-T} x; W^{-T} = (W^{-1})^T.
  const IntMatrix inv = unimodular_inverse(chart);
  const std::size_t d = chart.rows();
  RatVector y(d - 1, Rational(0));
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t k = 0; k < d; ++k) y[i] += inv(k, i) * x[k];
  return y;
}

RatVector from_slice_coords(const IntMatrix& chart, const RatVector& y, const Rational& height) {
  const std::size_t d = chart.rows();
  RatVector x(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i + 1 < d; ++i) x[k] += chart(i, k) * y[i];
    x[k] += chart(d - 1, k) * height;
  }
  return x;
}

LabeledPolytope slice(const Cone& c, const ReebSynthesis& rs, const Rational& level) {
  const std::size_t d = c.dim();
  const auto& v = c.normals();
  if (level <= 0) throw Error(ErrorCode::EmptySlice, "slice level must be positive");
  if (rs.reeb.size() != d || rs.coefficients.size() != v.size())
    throw Error(ErrorCode::InvalidArgument, "Reeb data does not match the cone");
  if (lineality_dim(c) != 0) throw Error(ErrorCode::NotReebType, "cone is not strictly convex");
  RatVector sum(d, Rational(0));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (rs.coefficients[j] <= 0) throw Error(ErrorCode::NotReebType, "Reeb coefficients must be positive");
    for (std::size_t k = 0; k < d; ++k) sum[k] += rs.coefficients[j] * v[j][k];
  }
  if (sum != to_rational(rs.reeb)) throw Error(ErrorCode::InvalidArgument, "coefficients do not sum to R");
  if (d == 1) return LabeledPolytope::make(0, {});

  // <x, R> = level  <=>  <x, R/g> = level/g, the last chart coordinate.
  Integer g = 0;
  for (const auto& r : rs.reeb) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(r));
  const Rational h = level / Rational(g);
  const IntMatrix W = slice_chart(rs.reeb);

  std::vector<LabeledFacet> facets;
  for (const auto& n : v) {
    const IntVector m = W.apply(n);
    IntVector u(m.begin(), m.end() - 1);
    Integer gu = 0;
    for (const auto& x : u) gu = boost::multiprecision::gcd(gu, boost::multiprecision::abs(x));
    if (gu == 0) throw Error(ErrorCode::Collinear, "facet normal is parallel to the Reeb vector");
    for (auto& x : u) x /= gu;
    const Integer label = facet_label(n, rs.reeb);
    if (g == 1 && label != gu) throw Error(ErrorCode::InvariantViolation, "chart and SNF facet labels disagree");
    facets.push_back({std::move(u), -h * Rational(m[d - 1]) / Rational(gu), label});
  }
  return LabeledPolytope::make(d - 1, std::move(facets));
}

}  // namespace toric
