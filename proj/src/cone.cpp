#include "toric/cone.hpp"

#include "toric/error.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace toric {

namespace {

bool parallel(const IntVector& a, const IntVector& b) {
  // Both primitive: parallel iff a == b or a == -b.
  if (a == b) return true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

// Generalized cross product: the vector of signed maximal minors of the
// (m-1) x m matrix with the given rows, orthogonal to every row.
IntVector kernel_vector(const std::vector<IntVector>& rows, std::size_t m) {
  IntVector out(m);
  for (std::size_t skip = 0; skip < m; ++skip) {
    IntMatrix M(m - 1, m - 1);
    for (std::size_t r = 0; r + 1 < m; ++r)
      for (std::size_t k = 0, c = 0; k < m; ++k)
        if (k != skip) M(r, c++) = rows[r][k];
    out[skip] = determinant(M);
    if (skip % 2 == 1) out[skip] = -out[skip];
  }
  return out;
}

// The cone modulo its lineality space, as a pointed cone {y : <y, c_j> >= 0}
// in R^m with m = rank of the normals, plus its extreme rays. Face lattices
// of the two cones coincide (same tight normal sets).
struct PointedModel {
  std::size_t m = 0;
  std::vector<IntVector> normals;  // c_j, one per original normal
  std::vector<IntVector> rays;     // primitive extreme rays
};

PointedModel pointed_model(const Cone& c) {
  const auto& v = c.normals();
  PointedModel out;
  // Coordinates of each normal in a basis of span(normals) picked greedily.
  std::vector<IntVector> basis;
  for (const auto& n : v) {
    basis.push_back(n);
    if (rank(basis, c.dim()) != basis.size()) basis.pop_back();
  }
  out.m = basis.size();
  if (out.m == 0) return out;
  // Solve basis^T coeff = v_j through a square subsystem on independent columns.
  const IntMatrix B = IntMatrix::from_rows(basis, c.dim());
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < c.dim() && cols.size() < out.m; ++k) {
    cols.push_back(k);
    IntMatrix S(out.m, cols.size());
    for (std::size_t r = 0; r < out.m; ++r)
      for (std::size_t q = 0; q < cols.size(); ++q) S(r, q) = B(r, cols[q]);
    if (rank(S) != cols.size()) cols.pop_back();
  }
  IntMatrix S(out.m, out.m);
  for (std::size_t r = 0; r < out.m; ++r)
    for (std::size_t q = 0; q < out.m; ++q) S(q, r) = B(r, cols[q]);
  const Integer det = determinant(S);
  for (const auto& n : v) {
    // Cramer's rule, scaled by |det| to stay integral.
    IntVector coeff(out.m);
    for (std::size_t r = 0; r < out.m; ++r) {
      IntMatrix Sr = S;
      for (std::size_t q = 0; q < out.m; ++q) Sr(q, r) = n[cols[q]];
      coeff[r] = det > 0 ? determinant(Sr) : Integer(-determinant(Sr));
    }
    out.normals.push_back(primitive(coeff));
  }

  // Extreme rays: kernels of rank m-1 subsets of normals lying in the cone.
  const std::size_t N = v.size(), k = out.m - 1;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::set<IntVector> rays;
  while (true) {
    std::vector<IntVector> rows;
    for (std::size_t i : idx) rows.push_back(out.normals[i]);
    if (rank(rows, out.m) == k) {
      IntVector r = primitive(k == 0 ? IntVector{Integer(1)} : kernel_vector(rows, out.m));
      for (int sign : {1, -1}) {
        if (sign < 0)
          for (auto& x : r) x = -x;
        const bool inside = std::all_of(out.normals.begin(), out.normals.end(),
                                        [&](const IntVector& n) { return dot(r, n) >= 0; });
        if (inside) rays.insert(r);
      }
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == N - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

// Closure of a facet set: every normal vanishing on all rays the set vanishes on.
std::vector<std::size_t> closure(const PointedModel& pm, const std::vector<std::size_t>& T,
                                 std::size_t& face_rank) {
  std::vector<IntVector> on;
  for (const auto& r : pm.rays)
    if (std::all_of(T.begin(), T.end(), [&](std::size_t t) { return dot(r, pm.normals[t]) == 0; }))
      on.push_back(r);
  face_rank = rank(on, pm.m);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < pm.normals.size(); ++j)
    if (std::all_of(on.begin(), on.end(), [&](const IntVector& r) { return dot(r, pm.normals[j]) == 0; }))
      out.push_back(j);
  return out;
}

std::vector<IntVector> select(const Cone& c, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(c.normals()[i]);
  return out;
}

}  // namespace

Cone Cone::make(std::size_t dim, std::vector<IntVector> normals) {
  if (dim == 0) throw Error(ErrorCode::InvalidCone, "cone dimension must be positive");
  for (auto& n : normals) {
    if (n.size() != dim) throw Error(ErrorCode::InvalidCone, "normal length differs from cone dimension");
    n = primitive(n);
  }
  std::sort(normals.begin(), normals.end());
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j)
      if (parallel(normals[i], normals[j]))
        throw Error(ErrorCode::InvalidCone, "duplicate or anti-parallel facet normals");
  return Cone(dim, std::move(normals));
}

bool Cone::contains(const RatVector& x) const {
  for (const auto& v : normals_)
    if (dot(x, v) < 0) return false;
  return true;
}

std::vector<Face> faces(const Cone& c) {
  const PointedModel pm = pointed_model(c);
  const std::size_t lineality = c.dim() - pm.m;
  if (pm.m > 0 && rank(pm.rays, pm.m) != pm.m)
    throw Error(ErrorCode::DegenerateCone, "inequality system has empty interior");

  std::size_t r = 0;
  const std::vector<std::size_t> top = closure(pm, {}, r);
  std::vector<Face> out;
  std::set<std::vector<std::size_t>> seen{top};
  std::deque<std::pair<std::vector<std::size_t>, std::size_t>> queue{{top, r}};
  while (!queue.empty()) {
    auto [T, face_rank] = std::move(queue.front());
    queue.pop_front();
    out.push_back({T, lineality + face_rank});
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (std::binary_search(T.begin(), T.end(), i)) continue;
      std::vector<std::size_t> next = T;
      next.insert(std::upper_bound(next.begin(), next.end(), i), i);
      next = closure(pm, next, r);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), r);
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool facet = std::any_of(out.begin(), out.end(), [&](const Face& f) {
      return f.facets.size() == 1 && f.facets[0] == i && f.dim + 1 == c.dim();
    });
    if (!facet) throw Error(ErrorCode::InvalidCone, "normal " + std::to_string(i) + " does not define a facet");
  }
  return out;
}

std::size_t lineality_dim(const Cone& c) { return c.dim() - rank(c.normals(), c.dim()); }

bool contains_line(const Cone& c) {
  const std::size_t d = c.dim();
  for (std::size_t j = 0; j < d; ++j) {
    for (int sign : {1, -1}) {
      lp::Problem lp(d);
      for (const auto& v : c.normals()) lp.add_eq(to_rational(v), 0);
      for (std::size_t k = 0; k < d; ++k) {
        RatVector e(d, Rational(0));
        e[k] = 1;
        lp.add_le(e, 1);
        lp.add_ge(std::move(e), -1);
      }
      RatVector obj(d, Rational(0));
      obj[j] = sign;
      lp.set_objective(std::move(obj));
      const lp::Solution sol = lp.maximize();
      if (sol.status == lp::Status::Optimal && sol.value > 0) return true;
    }
  }
  return false;
}

bool is_good(const Cone& c, GoodnessConvention convention) {
  for (const Face& f : faces(c)) {
    if (convention == GoodnessConvention::ProperFaces && f.dim == 0) continue;
    if (f.facets.empty()) continue;
    const auto normals = select(c, f.facets);
    if (rank(normals, c.dim()) != normals.size()) return false;
    if (saturation_index(normals, c.dim()) != 1) return false;
  }
  return true;
}

ConeClassification classify(const Cone& c, GoodnessConvention convention) {
  ConeClassification out;
  out.lineality_dim = lineality_dim(c);
  out.good = is_good(c, convention);
  const bool line = contains_line(c);
  if (line != (out.lineality_dim > 0))
    throw Error(ErrorCode::InvariantViolation, "rank and LP lineality tests disagree");
  out.strictly_convex = !line;
  out.reeb_type = out.good && out.strictly_convex;
  return out;
}

IntVector transform_lattice_vector(const IntVector& v, const IntMatrix& U) {
  return unimodular_inverse(U).transpose().apply(v);
}

Cone unimodular_transform(const Cone& c, const IntMatrix& U) {
  if (U.rows() != c.dim() || U.cols() != c.dim())
    throw Error(ErrorCode::InvalidArgument, "transform dimension differs from cone dimension");
  const IntMatrix inv_t = unimodular_inverse(U).transpose();
  std::vector<IntVector> normals;
  normals.reserve(c.size());
  for (const auto& v : c.normals()) normals.push_back(inv_t.apply(v));
  return Cone::make(c.dim(), std::move(normals));
}

}  // namespace toric
