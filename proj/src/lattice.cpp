#include "toric/lattice.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <utility>

namespace toric {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in apply");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = std::move(s);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  return g == 1;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

// Floor-free quotient: truncating division keeps |remainder| < |divisor|,
// which is all the Euclidean reduction needs.
Integer quot(const Integer& a, const Integer& b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  IntMatrix D = M;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return {std::move(U), std::move(D), std::move(V)};

      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = quot(D(i, t), D(t, t));
        add_row(D, i, t, q);
        add_row(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = quot(D(t, j), D(t, t));
        add_col(D, j, t, q);
        add_col(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, Integer(-1));
            add_row(U, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (!divides) continue;

      if (D(t, t) < 0) {
        for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
        for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
      }
      break;
    }
  }
  return {std::move(U), std::move(D), std::move(V)};
}

std::size_t rank(const IntMatrix& M) {
  // Bareiss-style fraction-free elimination on a copy.
  IntMatrix A = M;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t p = r;
    while (p < A.rows() && A(p, c) == 0) ++p;
    if (p == A.rows()) continue;
    swap_rows(A, r, p);
    for (std::size_t i = r + 1; i < A.rows(); ++i) {
      for (std::size_t j = c + 1; j < A.cols(); ++j)
        A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  return rank(IntMatrix::from_rows(rows, dim));
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(A, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& M) {
  return M.rows() == M.cols() && abs(determinant(M)) == 1;
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  if (!is_unimodular(M)) throw Error(ErrorCode::NotUnimodular, "matrix is not unimodular");
  // U M V = I for a unimodular M, hence M^{-1} = V U.
  const SmithForm s = smith_normal_form(M);
  return s.V * s.U;
}

Integer saturation_index(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) return 1;
  const SmithForm s = smith_normal_form(IntMatrix::from_rows(rows, dim));
  Integer index = 1;
  for (const auto& d : s.diagonal())
    if (d != 0) index *= d;
  return index;
}

IntMatrix unimodular_completion(const std::vector<IntVector>& vectors, std::size_t dim) {
  const std::size_t k = vectors.size();
  if (k == 0) return IntMatrix::identity(dim);
  if (rank(vectors, dim) != k || saturation_index(vectors, dim) != 1)
    throw Error(ErrorCode::InvalidArgument, "vectors are not a basis of a saturated sublattice");

  // Prefer standard basis vectors as the complement so that charts stay
  // recognizable (e.g. a coordinate subset of the identity maps to a
  // permutation). W is then the inverse of the completed basis.
  std::vector<IntVector> basis = vectors;
  for (std::size_t i = 0; i < dim && basis.size() < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    basis.push_back(e);
    if (rank(basis, dim) != basis.size() || saturation_index(basis, dim) != 1) basis.pop_back();
  }
  if (basis.size() == dim) {
    const IntMatrix B = IntMatrix::from_rows(basis, dim).transpose();
    if (is_unimodular(B)) return unimodular_inverse(B);
  }

  // Fallback: U B V = [I_k; 0] for B with the vectors as columns, so
  // W = diag(V, I) U satisfies W B = [I_k; 0].
  const IntMatrix B = IntMatrix::from_rows(vectors, dim).transpose();
  const SmithForm s = smith_normal_form(B);
  IntMatrix blockV = IntMatrix::identity(dim);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) blockV(i, j) = s.V(i, j);
  return blockV * s.U;
}

}  // namespace toric
