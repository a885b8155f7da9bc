#pragma once

#include "toric/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace toric {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// v / gcd(|v_i|), sign preserved. Throws ZeroVector for v = 0.
IntVector primitive(const IntVector& v);

bool is_primitive(const IntVector& v);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

/// Rank over Q (fraction-free elimination).
std::size_t rank(const IntMatrix& M);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t dim);

Integer determinant(const IntMatrix& M);

bool is_unimodular(const IntMatrix& M);

/// Inverse of a unimodular matrix. Throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

/// Index of the lattice spanned by `rows` inside (its real span) ∩ Z^dim:
/// the product of the nonzero Smith invariants.
Integer saturation_index(const std::vector<IntVector>& rows, std::size_t dim);

/// A unimodular W with W * v_i = e_i for the given vectors, which must form a
/// Z-basis of a saturated sublattice (saturation_index == 1, independent).
/// Throws InvalidArgument otherwise.
IntMatrix unimodular_completion(const std::vector<IntVector>& vectors, std::size_t dim);

}  // namespace toric
