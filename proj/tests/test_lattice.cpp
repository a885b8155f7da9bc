#include "doctest.h"

#include "oracles/lattice_oracles.hpp"
#include "toric/error.hpp"
#include "toric/lattice.hpp"

#include <random>

using namespace toric;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

void check_smith(const IntMatrix& M, const SmithForm& s) {
  CHECK(s.U * M * s.V == s.D);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("primitive divides by the gcd and keeps signs") {
  CHECK(primitive(iv({2, 4})) == iv({1, 2}));
  CHECK(primitive(iv({1, 0, 0})) == iv({1, 0, 0}));
  CHECK(primitive(iv({-3, 6, 9})) == iv({-1, 2, 3}));
  CHECK_THROWS_AS(primitive(iv({0, 0})), Error);
  try {
    primitive(iv({0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("primitive is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v{dist(rng), dist(rng), dist(rng)};
    if (v == iv({0, 0, 0})) continue;
    const IntVector p = primitive(v);
    CHECK(primitive(p) == p);
    CHECK(is_primitive(p));
  }
}

TEST_CASE("smith normal form examples") {
  SUBCASE("identity") {
    const IntMatrix I = IntMatrix::identity(2);
    const auto s = smith_normal_form(I);
    check_smith(I, s);
    CHECK(s.D == I);
  }
  SUBCASE("[[1,0],[1,2]] -> diag(1,2)") {
    const IntMatrix M{{1, 0}, {1, 2}};
    const auto s = smith_normal_form(M);
    check_smith(M, s);
    CHECK(s.D == IntMatrix{{1, 0}, {0, 2}});
  }
  SUBCASE("[[2]]") {
    const IntMatrix M{{2}};
    const auto s = smith_normal_form(M);
    CHECK(s.D == IntMatrix{{2}});
  }
  SUBCASE("rectangular with zero rank deficiency") {
    const IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto s = smith_normal_form(M);
    check_smith(M, s);
    CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
  }
  SUBCASE("zero matrix") {
    const IntMatrix M(2, 3);
    const auto s = smith_normal_form(M);
    check_smith(M, s);
  }
}

TEST_CASE("smith normal form property: random integer matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::uniform_int_distribution<int> shape(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = shape(rng), n = shape(rng);
    IntMatrix M(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = dist(rng);
    const auto s = smith_normal_form(M);
    check_smith(M, s);
    std::size_t nonzero = 0;
    for (const auto& d : s.diagonal()) nonzero += d != 0;
    CHECK(nonzero == rank(M));
  }
}

TEST_CASE("saturation index agrees with determinantal-divisor oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-7, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 3;
    IntVector a(d), b(d);
    for (std::size_t k = 0; k < d; ++k) {
      a[k] = dist(rng);
      b[k] = dist(rng);
    }
    if (rank({a, b}, d) < 2) continue;
    CHECK(saturation_index({a, b}, d) == oracle::pair_index_by_minors(a, b));
  }
}

TEST_CASE("saturation index in Z^2 matches parallelogram point count") {
  CHECK(oracle::count_points_in_parallelogram(2, 0, 0, 3) == 6);
  CHECK(saturation_index({iv({2, 0}), iv({0, 3})}, 2) == 6);
  CHECK(saturation_index({iv({1, 0}), iv({1, 2})}, 2) == 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int a0 = dist(rng), a1 = dist(rng), b0 = dist(rng), b1 = dist(rng);
    if (a0 * b1 - a1 * b0 == 0) continue;
    CHECK(saturation_index({iv({a0, a1}), iv({b0, b1})}, 2) ==
          oracle::count_points_in_parallelogram(a0, a1, b0, b1));
  }
}

TEST_CASE("determinant, rank and unimodular inverse") {
  const IntMatrix U{{2, 1}, {1, 1}};
  CHECK(determinant(U) == 1);
  CHECK(unimodular_inverse(U) * U == IntMatrix::identity(2));
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix W = oracle::random_unimodular(n, rng);
    CHECK(W * unimodular_inverse(W) == IntMatrix::identity(n));
  }
}

TEST_CASE("unimodular completion sends a saturated basis to unit vectors") {
  const std::vector<IntVector> vs{iv({1, 1, 0}), iv({0, 1, 1})};
  const IntMatrix W = unimodular_completion(vs, 3);
  CHECK(is_unimodular(W));
  CHECK(W.apply(vs[0]) == iv({1, 0, 0}));
  CHECK(W.apply(vs[1]) == iv({0, 1, 0}));
  CHECK_THROWS_AS(unimodular_completion({iv({2, 0})}, 2), Error);
}
