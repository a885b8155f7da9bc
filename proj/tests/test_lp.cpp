#include "doctest.h"

#include "toric/lp.hpp"

#include <random>

using namespace toric;
using toric::lp::Problem;
using toric::lp::Status;

TEST_CASE("bounded LP reaches the exact optimum") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0  -> (8/5, 6/5), value 14/5
  Problem p(2);
  p.add_le({1, 2}, 4);
  p.add_le({3, 1}, 6);
  p.add_ge({1, 0}, 0);
  p.add_ge({0, 1}, 0);
  p.set_objective({1, 1});
  const auto s = p.maximize();
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.value == Rational(14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));
}

TEST_CASE("free variables and equalities") {
  // max -x s.t. x + y = 1, y <= 3  -> x = -2
  Problem p(2);
  p.add_eq({1, 1}, 1);
  p.add_le({0, 1}, 3);
  p.set_objective({-1, 0});
  const auto s = p.maximize();
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x[0] == -2);
  CHECK(s.value == 2);
}

TEST_CASE("unbounded and infeasible programs are detected") {
  Problem unb(1);
  unb.add_ge({1}, 0);
  unb.set_objective({1});
  CHECK(unb.maximize().status == Status::Unbounded);

  Problem inf(1);
  inf.add_ge({1}, 1);
  inf.add_le({1}, 0);
  CHECK_FALSE(inf.feasible());
  CHECK(inf.maximize().status == Status::Infeasible);
}

TEST_CASE("degenerate vertex does not cycle (Bland)") {
  // Classic degenerate example; optimum 1 at x = (1, 0, 1, 0).
  Problem p(4);
  p.add_le({Rational(1, 2), Rational(-11, 2), Rational(-5, 2), 9}, 0);
  p.add_le({Rational(1, 2), Rational(-3, 2), Rational(-1, 2), 1}, 0);
  p.add_le({1, 0, 0, 0}, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    RatVector e(4, Rational(0));
    e[k] = 1;
    p.add_ge(e, 0);
  }
  p.set_objective({10, -57, -9, -24});
  const auto s = p.maximize();
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.value == 1);
}

TEST_CASE("LP optimum matches brute-force vertex enumeration in the plane") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    // Random constraints plus a bounding box so the program is bounded.
    std::vector<RatVector> rows{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::vector<Rational> rhs{4, 4, 4, 4};
    for (int k = 0; k < 3; ++k) {
      rows.push_back({dist(rng), dist(rng)});
      rhs.emplace_back(dist(rng) + 3);
    }
    const RatVector c{dist(rng), dist(rng)};
    Problem p(2);
    for (std::size_t i = 0; i < rows.size(); ++i) p.add_le(rows[i], rhs[i]);
    p.set_objective(c);
    const auto s = p.maximize();

    // Oracle: every pairwise intersection that is feasible.
    bool any = false;
    Rational best;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const Rational det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
        if (det == 0) continue;
        const RatVector x{(rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det,
                          (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det};
        bool ok = true;
        for (std::size_t k = 0; k < rows.size() && ok; ++k) ok = dot(rows[k], x) <= rhs[k];
        if (!ok) continue;
        const Rational v = dot(c, x);
        if (!any || v > best) best = v;
        any = true;
      }
    if (!any) {
      CHECK(s.status == Status::Infeasible);
    } else {
      REQUIRE(s.status == Status::Optimal);
      CHECK(s.value == best);
    }
  }
}
