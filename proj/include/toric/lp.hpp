#pragma once

#include "toric/rational.hpp"

#include <vector>

namespace toric::lp {

enum class Status { Optimal, Unbounded, Infeasible };

struct Solution {
  Status status = Status::Infeasible;
  RatVector x;     // primal point when feasible
  Rational value;  // objective value when optimal
};

/// A linear program over the rationals with free variables:
///   maximize  c . x   subject to  rows_le[i] . x <= rhs_le[i],
///                                 rows_eq[j] . x  = rhs_eq[j].
/// Solved exactly by a two-phase dense tableau simplex with Bland's rule.
class Problem {
 public:
  explicit Problem(std::size_t num_vars) : n_(num_vars) {}

  std::size_t num_vars() const noexcept { return n_; }

  void add_le(RatVector row, Rational rhs);
  void add_ge(RatVector row, Rational rhs);
  void add_eq(RatVector row, Rational rhs);
  void set_objective(RatVector c) { objective_ = std::move(c); }

  Solution maximize() const;

  /// Phase one only.
  bool feasible() const;

 private:
  std::size_t n_;
  std::vector<RatVector> rows_;
  std::vector<Rational> rhs_;
  std::vector<bool> is_eq_;
  RatVector objective_;
};

}  // namespace toric::lp
