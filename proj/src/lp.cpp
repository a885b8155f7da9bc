#include "toric/lp.hpp"

#include "toric/error.hpp"

#include <optional>

namespace toric::lp {

void Problem::add_le(RatVector row, Rational rhs) {
  if (row.size() != n_) throw Error(ErrorCode::InvalidArgument, "LP row has wrong length");
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
  is_eq_.push_back(false);
}

void Problem::add_ge(RatVector row, Rational rhs) {
  for (auto& x : row) x = -x;
  add_le(std::move(row), -rhs);
}

void Problem::add_eq(RatVector row, Rational rhs) {
  if (row.size() != n_) throw Error(ErrorCode::InvalidArgument, "LP row has wrong length");
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
  is_eq_.push_back(true);
}

namespace {

// Dense tableau. Columns: x+ (n), x- (n), slacks (one per <= row), artificials
// (one per row), then the right-hand side. The last row holds reduced costs of
// the current maximization objective in "z - c.x = 0" form.
struct Tableau {
  std::size_t m = 0;
  std::size_t cols = 0;  // without rhs
  std::vector<RatVector> t;
  std::vector<std::size_t> basis;

  Rational& rhs(std::size_t i) { return t[i][cols]; }
  RatVector& obj() { return t[m]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Runs Bland's rule over columns [0, limit). Returns false when unbounded.
  bool optimize(std::size_t limit) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj()[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][*enter] <= 0) continue;
        const Rational ratio = rhs(i) / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void set_objective(const RatVector& c_full) {
    RatVector& z = obj();
    for (std::size_t j = 0; j <= cols; ++j) z[j] = 0;
    for (std::size_t j = 0; j < c_full.size(); ++j) z[j] = -c_full[j];
    // Price out basic columns.
    for (std::size_t i = 0; i < m; ++i) {
      const Rational f = z[basis[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[i][j];
    }
  }
};

struct PhaseOne {
  Tableau tab;
  std::size_t n = 0;
  std::size_t first_art = 0;
  bool feasible = false;
};

PhaseOne phase_one(std::size_t n, const std::vector<RatVector>& rows, const std::vector<Rational>& rhs,
                   const std::vector<bool>& is_eq) {
  const std::size_t m = rows.size();
  std::size_t slacks = 0;
  for (bool e : is_eq) slacks += e ? 0 : 1;

  PhaseOne p;
  p.n = n;
  Tableau& tab = p.tab;
  tab.m = m;
  tab.cols = 2 * n + slacks + m;
  p.first_art = 2 * n + slacks;
  tab.t.assign(m + 1, RatVector(tab.cols + 1, Rational(0)));
  tab.basis.assign(m, 0);

  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    RatVector& r = tab.t[i];
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = rows[i][j];
      r[n + j] = -rows[i][j];
    }
    if (!is_eq[i]) r[2 * n + s++] = 1;
    r[tab.cols] = rhs[i];
    if (r[tab.cols] < 0)
      for (auto& x : r) x = -x;
    r[p.first_art + i] = 1;
    tab.basis[i] = p.first_art + i;
  }

  RatVector c(tab.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) c[p.first_art + i] = -1;
  tab.set_objective(c);
  tab.optimize(tab.cols);
  p.feasible = (tab.obj()[tab.cols] == 0);
  if (!p.feasible) return p;

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < tab.m;) {
    if (tab.basis[i] < p.first_art) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < p.first_art; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tab.m;
    }
  }
  return p;
}

RatVector extract(const Tableau& tab, std::size_t n) {
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < tab.m; ++i) {
    const std::size_t b = tab.basis[i];
    if (b < n)
      x[b] += tab.t[i][tab.cols];
    else if (b < 2 * n)
      x[b - n] -= tab.t[i][tab.cols];
  }
  return x;
}

}  // namespace

bool Problem::feasible() const { return phase_one(n_, rows_, rhs_, is_eq_).feasible; }

Solution Problem::maximize() const {
  PhaseOne p = phase_one(n_, rows_, rhs_, is_eq_);
  Solution sol;
  if (!p.feasible) return sol;

  Tableau& tab = p.tab;
  RatVector c(tab.cols, Rational(0));
  for (std::size_t j = 0; j < n_ && j < objective_.size(); ++j) {
    c[j] = objective_[j];
    c[n_ + j] = -objective_[j];
  }
  tab.set_objective(c);
  if (!tab.optimize(p.first_art)) {
    sol.status = Status::Unbounded;
    sol.x = extract(tab, n_);
    return sol;
  }
  sol.status = Status::Optimal;
  sol.x = extract(tab, n_);
  sol.value = tab.obj()[tab.cols];
  return sol;
}

}  // namespace toric::lp
