#include "simplex.hpp"

#include <utility>
#include <vector>

namespace klz {

namespace {

// Tableau rows: one per constraint, columns: variables then rhs.
// basis[i] = variable index basic in row i.
struct Tableau {
  int m, n;  // constraints, variables (excluding rhs)
  std::vector<VecQ> row;
  VecQ cost;      // reduced cost row, size n+1 (last = -objective)
  std::vector<int> basis;

  Rational& a(int i, int j) { return row[std::size_t(i)][std::size_t(j)]; }
  Rational& rhs(int i) { return row[std::size_t(i)][std::size_t(n)]; }

  void pivot(int r, int c) {
    Rational p = a(r, c);
    for (int j = 0; j <= n; ++j) row[std::size_t(r)][std::size_t(j)] /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = 0; j <= n; ++j) row[std::size_t(i)][std::size_t(j)] -= f * row[std::size_t(r)][std::size_t(j)];
    }
    if (cost[std::size_t(c)] != 0) {
      Rational f = cost[std::size_t(c)];
      for (int j = 0; j <= n; ++j) cost[std::size_t(j)] -= f * row[std::size_t(r)][std::size_t(j)];
    }
    basis[std::size_t(r)] = c;
  }

  // Bland's rule; returns false when optimal, throws domain error on
  // unboundedness.
  bool step() {
    int enter = -1;
    for (int j = 0; j < n; ++j)
      if (cost[std::size_t(j)] < 0) { enter = j; break; }
    if (enter < 0) return false;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (a(i, enter) <= 0) continue;
      Rational ratio = rhs(i) / a(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[std::size_t(i)] < basis[std::size_t(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    require(leave >= 0, Errc::domain, "lp: unbounded");
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LPResult lp_minimize(const MatQ& A, const VecQ& b, const VecQ& c) {
  const int m = A.rows(), n = A.cols();
  require(int(b.size()) == m && int(c.size()) == n, Errc::dimension, "lp: shape mismatch");

  Tableau t;
  t.m = m;
  t.n = n + m;  // originals + artificials
  t.row.assign(std::size_t(m), VecQ(std::size_t(t.n) + 1, Rational(0)));
  t.basis.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) {
    int s = (b[std::size_t(i)] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) t.a(i, j) = s * A.at(i, j);
    t.a(i, n + i) = 1;
    t.rhs(i) = s * b[std::size_t(i)];
    t.basis[std::size_t(i)] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.cost.assign(std::size_t(t.n) + 1, Rational(0));
  for (int i = 0; i < m; ++i) t.cost[std::size_t(n + i)] = 1;
  for (int i = 0; i < m; ++i)  // price out the initial basis
    for (int j = 0; j <= t.n; ++j) t.cost[std::size_t(j)] -= t.row[std::size_t(i)][std::size_t(j)];
  while (t.step()) {}
  if (-t.cost[std::size_t(t.n)] > 0) return {LPStatus::Infeasible, Rational(0), {}};

  // Drive any artificial still basic (at value zero) out of the basis, or drop
  // its (redundant) row.
  for (int i = 0; i < t.m; ++i) {
    if (t.basis[std::size_t(i)] < n) continue;
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (t.a(i, j) != 0) { piv = j; break; }
    if (piv >= 0) {
      t.pivot(i, piv);
    } else {
      t.row.erase(t.row.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.m;
      --i;
    }
  }

  // Phase 2 on original columns only: forbid artificials from re-entering by
  // truncating the column range.
  for (auto& r : t.row) {
    r[std::size_t(n)] = r[std::size_t(t.n)];
    r.resize(std::size_t(n) + 1);
  }
  t.n = n;
  t.cost.assign(std::size_t(n) + 1, Rational(0));
  for (int j = 0; j < n; ++j) t.cost[std::size_t(j)] = c[std::size_t(j)];
  for (int i = 0; i < t.m; ++i) {
    int bi = t.basis[std::size_t(i)];
    if (t.cost[std::size_t(bi)] == 0) continue;
    Rational f = t.cost[std::size_t(bi)];
    for (int j = 0; j <= n; ++j) t.cost[std::size_t(j)] -= f * t.row[std::size_t(i)][std::size_t(j)];
  }
  try {
    while (t.step()) {}
  } catch (const Error&) {
    return {LPStatus::Unbounded, Rational(0), {}};
  }

  VecQ x(std::size_t(n), Rational(0));
  for (int i = 0; i < t.m; ++i)
    if (t.basis[std::size_t(i)] < n) x[std::size_t(t.basis[std::size_t(i)])] = t.rhs(i);
  Rational obj = 0;
  for (int j = 0; j < n; ++j) obj += c[std::size_t(j)] * x[std::size_t(j)];
  return {LPStatus::Optimal, obj, std::move(x)};
}

bool lp_feasible(const MatQ& A, const VecQ& b) {
  VecQ c(std::size_t(A.cols()), Rational(0));
  return lp_minimize(A, b, c).status == LPStatus::Optimal;
}

}  // namespace klz
