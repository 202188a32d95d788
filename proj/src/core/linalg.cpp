#include "linalg.hpp"

#include <utility>

namespace klz {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational dot(const VecQ& a, const VecQ& b) {
  require(a.size() == b.size(), Errc::dimension, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecQ matvec(const MatQ& m, const VecQ& x) {
  require(int(x.size()) == m.cols(), Errc::dimension, "matvec: dimension mismatch");
  VecQ y(m.rows(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

MatQ transpose(const MatQ& m) {
  MatQ t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

MatQ matmul(const MatQ& a, const MatQ& b) {
  require(a.cols() == b.rows(), Errc::dimension, "matmul: dimension mismatch");
  MatQ c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

MatQ outer(const VecQ& a, const VecQ& b) {
  MatQ m(int(a.size()), int(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m.at(int(i), int(j)) = a[i] * b[j];
  return m;
}

MatQ add(const MatQ& a, const MatQ& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::dimension, "add: shape mismatch");
  MatQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

MatQ sub(const MatQ& a, const MatQ& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::dimension, "sub: shape mismatch");
  MatQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

MatQ scale(const MatQ& a, const Rational& c) {
  MatQ m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) * c;
  return m;
}

MatQ symmetric_part(const MatQ& a) {
  require(a.rows() == a.cols(), Errc::dimension, "symmetric_part: not square");
  return scale(add(a, transpose(a)), Rational(1, 2));
}

bool is_symmetric(const MatQ& a) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != a.at(j, i)) return false;
  return true;
}

bool is_zero(const MatQ& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) return false;
  return true;
}

Rational max_abs(const MatQ& a) {
  Rational m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Rational v = abs(a.at(i, j));
      if (v > m) m = v;
    }
  return m;
}

int rank(MatQ a) {
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      Rational factor = a.at(i, col) / a.at(r, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<VecQ> solve(MatQ a, VecQ b) {
  require(a.rows() == a.cols(), Errc::dimension, "solve: not square");
  require(int(b.size()) == a.rows(), Errc::dimension, "solve: rhs size mismatch");
  int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(piv, j));
    std::swap(b[col], b[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      Rational factor = a.at(i, col) / a.at(col, col);
      for (int j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
      b[i] -= factor * b[col];
    }
  }
  VecQ x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a.at(i, i);
  return x;
}

std::optional<MatQ> inverse(const MatQ& a) {
  require(a.rows() == a.cols(), Errc::dimension, "inverse: not square");
  int n = a.rows();
  MatQ inv(n, n);
  for (int k = 0; k < n; ++k) {
    VecQ e(n, Rational(0));
    e[k] = 1;
    auto col = solve(a, e);
    if (!col) return std::nullopt;
    for (int i = 0; i < n; ++i) inv.at(i, k) = (*col)[i];
  }
  return inv;
}

Inertia ldl_inertia(MatQ q) {
  require(is_symmetric(q), Errc::domain, "ldl_inertia: matrix not symmetric");
  Inertia out;
  int n = q.rows();
  // Active principal submatrix occupies indices [k, n).
  int k = 0;
  auto swap_rowcol = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(q.at(a, j), q.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(q.at(i, a), q.at(i, b));
  };
  while (k < n) {
    int diag = -1;
    for (int i = k; i < n; ++i)
      if (q.at(i, i) != 0) { diag = i; break; }
    if (diag >= 0) {
      swap_rowcol(k, diag);
      const Rational d = q.at(k, k);
      if (d > 0) ++out.n_plus; else ++out.n_minus;
      for (int i = k + 1; i < n; ++i) {
        if (q.at(i, k) == 0) continue;
        Rational f = q.at(i, k) / d;
        for (int j = k + 1; j < n; ++j) q.at(i, j) -= f * q.at(k, j);
        q.at(i, k) = 0;
      }
      for (int j = k + 1; j < n; ++j) q.at(k, j) = 0;
      ++k;
      continue;
    }
    // All remaining diagonal entries vanish; look for an off-diagonal pivot.
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (q.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) {  // remaining block is zero
      out.n_zero += n - k;
      break;
    }
    swap_rowcol(k, pi);
    swap_rowcol(k + 1, pj);
    const Rational b = q.at(k, k + 1);
    ++out.n_plus;
    ++out.n_minus;
    // Schur complement w.r.t. the block [[0,b],[b,0]].
    for (int i = k + 2; i < n; ++i)
      for (int j = k + 2; j < n; ++j)
        q.at(i, j) -= (q.at(k, i) * q.at(k + 1, j) + q.at(k + 1, i) * q.at(k, j)) / b;
    for (int i = k + 2; i < n; ++i) {
      q.at(k, i) = q.at(i, k) = 0;
      q.at(k + 1, i) = q.at(i, k + 1) = 0;
    }
    k += 2;
  }
  return out;
}

Rational quad_form(const MatQ& q, const VecQ& x) { return dot(x, matvec(q, x)); }

Rational bilinear(const VecQ& y, const MatQ& q, const VecQ& x) { return dot(y, matvec(q, x)); }

}  // namespace klz
