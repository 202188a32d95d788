#include "rayleigh.hpp"

namespace klz {

MatQ rayleigh_matrix(const Polynomial& f, const VecQ& x) {
  VecQ g = f.gradient_at(x);
  MatQ h = f.hessian_at(x);
  return sub(outer(g, g), scale(h, f.eval(x)));
}

Rational rayleigh_diagonal(const Polynomial& f, const VecQ& x, const VecQ& u) {
  Polynomial du = f.dir_derivative(u);
  Rational duf = du.eval(x);
  return duf * duf - f.eval(x) * du.dir_derivative(u).eval(x);
}

Rational rayleigh_cross(const Polynomial& f, const VecQ& x, const VecQ& v, const VecQ& w) {
  Polynomial dv = f.dir_derivative(v);
  return dv.eval(x) * f.dir_derivative(w).eval(x) - f.eval(x) * dv.dir_derivative(w).eval(x);
}

Polynomial rayleigh_cross_poly(const Polynomial& f, const VecQ& v, const VecQ& w) {
  Polynomial dv = f.dir_derivative(v);
  Polynomial dw = f.dir_derivative(w);
  return dv * dw - f * dv.dir_derivative(w);
}

Polynomial delta_ij(const Polynomial& f, int i, int j) {
  Polynomial di = f.partial(i);
  return di * f.partial(j) - f * di.partial(j);
}

Rational log_hessian_identity_residual(const Polynomial& f, const VecQ& x) {
  Rational fx = f.eval(x);
  require(fx > 0, Errc::domain, "log_hessian_identity: f(x) <= 0");
  VecQ g = f.gradient_at(x);
  MatQ h = f.hessian_at(x);
  // Hess(log f) = H/f - grad grad^T / f^2, assembled entrywise in rationals.
  MatQ log_hess = sub(scale(h, 1 / fx), scale(outer(g, g), 1 / (fx * fx)));
  MatQ residual = add(rayleigh_matrix(f, x), scale(log_hess, fx * fx));
  return max_abs(residual);
}

}  // namespace klz
