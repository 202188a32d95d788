#pragma once

#include "linalg.hpp"
#include "poly.hpp"

namespace klz {

// M_f(x) = grad f(x) grad f(x)^T - f(x) Hess f(x), exact.
MatQ rayleigh_matrix(const Polynomial& f, const VecQ& x);

// (D_u f(x))^2 - f(x) D_u^2 f(x) = u^T M_f(x) u.
Rational rayleigh_diagonal(const Polynomial& f, const VecQ& x, const VecQ& u);

// D_v f(x) D_w f(x) - f(x) D_v D_w f(x) = v^T M_f(x) w.
Rational rayleigh_cross(const Polynomial& f, const VecQ& x, const VecQ& v, const VecQ& w);

// The same quantity as a polynomial in x.
Polynomial rayleigh_cross_poly(const Polynomial& f, const VecQ& v, const VecQ& w);

// Coordinate Rayleigh difference polynomial d_i f * d_j f - f * d_ij f.
Polynomial delta_ij(const Polynomial& f, int i, int j);

// Max-abs entry of M_f(x) + f(x)^2 * Hess(log f)(x); identically zero, with
// the Hessian of log f computed through its own quotient-rule route.
Rational log_hessian_identity_residual(const Polynomial& f, const VecQ& x);

}  // namespace klz
