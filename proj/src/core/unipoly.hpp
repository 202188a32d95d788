#pragma once

#include "rational.hpp"

namespace klz {

// Exact univariate polynomial, coefficients stored lowest degree first with a
// nonzero trailing coefficient (except for the zero polynomial, which stores
// nothing and reports degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(VecQ coeffs);

  static UniPoly from_ints(const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return int(coeffs_.size()) - 1; }
  const VecQ& coeffs() const { return coeffs_; }
  const Rational& leading() const;
  Rational coeff(int k) const { return k < int(coeffs_.size()) ? coeffs_[std::size_t(k)] : Rational(0); }

  Rational eval(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly scaled(const Rational& c) const;
  UniPoly shifted(const Rational& a) const;  // t -> t + a
  bool operator==(const UniPoly& o) const = default;

  // Divides by the positive content, giving coprime integer coefficients and
  // keeping the sign of every coefficient.
  UniPoly primitive() const;

  std::string to_string() const;

 private:
  VecQ coeffs_;  // empty <=> zero polynomial
};

// Remainder of a by b (b nonzero).
UniPoly poly_rem(const UniPoly& a, const UniPoly& b);
// Exact quotient, requiring b | a.
UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b);
// Primitive gcd with positive leading coefficient.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), content-normalized; same distinct roots as p.
UniPoly square_free(const UniPoly& p);

// Sturm chain of a (square-free) polynomial, content-normalized at each step.
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots over (-inf, inf), exact (Sturm).
int count_real_roots(const UniPoly& p);

// True iff the square-free part has as many distinct real roots as its degree.
bool is_real_rooted(const UniPoly& p);

struct TaylorLead {
  int index;  // smallest l with c_l != 0
  int sign;   // sign(c_l), +1 or -1
};
TaylorLead first_nonzero_taylor(const UniPoly& p);

// 1 + max_i |c_i| / |c_d|: every real root lies in (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

}  // namespace klz
