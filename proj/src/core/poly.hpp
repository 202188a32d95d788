#pragma once

#include <map>
#include <optional>
#include <string>

#include "linalg.hpp"
#include "rational.hpp"

namespace klz {

using Exponents = std::vector<int>;

// Graded lexicographic term order used for canonical iteration/serialization:
// lower total degree first, and within a degree block the lexicographically
// largest exponent vector first (x1-dominant terms lead, matching the usual
// written order 4*x1^3 + 15*x1^2*x2 + ...).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable by convention after construction: all operations return new
// values, so instances may be shared freely across threads.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(int nvars = 1);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(Exponents exp, const Rational& coef);
  // c0 + c1*t + ... interpreted over a fresh 1-variable ring.
  static Polynomial from_univariate(const VecQ& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Max total degree of stored terms; 0 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Degree d when every stored term has total degree d (zero polynomial
  // reports 0); nullopt otherwise.
  std::optional<int> homogeneous_degree() const;

  void add_term(const Exponents& exp, const Rational& coef);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  bool operator==(const Polynomial& o) const = default;

  Rational eval(const VecQ& x) const;
  double eval_double(const std::vector<double>& x) const;

  Polynomial partial(int i) const;
  Polynomial dir_derivative(const VecQ& a) const;

  VecQ gradient_at(const VecQ& x) const;
  MatQ hessian_at(const VecQ& x) const;

  // Coefficients (c_0,...,c_d) of t -> f(x + t v), c_k = D_v^k f(x) / k!.
  // Computed by direct binomial expansion, independently of dir_derivative.
  VecQ restriction_taylor(const VecQ& x, const VecQ& v) const;

  // [f, D_v f, ..., D_v^d f] for homogeneous f of degree d; the last entry is
  // a constant polynomial.
  std::vector<Polynomial> derivative_tower(const VecQ& v) const;

  std::string to_string() const;  // human-readable, canonical order

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace klz
