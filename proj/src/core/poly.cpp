#include "poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klz {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  require(nvars >= 1, Errc::argument, "polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  require(index >= 0 && index < nvars, Errc::argument, "variable index out of range");
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponents exp, const Rational& coef) {
  Polynomial p(int(exp.size()));
  for (int e : exp) require(e >= 0, Errc::argument, "negative exponent");
  p.add_term(exp, coef);
  return p;
}

Polynomial Polynomial::from_univariate(const VecQ& coeffs) {
  Polynomial p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term({int(k)}, coeffs[k]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = total_degree(terms_.begin()->first);
  if (total_degree(terms_.rbegin()->first) != d) return std::nullopt;
  return d;
}

void Polynomial::add_term(const Exponents& exp, const Rational& coef) {
  require(int(exp.size()) == nvars_, Errc::dimension, "exponent vector length mismatch");
  if (coef == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require(nvars_ == o.nvars_, Errc::dimension, "polynomial variable count mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require(nvars_ == o.nvars_, Errc::dimension, "polynomial variable count mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(nvars_ == o.nvars_, Errc::dimension, "polynomial variable count mismatch");
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Rational Polynomial::eval(const VecQ& x) const {
  require(int(x.size()) == nvars_, Errc::dimension, "eval: point dimension mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

double Polynomial::eval_double(const std::vector<double>& x) const {
  require(int(x.size()) == nvars_, Errc::dimension, "eval: point dimension mismatch");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::partial(int i) const {
  require(i >= 0 && i < nvars_, Errc::argument, "partial: variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * e[i]);
  }
  return r;
}

Polynomial Polynomial::dir_derivative(const VecQ& a) const {
  require(int(a.size()) == nvars_, Errc::dimension, "dir_derivative: direction dimension mismatch");
  Polynomial r(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    if (a[i] == 0) continue;
    r = r + partial(i).scaled(a[i]);
  }
  return r;
}

VecQ Polynomial::gradient_at(const VecQ& x) const {
  VecQ g(nvars_);
  for (int i = 0; i < nvars_; ++i) g[i] = partial(i).eval(x);
  return g;
}

MatQ Polynomial::hessian_at(const VecQ& x) const {
  MatQ h(nvars_, nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Polynomial pi = partial(i);
    for (int j = i; j < nvars_; ++j) {
      Rational v = pi.partial(j).eval(x);
      h.at(i, j) = v;
      h.at(j, i) = v;
    }
  }
  return h;
}

VecQ Polynomial::restriction_taylor(const VecQ& x, const VecQ& v) const {
  require(int(x.size()) == nvars_, Errc::dimension, "restriction: point dimension mismatch");
  require(int(v.size()) == nvars_, Errc::dimension, "restriction: direction dimension mismatch");
  VecQ out(std::size_t(degree()) + 1, Rational(0));
  // Per term, expand prod_i (x_i + t v_i)^{e_i} by convolving the binomial
  // coefficient vectors of each factor.
  for (const auto& [e, c] : terms_) {
    VecQ acc{c};
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      // w[j] = C(e_i, j) x_i^{e_i - j} v_i^j
      VecQ w(std::size_t(e[i]) + 1);
      Rational binom = 1;
      for (int j = 0; j <= e[i]; ++j) {
        Rational t = binom;
        for (int k = 0; k < e[i] - j; ++k) t *= x[i];
        for (int k = 0; k < j; ++k) t *= v[i];
        w[j] = t;
        binom = binom * (e[i] - j) / (j + 1);
      }
      VecQ next(acc.size() + w.size() - 1, Rational(0));
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (acc[a] == 0) continue;
        for (std::size_t b = 0; b < w.size(); ++b) next[a + b] += acc[a] * w[b];
      }
      acc = std::move(next);
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] += acc[k];
  }
  return out;
}

std::vector<Polynomial> Polynomial::derivative_tower(const VecQ& v) const {
  auto d = homogeneous_degree();
  require(d.has_value(), Errc::domain, "derivative_tower: polynomial is not homogeneous");
  std::vector<Polynomial> tower;
  tower.reserve(std::size_t(*d) + 1);
  tower.push_back(*this);
  for (int k = 1; k <= *d; ++k) tower.push_back(tower.back().dir_derivative(v));
  return tower;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool unit = (a == 1) && total_degree(e) > 0;
    if (!unit) os << fraction_string(a);
    bool any = false;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (any || !unit) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
  }
  return os.str();
}

}  // namespace klz
