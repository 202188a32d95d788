#include "rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace klz {

int sign(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

bool is_decimal_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(is_decimal_integer(s), Errc::parse, "not an integer or fraction: '" + s + "'");
    return Rational(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  require(is_decimal_integer(num) && is_decimal_integer(den), Errc::parse,
          "not a fraction string: '" + s + "'");
  Int d(den);
  require(d != 0, Errc::parse, "zero denominator in '" + s + "'");
  return Rational(Int(num), d);
}

std::string fraction_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_double(double x) {
  require(std::isfinite(x), Errc::argument, "non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [1/2, 1)
  Int mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0)
    r *= Rational(Int(1) << exp);
  else
    r /= Rational(Int(1) << (-exp));
  return r;
}

Rational rationalize(double x, std::int64_t max_denom) {
  require(std::isfinite(x), Errc::argument, "non-finite double");
  require(max_denom >= 1, Errc::argument, "max_denom must be positive");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued-fraction convergents p/q until the denominator bound.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double a_f = std::floor(frac);
    if (a_f > 9e17) break;
    std::int64_t a = static_cast<std::int64_t>(a_f);
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_denom || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - a_f;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? -r : r;
}

std::vector<double> to_double_vec(const VecQ& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

VecQ from_double_vec(const std::vector<double>& v) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rational_from_double(v[i]);
  return out;
}

}  // namespace klz
