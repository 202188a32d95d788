#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"

namespace klz {

// Exact arithmetic carrier for all polynomial and cone algebra. cpp_rational
// keeps values normalized (lowest terms, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using VecQ = std::vector<Rational>;

int sign(const Rational& q);
double to_double(const Rational& q);

// Accepts "p", "-p", "p/q" with decimal integers; rejects everything else.
Rational parse_rational(const std::string& s);
// Emits "p" or "p/q" matching the parse format.
std::string fraction_string(const Rational& q);

// Exact dyadic value of a finite double.
Rational rational_from_double(double x);
// Best rational approximation with denominator <= max_denom (continued fractions).
Rational rationalize(double x, std::int64_t max_denom);

std::vector<double> to_double_vec(const VecQ& v);
VecQ from_double_vec(const std::vector<double>& v);

// Deterministic seeded sampler. Uses mt19937_64 with explicit reduction so the
// stream is identical across platforms and standard-library versions.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform rational k/denom with k in [lo_scaled, hi_scaled].
  Rational rational_in_scaled(long lo_scaled, long hi_scaled, long denom) {
    return Rational(int_in(lo_scaled, hi_scaled), denom);
  }

  double double_in(double lo, double hi) {
    double u = static_cast<double>(eng_() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace klz
