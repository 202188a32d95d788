#include "unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace klz {

namespace {

void strip(VecQ& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Int igcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int ilcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / igcd(a, b) * b;
}

}  // namespace

UniPoly::UniPoly(VecQ coeffs) : coeffs_(std::move(coeffs)) { strip(coeffs_); }

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
  VecQ c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
  return UniPoly(std::move(c));
}

const Rational& UniPoly::leading() const {
  require(!coeffs_.empty(), Errc::domain, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  VecQ d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * int(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  VecQ c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  VecQ c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c == 0) return UniPoly();
  VecQ out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(const Rational& a) const {
  // Horner in (t + a).
  UniPoly acc;
  UniPoly lin(VecQ{a, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    VecQ c = acc.coeffs_;
    if (c.empty()) c.resize(1, Rational(0));
    c[0] += *it;
    acc = UniPoly(std::move(c));
  }
  return acc;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return UniPoly();
  Int den = 1;
  for (const auto& c : coeffs_) den = ilcm(den, denominator(c));
  Int g = 0;
  for (const auto& c : coeffs_) g = igcd(g, numerator(c) * (den / denominator(c)));
  VecQ out(coeffs_.size());
  Rational scale = Rational(den, g);  // positive
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scale;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (os.tellp() > 0) os << (coeffs_[k] > 0 ? " + " : " - ");
    else if (coeffs_[k] < 0) os << "-";
    os << fraction_string(abs(coeffs_[k]));
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), Errc::domain, "division by the zero polynomial");
  VecQ r = a.coeffs();
  const VecQ& d = b.coeffs();
  while (int(r.size()) >= int(d.size())) {
    Rational q = r.back() / d.back();
    std::size_t off = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[off + i] -= q * d[i];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly poly_exact_div(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), Errc::domain, "division by the zero polynomial");
  if (a.is_zero()) return UniPoly();
  require(a.degree() >= b.degree(), Errc::domain, "exact division: degree too small");
  VecQ r = a.coeffs();
  const VecQ& d = b.coeffs();
  VecQ q(a.coeffs().size() - d.size() + 1, Rational(0));
  for (std::size_t step = q.size(); step-- > 0;) {
    if (r.size() < d.size() + step) continue;
    Rational c = r[d.size() - 1 + step] / d.back();
    q[step] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + step] -= c * d[i];
  }
  for (const auto& c : r)
    require(c == 0, Errc::domain, "exact division: remainder is nonzero");
  return UniPoly(std::move(q));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    UniPoly r = poly_rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  if (a.leading() < 0) a = a.scaled(-1);
  return a;
}

UniPoly square_free(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "square_free: zero polynomial");
  if (p.degree() == 0) return UniPoly(VecQ{Rational(1)});
  UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  return poly_exact_div(p, g).primitive();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "sturm_chain: zero polynomial");
  std::vector<UniPoly> chain;
  chain.push_back(p.primitive());
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (true) {
    UniPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(r.scaled(-1).primitive());
  }
  return chain;
}

namespace {

// Sign variation count of the chain at +inf (dir=+1) or -inf (dir=-1).
int variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
  int count = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign(q.leading());
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "count_real_roots: zero polynomial");
  UniPoly q = square_free(p);
  if (q.degree() == 0) return 0;
  auto chain = sturm_chain(q);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

bool is_real_rooted(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "is_real_rooted: zero polynomial");
  UniPoly q = square_free(p);
  return count_real_roots(q) == q.degree();
}

TaylorLead first_nonzero_taylor(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "first_nonzero_taylor: zero polynomial");
  const VecQ& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) return TaylorLead{int(k), sign(c[k])};
  fail(Errc::domain, "unreachable: nonzero polynomial without nonzero coefficient");
}

Rational cauchy_root_bound(const UniPoly& p) {
  require(!p.is_zero(), Errc::domain, "cauchy_root_bound: zero polynomial");
  Rational m = 0;
  const VecQ& c = p.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i])));
  return 1 + m / abs(c.back());
}

}  // namespace klz
