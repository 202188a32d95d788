#include "certify.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "rayleigh.hpp"

namespace klz {

namespace {

nlohmann::json vec_json(const VecQ& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back(fraction_string(c));
  return a;
}

MatQ quadratic_form_matrix(const Polynomial& q) {
  VecQ zero(std::size_t(q.nvars()), Rational(0));
  MatQ h = q.hessian_at(zero);
  return scale(h, Rational(1, 2));
}

// Floating PSD screen, followed by exact confirmation of any violation: the
// suspect eigenvector is converted to its dyadic rational value and the
// quadratic form re-evaluated exactly.
bool psd_violation(const MatQ& m, VecQ* direction_out, Rational* value_out) {
  const int n = m.rows();
  Eigen::MatrixXd md(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) md(i, j) = to_double(m.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md);
  double scale = std::max(1.0, md.cwiseAbs().maxCoeff());
  for (int k = 0; k < n; ++k) {
    if (es.eigenvalues()(k) >= -1e-9 * scale) continue;
    VecQ w(std::size_t(n));
    for (int i = 0; i < n; ++i) w[std::size_t(i)] = rational_from_double(es.eigenvectors()(i, k));
    Rational val = quad_form(m, w);
    if (val < 0) {
      if (direction_out) *direction_out = std::move(w);
      if (value_out) *value_out = std::move(val);
      return true;
    }
  }
  return false;
}

}  // namespace

std::string membership_name(MembershipClass m) {
  switch (m) {
    case MembershipClass::InteriorOpen: return "InteriorOpen";
    case MembershipClass::ClosedOnly: return "ClosedOnly";
    default: return "Outside";
  }
}

ConeTower::ConeTower(Polynomial f, VecQ v) : v_(std::move(v)) {
  require(int(v_.size()) == f.nvars(), Errc::dimension, "tower: direction dimension mismatch");
  levels_ = f.derivative_tower(v_);
}

MembershipClass ConeTower::membership(const VecQ& x) const {
  require(int(x.size()) == nvars(), Errc::dimension, "membership: point dimension mismatch");
  bool boundary = false;
  for (int k = 0; k + 1 < int(levels_.size()); ++k) {
    int s = sign(levels_[std::size_t(k)].eval(x));
    if (s < 0) return MembershipClass::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? MembershipClass::ClosedOnly : MembershipClass::InteriorOpen;
}

Inertia inertia(const MatQ& q) { return ldl_inertia(q); }

Certificate quadratic_lorentzian(const MatQ& q, const GeneratedCone& K, std::uint64_t seed) {
  require(is_symmetric(q), Errc::domain, "quadratic_lorentzian: matrix not symmetric");
  require(q.rows() == K.nvars(), Errc::dimension, "quadratic_lorentzian: dimension mismatch");
  require(K.properness().proper(), Errc::domain, "quadratic_lorentzian: cone is not proper");

  long checks = 0;
  Inertia in = ldl_inertia(q);
  ++checks;
  if (in.n_plus != 1) {
    nlohmann::json w;
    w["inertia"] = {{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}};
    return Certificate::certified_no(seed, checks, w, "matrix does not have exactly one positive eigenvalue");
  }

  const auto& gens = K.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      ++checks;
      Rational v = bilinear(gens[i], q, gens[j]);
      if (v < 0) {
        nlohmann::json w;
        w["pair"] = {vec_json(gens[i]), vec_json(gens[j])};
        w["value"] = fraction_string(v);
        return Certificate::certified_no(seed, checks, w, "generator pair with negative pairing");
      }
    }

  // Sampled interior pairs; any nonpositive value refutes condition (2)
  // exactly, since sampled points are exact interior points.
  constexpr int kPairSamples = 16;
  for (int s = 0; s < kPairSamples; ++s) {
    VecQ x = K.interior_sample(seed + 2 * std::uint64_t(s) + 1);
    VecQ y = K.interior_sample(seed + 2 * std::uint64_t(s) + 2);
    ++checks;
    Rational v = bilinear(y, q, x);
    if (v <= 0) {
      nlohmann::json w;
      w["pair"] = {vec_json(x), vec_json(y)};
      w["value"] = fraction_string(v);
      return Certificate::certified_no(seed, checks, w, "interior pair with nonpositive pairing");
    }
  }

  if (in.n_zero == 0)
    return Certificate::certified_yes(
        seed, checks,
        "signature (1," + std::to_string(in.n_minus) +
            "), nonnegative generator pairings, positive on an interior sample");
  return Certificate::unknown(seed, checks, "degenerate form (n_zero > 0), no violation found");
}

namespace {

// Multisets of size k drawn from {0, ..., m-1}, lexicographically.
void for_each_multiset(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(std::size_t(std::max(k, 0)), 0);
  if (k == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[std::size_t(pos)] == m - 1) --pos;
    if (pos < 0) return;
    int v = idx[std::size_t(pos)] + 1;
    for (int j = pos; j < k; ++j) idx[std::size_t(j)] = v;
  }
}

double binom_approx(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
  return r;
}

}  // namespace

Certificate k_lorentzian_check(const Polynomial& f, const GeneratedCone& K, int samples,
                               std::uint64_t seed) {
  auto dopt = f.homogeneous_degree();
  require(dopt.has_value(), Errc::domain, "k_lorentzian_check: polynomial is not homogeneous");
  require(f.nvars() == K.nvars(), Errc::dimension, "k_lorentzian_check: dimension mismatch");
  require(K.properness().proper(), Errc::domain, "k_lorentzian_check: cone is not proper");
  const int d = *dopt;

  if (d <= 1) {
    // A form of degree <= 1 is K-Lorentzian iff it is nonnegative on K, which
    // for constants and linear forms is decided exactly on the generators.
    long checks = 0;
    for (const auto& g : K.generators()) {
      ++checks;
      Rational v = f.eval(g);
      if (v < 0) {
        nlohmann::json w;
        w["point"] = vec_json(g);
        w["value"] = fraction_string(v);
        return Certificate::certified_no(seed, checks, w, "negative on a generator");
      }
    }
    return Certificate::certified_yes(seed, checks, "nonnegative on all generators (degree <= 1)");
  }

  if (d == 2) {
    // The tuple list is empty; the quadratic test itself is complete here.
    Certificate c = quadratic_lorentzian(quadratic_form_matrix(f), K, seed);
    c.note = "degree 2: " + c.note;
    return c;
  }

  const int m = int(K.generators().size());
  require(binom_approx(m + d - 3, d - 2) <= 50000.0, Errc::limit,
          "k_lorentzian_check: too many generator tuples");

  long tuples = 0;
  Certificate failure;
  bool failed = false;
  auto test_tuple = [&](const std::vector<VecQ>& tuple, const nlohmann::json& tuple_desc) {
    if (failed) return;
    Polynomial g = f;
    for (const auto& a : tuple) g = g.dir_derivative(a);
    ++tuples;
    Certificate c = quadratic_lorentzian(quadratic_form_matrix(g), K, seed);
    if (c.no()) {
      nlohmann::json w;
      w["tuple"] = tuple_desc;
      w["quadratic"] = g.to_string();
      w["verdict"] = c.witness;
      w["reason"] = c.note;
      failure = Certificate::certified_no(seed, tuples, w, "derivative quadratic fails the Lorentzian test");
      failed = true;
    }
  };

  for_each_multiset(m, d - 2, [&](const std::vector<int>& idx) {
    if (failed) return;
    std::vector<VecQ> tuple;
    nlohmann::json desc = nlohmann::json::array();
    for (int i : idx) {
      tuple.push_back(K.generators()[std::size_t(i)]);
      desc.push_back(vec_json(tuple.back()));
    }
    test_tuple(tuple, desc);
  });
  if (failed) return failure;

  for (int s = 0; s < samples && !failed; ++s) {
    std::vector<VecQ> tuple;
    nlohmann::json desc = nlohmann::json::array();
    for (int j = 0; j < d - 2; ++j) {
      tuple.push_back(K.interior_sample(seed + 1000003ULL * std::uint64_t(s) + std::uint64_t(j) + 17));
      desc.push_back(vec_json(tuple.back()));
    }
    test_tuple(tuple, desc);
  }
  if (failed) return failure;

  return Certificate::unknown(seed, tuples,
                              "no violation over " + std::to_string(tuples) +
                                  " derivative tuples (sampling cannot certify the interior quantifier)");
}

Certificate clc_check(const Polynomial& f, const GeneratedCone& K, int samples,
                      std::uint64_t seed) {
  auto dopt = f.homogeneous_degree();
  require(dopt.has_value(), Errc::domain, "clc_check: polynomial is not homogeneous");
  require(f.nvars() == K.nvars(), Errc::dimension, "clc_check: dimension mismatch");
  require(K.properness().full_dimensional, Errc::domain, "clc_check: cone is not full-dimensional");
  const int d = *dopt;

  long checks = 0;
  {
    VecQ x0 = K.interior_sample(seed);
    ++checks;
    Rational v = f.eval(x0);
    if (v <= 0) {
      nlohmann::json w;
      w["point"] = vec_json(x0);
      w["value"] = fraction_string(v);
      return Certificate::certified_no(seed, checks, w, "form is not positive at an interior sample");
    }
  }

  RatRng rng(seed * 2654435761ULL + 1);
  for (int s = 0; s < samples; ++s) {
    int m = int(rng.below(std::uint64_t(d) + 1));
    Polynomial g = f;
    nlohmann::json desc = nlohmann::json::array();
    for (int j = 0; j < m; ++j) {
      VecQ a = K.interior_sample(rng.next());
      desc.push_back(vec_json(a));
      g = g.dir_derivative(a);
    }
    VecQ x = K.interior_sample(rng.next());
    ++checks;
    Rational gx = g.eval(x);
    if (gx <= 0) {
      nlohmann::json w;
      w["string"] = desc;
      w["point"] = vec_json(x);
      w["value"] = fraction_string(gx);
      return Certificate::certified_no(seed, checks, w,
                                       "derivative string nonpositive at an interior sample");
    }
    MatQ m_g = rayleigh_matrix(g, x);
    VecQ dir;
    Rational val;
    if (psd_violation(m_g, &dir, &val)) {
      nlohmann::json w;
      w["string"] = desc;
      w["point"] = vec_json(x);
      w["direction"] = vec_json(dir);
      w["value"] = fraction_string(val);
      return Certificate::certified_no(seed, checks, w,
                                       "Rayleigh matrix of a derivative string is not PSD "
                                       "(log-concavity violated; exact witness direction)");
    }
  }
  return Certificate::unknown(seed, checks,
                              "no log-concavity violation over " + std::to_string(checks) +
                                  " sampled derivative strings");
}

bool ulc_bivariate(const Polynomial& f) {
  require(f.nvars() == 2, Errc::dimension, "ulc_bivariate: polynomial must be bivariate");
  auto dopt = f.homogeneous_degree();
  require(dopt.has_value(), Errc::domain, "ulc_bivariate: polynomial is not homogeneous");
  const int n = *dopt;
  require(!f.is_zero(), Errc::domain, "ulc_bivariate: zero polynomial");

  VecQ c(std::size_t(n) + 1, Rational(0));
  for (const auto& [e, coef] : f.terms()) {
    require(coef >= 0, Errc::domain, "ulc_bivariate: negative coefficient");
    c[std::size_t(e[1])] = coef;
  }
  int lo = 0, hi = n;
  while (c[std::size_t(lo)] == 0) ++lo;
  while (c[std::size_t(hi)] == 0) --hi;
  for (int k = lo; k <= hi; ++k)
    require(c[std::size_t(k)] != 0, Errc::domain, "ulc_bivariate: non-contiguous support");

  // Normalized sequence b_k = c_k / C(n,k); ULC iff b_k^2 >= b_{k-1} b_{k+1}.
  VecQ b(c.size());
  Rational binom = 1;
  for (int k = 0; k <= n; ++k) {
    b[std::size_t(k)] = c[std::size_t(k)] / binom;
    binom = binom * (n - k) / (k + 1);
  }
  for (int k = lo + 1; k < hi; ++k)
    if (b[std::size_t(k)] * b[std::size_t(k)] < b[std::size_t(k - 1)] * b[std::size_t(k + 1)])
      return false;
  return true;
}

Certificate hyperbolicity_check(const Polynomial& f, const VecQ& e, int samples,
                                std::uint64_t seed) {
  auto dopt = f.homogeneous_degree();
  require(dopt.has_value(), Errc::domain, "hyperbolicity_check: polynomial is not homogeneous");
  require(int(e.size()) == f.nvars(), Errc::dimension, "hyperbolicity_check: dimension mismatch");
  require(f.eval(e) != 0, Errc::domain, "hyperbolicity_check: f(e) = 0");
  const int n = f.nvars();

  long checks = 0;
  auto test_point = [&](const VecQ& x) -> std::optional<Certificate> {
    ++checks;
    UniPoly h(f.restriction_taylor(x, e));
    if (!is_real_rooted(h)) {
      nlohmann::json w;
      w["point"] = vec_json(x);
      w["restriction"] = vec_json(h.coeffs());
      w["distinct_real_roots"] = count_real_roots(h);
      w["square_free_degree"] = square_free(h).degree();
      return Certificate::certified_no(seed, checks, w, "restriction is not real-rooted");
    }
    return std::nullopt;
  };

  // Deterministic lattice pass over the integer points of [-3,3]^n, smallest
  // coordinates first; guarantees small witnesses are found independent of the
  // seed.
  double lattice_size = 1;
  for (int i = 0; i < n; ++i) lattice_size *= 7;
  if (lattice_size <= 5000) {
    VecQ x(std::size_t(n), Rational(-3));
    while (true) {
      if (auto c = test_point(x)) return *c;
      int pos = n - 1;
      while (pos >= 0 && x[std::size_t(pos)] == 3) {
        x[std::size_t(pos)] = -3;
        --pos;
      }
      if (pos < 0) break;
      x[std::size_t(pos)] += 1;
    }
  }

  RatRng rng(seed + 77);
  for (int s = 0; s < samples; ++s) {
    VecQ x(std::size_t(n));
    for (int i = 0; i < n; ++i) x[std::size_t(i)] = rng.rational_in_scaled(-12, 12, 4);
    if (auto c = test_point(x)) return *c;
  }
  return Certificate::unknown(seed, checks,
                              "all " + std::to_string(checks) + " restrictions real-rooted");
}

MembershipClass tower_membership(const ConeTower& t, const VecQ& x) { return t.membership(x); }

std::vector<BoundaryEntry> boundary_classify(const ConeTower& t, const VecQ& x) {
  require(t.membership(x) == MembershipClass::ClosedOnly, Errc::domain,
          "boundary_classify: point is not on the closed tower boundary");
  std::vector<BoundaryEntry> out;
  for (int k = 0; k + 1 < int(t.levels().size()); ++k) {
    const Polynomial& g = t.levels()[std::size_t(k)];
    if (g.eval(x) != 0) continue;
    UniPoly r(g.restriction_taylor(x, t.direction()));
    BoundaryEntry entry;
    entry.level = k;
    if (r.is_zero()) {
      entry.taylor_index = -1;
      entry.taylor_sign = 0;
      entry.verdict = "RestrictionIdenticallyZero";
    } else {
      TaylorLead lead = first_nonzero_taylor(r);
      entry.taylor_index = lead.index;
      entry.taylor_sign = lead.sign;
      if (lead.index % 2 == 1 || lead.sign < 0)
        entry.verdict = "NotInterior";
      else
        entry.verdict = "NecessaryConditionsHold";
    }
    out.push_back(std::move(entry));
  }
  return out;
}

bool inclusion_check(const GeneratedCone& K, const ConeTower& t, int samples,
                     std::uint64_t seed) {
  require(K.nvars() == t.nvars(), Errc::dimension, "inclusion_check: dimension mismatch");
  for (const auto& g : K.generators())
    if (t.membership(g) == MembershipClass::Outside) return false;
  if (K.properness().full_dimensional) {
    for (int s = 0; s < samples; ++s)
      if (t.membership(K.interior_sample(seed + std::uint64_t(s))) == MembershipClass::Outside)
        return false;
  }
  return true;
}

namespace {

Certificate midpoint_falsifier(int nvars, const std::function<bool(const VecQ&)>& member,
                               const std::function<nlohmann::json(const VecQ&)>& describe,
                               long trials, std::uint64_t seed) {
  RatRng rng(seed);
  auto sample = [&]() {
    VecQ x(std::size_t(nvars));
    for (int i = 0; i < nvars; ++i) x[std::size_t(i)] = rng.rational_in_scaled(-16, 16, 8);
    return x;
  };
  for (long trial = 0; trial < trials; ++trial) {
    VecQ a = sample(), b = sample();
    if (!member(a) || !member(b)) continue;
    VecQ mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = (a[i] + b[i]) / 2;
    if (!member(mid)) {
      nlohmann::json w;
      w["a"] = vec_json(a);
      w["b"] = vec_json(b);
      w["midpoint"] = vec_json(mid);
      w["midpoint_detail"] = describe(mid);
      return Certificate::certified_no(seed, trial + 1, w,
                                       "midpoint of two members falls outside");
    }
  }
  return Certificate::unknown(seed, trials, "no midpoint violation found");
}

}  // namespace

Certificate convexity_falsifier(const ConeTower& t, long trials, std::uint64_t seed) {
  auto member = [&](const VecQ& x) { return t.membership(x) != MembershipClass::Outside; };
  auto describe = [&](const VecQ& x) {
    nlohmann::json d = nlohmann::json::array();
    for (int k = 0; k + 1 < int(t.levels().size()); ++k)
      d.push_back(fraction_string(t.levels()[std::size_t(k)].eval(x)));
    return d;
  };
  return midpoint_falsifier(t.nvars(), member, describe, trials, seed);
}

Certificate convexity_falsifier_cone(const GeneratedCone& K, long trials, std::uint64_t seed) {
  auto member = [&](const VecQ& x) { return K.contains_exact(x); };
  auto describe = [&](const VecQ&) { return nlohmann::json(); };
  return midpoint_falsifier(K.nvars(), member, describe, trials, seed);
}

bool connectivity_witness(const ConeTower& t, const VecQ& x, int grid) {
  require(grid >= 2, Errc::argument, "connectivity_witness: grid must be >= 2");
  require(t.membership(x) == MembershipClass::InteriorOpen, Errc::domain,
          "connectivity_witness: point is not in the open tower cone");
  const Polynomial& f = t.f();
  const VecQ& v = t.direction();
  const int n = t.nvars();

  auto point_on_segment = [&](const VecQ& from, const VecQ& to, const Rational& s) {
    VecQ p(std::size_t(n));
    for (int i = 0; i < n; ++i) p[std::size_t(i)] = from[std::size_t(i)] + s * (to[std::size_t(i)] - from[std::size_t(i)]);
    return p;
  };
  auto positive_on_grid = [&](const VecQ& from, const VecQ& to) {
    for (int i = 0; i < grid; ++i) {
      Rational s(i, grid - 1);
      if (f.eval(point_on_segment(from, to, s)) <= 0) return false;
    }
    return true;
  };

  // Find lambda by doubling so that f > 0 on the shifted segment l + lambda v,
  // where l joins x and v.
  Rational lambda = 1;
  bool found = false;
  for (int it = 0; it < 40; ++it) {
    bool ok = true;
    for (int i = 0; i < grid && ok; ++i) {
      Rational s(i, grid - 1);
      VecQ y = point_on_segment(x, v, s);
      for (int j = 0; j < n; ++j) y[std::size_t(j)] += lambda * v[std::size_t(j)];
      ok = f.eval(y) > 0;
    }
    if (ok) { found = true; break; }
    lambda *= 2;
  }
  if (!found) return false;

  VecQ x_lift(x), v_lift(v);
  for (int j = 0; j < n; ++j) {
    x_lift[std::size_t(j)] += lambda * v[std::size_t(j)];
    v_lift[std::size_t(j)] += lambda * v[std::size_t(j)];
  }
  return positive_on_grid(x, x_lift) && positive_on_grid(x_lift, v_lift) &&
         positive_on_grid(v_lift, v);
}

}  // namespace klz
