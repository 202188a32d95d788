#include "cone.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "simplex.hpp"

namespace klz {

namespace {

// Primitive integer representative of the ray through v.
VecQ normalize_ray(const VecQ& v) {
  Int den = 1;
  for (const auto& c : v) den = lcm(den, Int(denominator(c)));
  Int g = 0;
  for (const auto& c : v) g = gcd(g, Int(numerator(c) * (den / denominator(c))));
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * Rational(den, g);
  return out;
}

Eigen::MatrixXd generator_matrix(const std::vector<VecQ>& gens, int nvars) {
  Eigen::MatrixXd e(nvars, int(gens.size()));
  for (int j = 0; j < int(gens.size()); ++j)
    for (int i = 0; i < nvars; ++i) e(i, j) = to_double(gens[std::size_t(j)][std::size_t(i)]);
  return e;
}

// Lawson-Hanson active-set NNLS: min |E q - z|, q >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& E, const Eigen::VectorXd& z, int max_iter) {
  const int m = int(E.cols());
  Eigen::VectorXd q = Eigen::VectorXd::Zero(m);
  std::vector<bool> passive(std::size_t(m), false);
  const double scale = std::max(1.0, (E.transpose() * z).cwiseAbs().maxCoeff());
  const double eps = 1e-12 * scale;
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::VectorXd w = E.transpose() * (z - E * q);
    int t = -1;
    double best = eps;
    for (int j = 0; j < m; ++j)
      if (!passive[std::size_t(j)] && w(j) > best) { best = w(j); t = j; }
    if (t < 0) return q;
    passive[std::size_t(t)] = true;
    for (int inner = 0; inner < max_iter; ++inner) {
      std::vector<int> pidx;
      for (int j = 0; j < m; ++j)
        if (passive[std::size_t(j)]) pidx.push_back(j);
      Eigen::MatrixXd Ep(E.rows(), int(pidx.size()));
      for (int k = 0; k < int(pidx.size()); ++k) Ep.col(k) = E.col(pidx[std::size_t(k)]);
      Eigen::VectorXd zeta = Ep.colPivHouseholderQr().solve(z);
      bool all_pos = true;
      for (int k = 0; k < zeta.size(); ++k)
        if (zeta(k) <= 1e-14) { all_pos = false; break; }
      if (all_pos) {
        q.setZero();
        for (int k = 0; k < int(pidx.size()); ++k) q(pidx[std::size_t(k)]) = zeta(k);
        break;
      }
      double alpha = 1.0;
      for (int k = 0; k < int(pidx.size()); ++k) {
        int j = pidx[std::size_t(k)];
        if (zeta(k) <= 1e-14 && q(j) > zeta(k))
          alpha = std::min(alpha, q(j) / (q(j) - zeta(k)));
      }
      for (int k = 0; k < int(pidx.size()); ++k) {
        int j = pidx[std::size_t(k)];
        q(j) += alpha * (zeta(k) - q(j));
        if (q(j) <= 1e-14) { q(j) = 0.0; passive[std::size_t(j)] = false; }
      }
    }
  }
  fail(Errc::numeric, "nnls: iteration cap exceeded (ill-conditioned generators?)");
}

}  // namespace

GeneratedCone::GeneratedCone(int nvars, const std::vector<VecQ>& generators) : nvars_(nvars) {
  require(nvars >= 1, Errc::argument, "cone needs a positive dimension");
  for (const auto& g : generators) {
    require(int(g.size()) == nvars, Errc::dimension, "generator dimension mismatch");
    bool zero = std::all_of(g.begin(), g.end(), [](const Rational& c) { return c == 0; });
    require(!zero, Errc::argument, "zero generator");
    VecQ ray = normalize_ray(g);
    if (std::find(gens_.begin(), gens_.end(), ray) == gens_.end()) gens_.push_back(std::move(ray));
  }
  require(!gens_.empty(), Errc::argument, "cone needs at least one generator");
}

GeneratedCone GeneratedCone::orthant(int n) {
  std::vector<VecQ> gens;
  for (int i = 0; i < n; ++i) {
    VecQ e(std::size_t(n), Rational(0));
    e[std::size_t(i)] = 1;
    gens.push_back(std::move(e));
  }
  return GeneratedCone(n, gens);
}

bool GeneratedCone::contains_exact(const VecQ& x) const {
  require(int(x.size()) == nvars_, Errc::dimension, "contains: dimension mismatch");
  MatQ A(nvars_, int(gens_.size()));
  for (int j = 0; j < int(gens_.size()); ++j)
    for (int i = 0; i < nvars_; ++i) A.at(i, j) = gens_[std::size_t(j)][std::size_t(i)];
  return lp_feasible(A, x);
}

bool GeneratedCone::contains_tol(const std::vector<double>& x, double tol) const {
  require(int(x.size()) == nvars_, Errc::dimension, "contains: dimension mismatch");
  Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(x.data(), nvars_);
  auto p = project(x, tol);
  Eigen::VectorXd px = Eigen::Map<const Eigen::VectorXd>(p.data(), nvars_);
  return (z - px).norm() <= tol * std::max(1.0, z.norm());
}

bool GeneratedCone::contains_relint(const VecQ& x) const {
  require(int(x.size()) == nvars_, Errc::dimension, "contains: dimension mismatch");
  // max t <= 1 s.t. x = U(lambda' + t 1), lambda' >= 0. A positive optimum is
  // exactly a strictly positive representation.
  const int m = int(gens_.size());
  // Columns: lambda' (m), t, slack for t <= 1.
  MatQ A(nvars_ + 1, m + 2);
  VecQ b(std::size_t(nvars_) + 1);
  for (int i = 0; i < nvars_; ++i) {
    for (int j = 0; j < m; ++j) A.at(i, j) = gens_[std::size_t(j)][std::size_t(i)];
    Rational sum = 0;
    for (int j = 0; j < m; ++j) sum += gens_[std::size_t(j)][std::size_t(i)];
    A.at(i, m) = sum;
    b[std::size_t(i)] = x[std::size_t(i)];
  }
  A.at(nvars_, m) = 1;
  A.at(nvars_, m + 1) = 1;
  b[std::size_t(nvars_)] = 1;
  VecQ c(std::size_t(m) + 2, Rational(0));
  c[std::size_t(m)] = -1;
  auto res = lp_minimize(A, b, c);
  return res.status == LPStatus::Optimal && -res.objective > 0;
}

bool GeneratedCone::dual_contains(const VecQ& y) const {
  require(int(y.size()) == nvars_, Errc::dimension, "dual_contains: dimension mismatch");
  for (const auto& g : gens_)
    if (dot(y, g) < 0) return false;
  return true;
}

ConeFlags GeneratedCone::properness() const {
  ConeFlags flags;
  MatQ G(int(gens_.size()), nvars_);
  for (int i = 0; i < int(gens_.size()); ++i)
    for (int j = 0; j < nvars_; ++j) G.at(i, j) = gens_[std::size_t(i)][std::size_t(j)];
  flags.full_dimensional = rank(G) == nvars_;
  // Pointed iff some c has c . u_i >= 1 for all generators: write c = p - q
  // with p, q >= 0 and slacks s: G p - G q - s = 1.
  const int m = int(gens_.size());
  MatQ A(m, 2 * nvars_ + m);
  VecQ b(std::size_t(m), Rational(1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars_; ++j) {
      A.at(i, j) = G.at(i, j);
      A.at(i, nvars_ + j) = -G.at(i, j);
    }
    A.at(i, 2 * nvars_ + i) = -1;
  }
  flags.pointed = lp_feasible(A, b);
  return flags;
}

VecQ GeneratedCone::interior_sample(std::uint64_t seed) const {
  require(properness().full_dimensional, Errc::domain,
          "interior_sample: cone is not full-dimensional");
  RatRng rng(seed);
  VecQ x(std::size_t(nvars_), Rational(0));
  for (const auto& g : gens_) {
    Rational lambda = rng.rational_in_scaled(32, 96, 64);  // [1/2, 3/2]
    for (int i = 0; i < nvars_; ++i) x[std::size_t(i)] += lambda * g[std::size_t(i)];
  }
  return x;
}

std::vector<double> GeneratedCone::project(const std::vector<double>& z, double tol) const {
  require(int(z.size()) == nvars_, Errc::dimension, "project: dimension mismatch");
  Eigen::MatrixXd E = generator_matrix(gens_, nvars_);
  Eigen::VectorXd zv = Eigen::Map<const Eigen::VectorXd>(z.data(), nvars_);
  Eigen::VectorXd q = nnls(E, zv, 50 * std::max<int>(8, int(gens_.size())));
  Eigen::VectorXd x = E * q;
  // KKT certificate for cone projection: the residual must lie in the polar
  // cone and be orthogonal to the projection.
  Eigen::VectorXd r = zv - x;
  double scale = std::max(1.0, zv.norm());
  for (int j = 0; j < E.cols(); ++j)
    require(r.dot(E.col(j)) <= tol * scale * std::max(1.0, E.col(j).norm()), Errc::numeric,
            "project: KKT dual feasibility violated");
  require(std::abs(r.dot(x)) <= tol * scale * std::max(1.0, x.norm()), Errc::numeric,
          "project: KKT complementarity violated");
  return std::vector<double>(x.data(), x.data() + nvars_);
}

Certificate GeneratedCone::acute_wrt(const MatQ& q, std::uint64_t seed) const {
  require(q.rows() == nvars_ && q.cols() == nvars_, Errc::dimension,
          "acute_wrt: matrix dimension mismatch");
  long pairs = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i; j < gens_.size(); ++j) {
      ++pairs;
      Rational v = bilinear(gens_[i], q, gens_[j]);
      if (v < 0) {
        nlohmann::json witness;
        witness["pair"] = {int(i), int(j)};
        witness["value"] = fraction_string(v);
        return Certificate::certified_no(seed, pairs, witness,
                                         "generator pair with negative pairing");
      }
    }
  return Certificate::certified_yes(seed, pairs, "all generator pairs nonnegative");
}

GeneratedCone inner_approximation(int nvars, const std::function<bool(const VecQ&)>& member,
                                  int rays, std::uint64_t seed, bool restrict_orthant) {
  require(rays >= 1, Errc::argument, "inner_approximation: rays must be positive");
  RatRng rng(seed);
  std::vector<VecQ> kept;
  long attempts = 0;
  const long cap = 200L * rays + 1000;
  while (int(kept.size()) < rays && attempts < cap) {
    ++attempts;
    // Gaussian-ish direction via sum of uniforms, then rationalized.
    std::vector<double> dir(std::size_t(nvars), 0.0);
    double norm2 = 0;
    for (int i = 0; i < nvars; ++i) {
      double u = rng.double_in(-1.0, 1.0) + rng.double_in(-1.0, 1.0) + rng.double_in(-1.0, 1.0);
      if (restrict_orthant) u = std::abs(u);
      dir[std::size_t(i)] = u;
      norm2 += u * u;
    }
    if (norm2 < 1e-12) continue;
    double norm = std::sqrt(norm2);
    VecQ ray(std::size_t(nvars), Rational(0));
    for (int i = 0; i < nvars; ++i) ray[std::size_t(i)] = rationalize(dir[std::size_t(i)] / norm, 1 << 12);
    bool zero = std::all_of(ray.begin(), ray.end(), [](const Rational& c) { return c == 0; });
    if (zero) continue;
    if (member(ray)) kept.push_back(std::move(ray));
  }
  require(!kept.empty(), Errc::numeric,
          "inner_approximation: no sampled ray passed the membership predicate");
  return GeneratedCone(nvars, kept);
}

}  // namespace klz
