#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "certificate.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace klz {

struct ConeFlags {
  bool pointed = false;
  bool full_dimensional = false;
  // Finitely generated cones are closed, so properness reduces to these two.
  bool proper() const { return pointed && full_dimensional; }
};

// Proper-or-not convex cone given by finitely many generator rays with exact
// rational coordinates. Generators are deduplicated up to positive scaling and
// stored as primitive integer vectors.
class GeneratedCone {
 public:
  GeneratedCone(int nvars, const std::vector<VecQ>& generators);

  static GeneratedCone orthant(int n);

  int nvars() const { return nvars_; }
  const std::vector<VecQ>& generators() const { return gens_; }

  // Exact membership: feasibility of x = sum lambda_i u_i, lambda >= 0
  // (rational simplex).
  bool contains_exact(const VecQ& x) const;
  // Floating membership: NNLS residual <= tol * max(1, |x|).
  bool contains_tol(const std::vector<double>& x, double tol = 1e-9) const;
  // Exact relative-interior membership: some representation with all
  // coefficients strictly positive.
  bool contains_relint(const VecQ& x) const;

  // y in dual cone: y . u_i >= 0 for every generator.
  bool dual_contains(const VecQ& y) const;

  ConeFlags properness() const;

  // Strictly positive seeded combination of all generators; lies in the
  // interior when the cone is full-dimensional (errors otherwise).
  VecQ interior_sample(std::uint64_t seed) const;

  // Euclidean projection onto the cone by Lawson-Hanson NNLS over the
  // generators; the result is certified against the KKT conditions.
  std::vector<double> project(const std::vector<double>& z, double tol = 1e-9) const;

  // Acuteness w.r.t. a symmetric bilinear form: u_i^T Q u_j >= 0 for all
  // generator pairs. Complete for finitely generated cones, so the verdict is
  // never Unknown.
  Certificate acute_wrt(const MatQ& q, std::uint64_t seed) const;

 private:
  int nvars_;
  std::vector<VecQ> gens_;
};

// Polyhedral inner approximation of a (possibly nonpolyhedral) cone given by a
// membership predicate: sample directions on the unit sphere (restricted to
// the nonnegative orthant when requested), rationalize, and keep those whose
// rationalization passes the exact predicate.
GeneratedCone inner_approximation(int nvars, const std::function<bool(const VecQ&)>& member,
                                  int rays, std::uint64_t seed, bool restrict_orthant);

}  // namespace klz
