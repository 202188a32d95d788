#pragma once

#include <cstdint>
#include <vector>

#include "certificate.hpp"
#include "cone.hpp"
#include "poly.hpp"
#include "unipoly.hpp"

namespace klz {

// Classification of a point against the closed/open derivative-tower cones:
// the open cone requires every tower level strictly positive, the closed cone
// nonnegative, and one strictly negative level places the point outside.
enum class MembershipClass { InteriorOpen, ClosedOnly, Outside };

std::string membership_name(MembershipClass m);

// The list (f, D_v f, ..., D_v^d f) attached to a homogeneous form and a
// direction; levels 0..d-1 cut out the tower cones.
class ConeTower {
 public:
  ConeTower(Polynomial f, VecQ v);

  const Polynomial& f() const { return levels_.front(); }
  const VecQ& direction() const { return v_; }
  const std::vector<Polynomial>& levels() const { return levels_; }
  int degree() const { return int(levels_.size()) - 1; }
  int nvars() const { return levels_.front().nvars(); }

  MembershipClass membership(const VecQ& x) const;

 private:
  VecQ v_;
  std::vector<Polynomial> levels_;
};

// Exact signature of a symmetric rational matrix (Sylvester-invariant).
Inertia inertia(const MatQ& q);

// Lorentzian-quadratic test: exactly one positive eigenvalue and positive
// pairings on the interior of K. CertifiedYes is exact (reverse
// Cauchy-Schwarz for signature (1, n-1)); Unknown only when the form is
// degenerate and no violation was found.
Certificate quadratic_lorentzian(const MatQ& q, const GeneratedCone& K, std::uint64_t seed);

// Semi-decision of the K-Lorentzian property: scans the quadratics obtained
// from all (d-2)-multisets of generators and from seeded interior tuples.
Certificate k_lorentzian_check(const Polynomial& f, const GeneratedCone& K, int samples,
                               std::uint64_t seed);

// Semi-decision of complete log-concavity via sampled derivative strings and
// Rayleigh-matrix positive semidefiniteness.
Certificate clc_check(const Polynomial& f, const GeneratedCone& K, int samples,
                      std::uint64_t seed);

// Exact ultra-log-concavity of the coefficient sequence of a bivariate form
// with nonnegative coefficients and contiguous support.
bool ulc_bivariate(const Polynomial& f);

// Real-rootedness of t -> f(x + t e) over a deterministic lattice plus seeded
// rational sample points.
Certificate hyperbolicity_check(const Polynomial& f, const VecQ& e, int samples,
                                std::uint64_t seed);

MembershipClass tower_membership(const ConeTower& t, const VecQ& x);

struct BoundaryEntry {
  int level;            // k with tower[k](x) = 0
  int taylor_index;     // first nonzero Taylor index of t -> tower[k](x+tv), -1 if none
  int taylor_sign;      // its sign (0 when the restriction vanishes identically)
  std::string verdict;  // NotInterior | NecessaryConditionsHold | RestrictionIdenticallyZero
};
std::vector<BoundaryEntry> boundary_classify(const ConeTower& t, const VecQ& x);

// Soundness check of K subseteq K(f,v) on generators plus interior samples.
bool inclusion_check(const GeneratedCone& K, const ConeTower& t, int samples = 16,
                     std::uint64_t seed = 0);

// Midpoint-based convexity falsifier over the closed tower cone.
Certificate convexity_falsifier(const ConeTower& t, long trials, std::uint64_t seed);
// Same sampling scheme against exact membership in a generated cone.
Certificate convexity_falsifier_cone(const GeneratedCone& K, long trials, std::uint64_t seed);

// Builds the three-segment positive path from x to the tower direction and
// verifies strict positivity of f on a grid along it.
bool connectivity_witness(const ConeTower& t, const VecQ& x, int grid);

}  // namespace klz
