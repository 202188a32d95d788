#pragma once

#include "linalg.hpp"
#include "rational.hpp"

namespace klz {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status;
  Rational objective;  // valid when Optimal
  VecQ x;              // valid when Optimal
};

// Exact two-phase primal simplex with Bland's rule:
//   minimize c^T x  subject to  A x = b, x >= 0.
// Dense rational tableau; intended for the small systems that arise from cone
// membership, pointedness and semipositivity checks.
LPResult lp_minimize(const MatQ& A, const VecQ& b, const VecQ& c);

// Feasibility of { x >= 0 : A x = b }.
bool lp_feasible(const MatQ& A, const VecQ& b);

}  // namespace klz
