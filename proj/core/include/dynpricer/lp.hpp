#pragma once

#include <cstddef>

#include "dynpricer/vec.hpp"

namespace dynpricer {

// maximize c'x  subject to  A_eq x = b_eq,  A_ub x <= b_ub,  x >= 0.
struct LpProblem {
  Vec c;
  std::vector<Vec> a_eq;
  Vec b_eq;
  std::vector<Vec> a_ub;
  Vec b_ub;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  double value = 0.0;
  Vec dual_eq;  // free sign
  Vec dual_ub;  // >= 0
};

// Dense two-phase tableau simplex with Bland's rule (finite, no cycling).
// Instance sizes here are ~30 variables, so no sparsity or scaling tricks.
LpResult solve_lp(const LpProblem& p);

// Optimality certificate: primal feasible + dual feasible + matching
// objectives (weak duality makes that a proof). Independent of the pivot
// path that produced the result.
struct LpCertificate {
  bool ok = false;
  double max_violation = 0.0;
};
LpCertificate verify_lp_certificate(const LpProblem& p, const LpResult& r, double tol = 1e-7);

}  // namespace dynpricer
