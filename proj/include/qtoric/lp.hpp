#pragma once

#include "qtoric/rational.hpp"

namespace qtoric {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status;
  Rat objective;
  RatVec x;
};

// maximize c·x subject to A x <= b, x free. Exact rational simplex with
// Bland's rule (two-phase, free variables split internally).
LpResult lp_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c);

// One row of a system of affine constraints: normal·x + offset >= 0,
// or > 0 when strict is set.
struct StrictConstraint {
  RatVec normal;
  Rat offset;
  bool strict = false;
};

struct StrictSystem {
  std::size_t dim = 0;
  std::vector<StrictConstraint> rows;

  void add(RatVec normal, Rat offset, bool strict) {
    rows.push_back({std::move(normal), std::move(offset), strict});
  }
};

struct Feasibility {
  bool feasible = false;
  RatVec witness;  // empty when infeasible
};

// Decides whether some rational point satisfies every constraint including
// the strict ones. Slack formulation: maximize t with strict rows relaxed to
// normal·x + offset >= t and t <= 1; strictly feasible iff the optimum is
// positive.
Feasibility lp_feasible(const StrictSystem& sys);

// Optimizes a linear functional over the closed relaxation of the system
// (all strict flags dropped).
LpResult lp_optimize_closed(const StrictSystem& sys, const RatVec& objective, bool maximize);

}  // namespace qtoric
