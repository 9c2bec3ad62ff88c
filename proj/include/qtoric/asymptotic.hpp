#pragma once

#include <vector>

#include "qtoric/fan.hpp"

namespace qtoric {

struct AsymptoticValue {
  std::size_t degree = 0;
  Rat value;  // >= 0
};

// Asymptotic cohomological function: n! times the sum, over the subsets alpha
// whose induced subcomplex has cohomology in degree i-1, of that dimension
// times the exact volume of the chamber closure of alpha at d. Divisor
// coefficients may be rational; the function is homogeneous of degree n.
AsymptoticValue hhat(const Fan& f, const RatVec& d, std::size_t i);

// Exact check hhat(s*d, i) == s^n * hhat(d, i).
bool hhat_homogeneity_check(const Fan& f, const RatVec& d, std::size_t i, const Rat& s);

struct VanishingReport {
  bool membership = false;       // the q-ample membership test
  bool sampled_zero = false;     // hhat^i == 0 at c and all perturbations, i > q
  bool structural_zero = false;  // c avoids every closed orthant image with i > q
  bool inconclusive = false;     // c sits on (or samples straddle) a cell boundary
};

// Cross-checks the vanishing criterion: membership and structural_zero always
// agree; sampled_zero may differ only when inconclusive is set.
// Default perturbations: (eps_1, .., eps_rho)/64 over eps_j in {-1, 0, 1}.
VanishingReport vanishing_equivalence_check(const Fan& f, const ClassVector& c, std::size_t q,
                                            const std::vector<RatVec>& perturbations = {});

}  // namespace qtoric
