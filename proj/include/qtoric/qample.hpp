#pragma once

#include <cstdint>
#include <vector>

#include "qtoric/cones.hpp"
#include "qtoric/fan.hpp"

namespace qtoric {

// K = union over i >= q of the orthant images [O_alpha], alpha in J_i,
// recorded through its closure: closure([O_alpha]) = [closure(O_alpha)]
// because linear images of closed polyhedral cones are closed.
struct ObstructionRegion {
  std::size_t q = 0;
  std::vector<std::pair<int, std::uint32_t>> alphas;  // (degree i, alpha)
  ConeUnion closed_images;                            // one per distinct alpha
};

ObstructionRegion obstruction_region(const Fan& f, std::size_t q);

// Membership in Amp_q = complement of closure(K), decided by closed lift
// feasibility: c is in [closure(O_alpha)] iff some divisor representative of c
// lies in the closed signed orthant of alpha.
bool is_q_ample(const Fan& f, const ClassVector& c, std::size_t q);

struct QAmpleCone {
  std::size_t q = 0;
  ConeUnion cells;          // partially open description of Amp_q
  ConeUnion closed_pieces;  // closures of the full-dimensional cells
};

QAmpleCone q_ample_cone(const Fan& f, std::size_t q);

// Least q with is_q_ample true; every class is n-ample.
std::size_t ampleness_level(const Fan& f, const ClassVector& c);

// Image of the closed nonnegative orthant: the cone spanned by the classes
// of the prime torus-invariant divisors.
POCone effective_cone(const Fan& f);

}  // namespace qtoric
