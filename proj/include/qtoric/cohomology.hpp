#pragma once

#include <map>
#include <vector>

#include "qtoric/complex.hpp"
#include "qtoric/fan.hpp"

namespace qtoric {

// Inclusive integer bounding box; empty when lo[j] > hi[j] for some j.
struct LatticeBox {
  IntVec lo, hi;

  bool empty() const;
  void merge(const LatticeBox& other);
};

struct CohomologyTable {
  TorusDivisor divisor;
  std::vector<std::size_t> dims;  // h^0 .. h^n
  // degree -> list of (weight, multiplicity); populated only on request
  std::map<int, std::vector<std::pair<IntVec, std::size_t>>> weights;
  LatticeBox box;  // contains every weight with a nonzero contribution
};

// alpha = {i : <m, v_i> + d_i < 0}, as a ray bitmask.
std::uint32_t support_pattern(const Fan& f, const TorusDivisor& d, const IntVec& m);

// Dimensions of the single weight space: reduced cohomology of the induced
// subcomplex on support_pattern(m), shifted up by one degree.
std::vector<std::pair<int, std::size_t>> weight_cohomology(const Fan& f, const TorusDivisor& d,
                                                           const IntVec& m);

// All cohomology of O(D), enumerated chamber by chamber over the nonzero rows
// of the obstruction table. Throws NotCartier, or UnboundedContribution when a
// contributing chamber fails the recession-cone test.
CohomologyTable cohomology(const Fan& f, const TorusDivisor& d, bool keep_weights = false);

// Independent check: Cech complex on the maximal-cone affine cover, computed
// weight by weight over the given box.
CohomologyTable cech_oracle(const Fan& f, const TorusDivisor& d, const LatticeBox& box);

}  // namespace qtoric
