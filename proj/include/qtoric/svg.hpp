#pragma once

#include <string>

#include "qtoric/fan.hpp"

namespace qtoric {

// Figure for Picard-rank-2 fans: the closed obstruction images for level q
// hatched, the q-ample cells shaded, strict boundaries dashed. Viewport is
// the square [-2,2]^2; output bytes are deterministic for a fixed input.
// Throws QtError("UnsupportedRank") unless the class lattice has rank 2.
std::string emit_figure(const Fan& f, std::size_t q);

}  // namespace qtoric
