#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/complex.hpp"
#include "qtoric/rational.hpp"
#include "qtoric/smith.hpp"

namespace qtoric {

// Complete simplicial fan: primitive ray generators plus full-dimensional
// maximal cones given as 0-based ray index sets.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> max_cones;

  std::size_t num_rays() const { return rays.size(); }
};

using TorusDivisor = IntVec;   // coefficients d_i indexed by rays
using ClassVector = RatVec;    // coordinates in N^1(X)

struct ValidationReport {
  bool valid = false;
  std::string error;   // NotSimplicial | NotComplete | NotProjective | BadFan, empty when valid
  std::string detail;
};

// Checks: simplicial full-dimensional cones, every ridge in exactly two
// maximal cones, sphere cohomology of the boundary complex, exact point
// location for 100 seeded sample points, and projectivity via find_ample.
ValidationReport validate(const Fan& f);

struct ClassLattice {
  std::size_t rank = 0;        // rho = |I| - n
  IntMatrix projection;        // rho x |I|, Smith-basis coordinates on N^1
  std::vector<Int> torsion;    // invariant factors > 1 of Cl(X)
  IntMatrix pairing;           // |I| x n, rows <., v_i>: the map M -> Z^I
};

// Cokernel of M -> Z^I via Smith normal form; deterministic basis.
ClassLattice class_lattice(const Fan& f);

ClassVector class_of(const ClassLattice& cl, const RatVec& divisor);
inline ClassVector class_of(const ClassLattice& cl, const TorusDivisor& d) {
  return class_of(cl, to_rat(d));
}

// A rational right inverse of the projection (fixed deterministic section);
// lifts class vectors back to divisor coordinates.
RatMatrix class_section(const ClassLattice& cl);

struct CartierData {
  bool cartier = false;
  std::vector<IntVec> witnesses;  // m_sigma per maximal cone, valid when cartier
};

CartierData is_cartier(const Fan& f, const TorusDivisor& d);

// Strict convexity of the support function across every wall. Throws
// QtError("NotCartier") when d is not Cartier.
bool is_ample(const Fan& f, const TorusDivisor& d);

// Integer ample divisor found by exact LP over the wall inequalities;
// projectivity witness. Throws QtError("NotProjective") when none exists.
TorusDivisor find_ample(const Fan& f);

// Boundary complex of the polytope: S is a face iff S spans a cone of the fan.
SimplicialComplex boundary_complex(const Fan& f);

ObstructionTable obstruction_table(const Fan& f, std::size_t ray_cap = kDefaultRayCap);

// Interior walls of the fan: ridge shared by exactly two maximal cones.
struct Wall {
  std::size_t cone_a, cone_b;
  std::vector<std::size_t> ridge;     // shared ray indices
  std::size_t opposite_a, opposite_b; // ray of each cone not on the ridge
};

std::vector<Wall> walls(const Fan& f);

// True when the point lies in the cone spanned by the given rays.
bool cone_contains(const Fan& f, const std::vector<std::size_t>& cone, const RatVec& point);

}  // namespace qtoric
