#pragma once

#include <vector>

#include "qtoric/lp.hpp"
#include "qtoric/rational.hpp"

namespace qtoric {

// One homogeneous half-space: normal·x >= 0, or > 0 when strict.
// Normals are kept as primitive integer vectors.
struct ConeConstraint {
  IntVec normal;
  bool strict = false;
};

// Partially open rational polyhedral cone (intersection of the half-spaces).
struct POCone {
  std::size_t dim = 0;
  std::vector<ConeConstraint> constraints;

  void add(IntVec normal, bool strict) { constraints.push_back({std::move(normal), strict}); }
};

using ConeUnion = std::vector<POCone>;

// A cone that is provably empty (contradictory strict pair on the first axis).
POCone empty_cone(std::size_t dim);

// Signed orthant: coordinates in alpha strictly negative, the rest >= 0.
POCone orthant(std::size_t dim, std::uint32_t alpha);

StrictSystem to_system(const POCone& c);
bool member(const RatVec& point, const POCone& c);
bool member(const RatVec& point, const ConeUnion& u);

// Deduplicates normals (stricter flag wins) and sorts them; normals are
// rescaled to primitive integer vectors.
POCone canonicalize(const POCone& c);

// Drops constraints whose removal provably does not change the set.
POCone prune(const POCone& c);

// Image of the cone under a surjective linear map (rows = target dim).
// Fourier-Motzkin on the lifted system; a derived inequality is strict iff
// some parent is strict.
POCone project(const POCone& c, const RatMatrix& map);

POCone closure(const POCone& c);

// Interior: empty when the cone is not full-dimensional, otherwise the
// irredundant representation with every constraint strict.
POCone interior(const POCone& c);

// Cell of a hyperplane arrangement: sign per hyperplane and an exact witness.
struct ArrangementCell {
  std::vector<int> signs;  // -1, 0, +1 per hyperplane
  RatVec witness;
  POCone cone;  // the cell as a partially open cone (equalities paired)
};

// All nonempty sign cells of the arrangement of the given hyperplanes.
// Cells partition the ambient space and are enumerated deterministically.
std::vector<ArrangementCell> arrangement_cells(const std::vector<IntVec>& normals,
                                               std::size_t dim);

// Hyperplane normals of a union, canonicalized (primitive, sign-normalized,
// sorted, deduplicated).
std::vector<IntVec> hyperplanes_of(const ConeUnion& u);

// Complement as a finite union of partially open cones (arrangement cells
// whose witness avoids the union).
ConeUnion complement(const ConeUnion& u);

// Exact equality test via mutual membership on a refining arrangement.
bool union_equal(const ConeUnion& a, const ConeUnion& b);

// --- bounded polyhedra -----------------------------------------------------

// normal·x + offset >= 0 (or > 0 when strict)
struct AffineConstraint {
  RatVec normal;
  Rat offset;
  bool strict = false;
};

struct Polyhedron {
  std::size_t dim = 0;
  std::vector<AffineConstraint> rows;

  void add(RatVec normal, Rat offset, bool strict = false) {
    rows.push_back({std::move(normal), std::move(offset), strict});
  }
};

StrictSystem to_system(const Polyhedron& p);

// True when the recession cone of the closure is {0}.
bool is_bounded(const Polyhedron& p);

// Vertices of the closure, sorted lexicographically.
// Throws QtError("Unbounded") when the recession cone is nontrivial.
std::vector<RatVec> vertices(const Polyhedron& p);

// Exact volume of the closure (0 when lower-dimensional).
Rat volume(const Polyhedron& p);

// Volume of the convex hull of a point set (0 when not full-dimensional).
Rat hull_volume(const std::vector<RatVec>& points, std::size_t dim);

}  // namespace qtoric
