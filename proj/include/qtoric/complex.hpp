#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qtoric/rational.hpp"

namespace qtoric {

// Abstract simplicial complex on vertex subset of {0..num_vertices-1},
// faces stored as bitmasks. The empty face is always present.
class SimplicialComplex {
 public:
  SimplicialComplex() { faces_.insert(0); }
  explicit SimplicialComplex(std::size_t num_vertices) : num_vertices_(num_vertices) {
    faces_.insert(0);
  }

  // Closure of the given maximal faces.
  static SimplicialComplex from_max_faces(std::size_t num_vertices,
                                          const std::vector<std::uint32_t>& max_faces);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::set<std::uint32_t>& faces() const { return faces_; }
  bool has_face(std::uint32_t mask) const { return faces_.count(mask) != 0; }

  // Subcomplex of faces contained in alpha.
  SimplicialComplex induced(std::uint32_t alpha) const;

  void insert_closed(std::uint32_t face);

 private:
  std::size_t num_vertices_ = 0;
  std::set<std::uint32_t> faces_;
};

// Nonzero reduced cohomology dimensions over the rationals, as sorted
// (degree, dimension) pairs. Degree -1 appears exactly when the complex
// has no nonempty face.
std::vector<std::pair<int, std::size_t>> reduced_cohomology(const SimplicialComplex& sc);

// alpha -> nonzero reduced cohomology of the induced subcomplex, for every
// subset alpha of the vertex set. Only nonzero rows are stored.
struct ObstructionTable {
  std::size_t num_vertices = 0;
  std::map<std::uint32_t, std::vector<std::pair<int, std::size_t>>> entries;

  // Subsets whose induced subcomplex has nonzero reduced cohomology in the
  // given degree.
  std::vector<std::uint32_t> j_set(int degree) const;
};

inline constexpr std::size_t kDefaultRayCap = 20;

ObstructionTable obstruction_table_for(const SimplicialComplex& sc,
                                       std::size_t ray_cap = kDefaultRayCap);

}  // namespace qtoric
