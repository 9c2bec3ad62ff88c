#include "qtoric/complex.hpp"

#include <bit>

namespace qtoric {

void SimplicialComplex::insert_closed(std::uint32_t face) {
  // iterate over all submasks
  std::uint32_t sub = face;
  for (;;) {
    faces_.insert(sub);
    if (sub == 0) break;
    sub = (sub - 1) & face;
  }
}

SimplicialComplex SimplicialComplex::from_max_faces(std::size_t num_vertices,
                                                   const std::vector<std::uint32_t>& max_faces) {
  SimplicialComplex sc(num_vertices);
  for (std::uint32_t f : max_faces) sc.insert_closed(f);
  return sc;
}

SimplicialComplex SimplicialComplex::induced(std::uint32_t alpha) const {
  SimplicialComplex sub(num_vertices_);
  for (std::uint32_t f : faces_)
    if ((f & ~alpha) == 0) sub.faces_.insert(f);
  return sub;
}

std::vector<std::pair<int, std::size_t>> reduced_cohomology(const SimplicialComplex& sc) {
  // augmented cochain complex: C^{-1} spanned by the empty face
  int max_card = 0;
  for (std::uint32_t f : sc.faces()) max_card = std::max(max_card, std::popcount(f));
  // faces grouped by cardinality; index within group = position in sorted order
  std::vector<std::vector<std::uint32_t>> by_card(static_cast<std::size_t>(max_card) + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> index(static_cast<std::size_t>(max_card) + 1);
  for (std::uint32_t f : sc.faces()) {
    auto c = static_cast<std::size_t>(std::popcount(f));
    index[c][f] = by_card[c].size();
    by_card[c].push_back(f);
  }
  // rank of each coboundary map delta^{d}: C^{d} -> C^{d+1}, d = card-1
  std::vector<std::size_t> rank(static_cast<std::size_t>(max_card) + 1, 0);
  for (std::size_t c = 0; c + 1 <= static_cast<std::size_t>(max_card); ++c) {
    if (by_card[c].empty() || by_card[c + 1].empty()) continue;
    RatMatrix d(by_card[c + 1].size(), by_card[c].size());
    for (std::size_t r = 0; r < by_card[c + 1].size(); ++r) {
      std::uint32_t face = by_card[c + 1][r];
      int pos = 0;
      for (std::uint32_t rem = face; rem != 0;) {
        std::uint32_t bit = rem & (~rem + 1);
        std::uint32_t sub = face & ~bit;
        d(r, index[c].at(sub)) = (pos % 2 == 0) ? 1 : -1;
        rem &= rem - 1;
        ++pos;
      }
    }
    rank[c] = rational_rank(d);
  }
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t c = 0; c <= static_cast<std::size_t>(max_card); ++c) {
    std::size_t dim = by_card[c].size();
    std::size_t r_out = c < static_cast<std::size_t>(max_card) ? rank[c] : 0;
    std::size_t r_in = c > 0 ? rank[c - 1] : 0;
    std::size_t h = dim - r_out - r_in;
    if (h != 0) out.emplace_back(static_cast<int>(c) - 1, h);
  }
  return out;
}

std::vector<std::uint32_t> ObstructionTable::j_set(int degree) const {
  std::vector<std::uint32_t> out;
  for (const auto& [alpha, cohom] : entries)
    for (const auto& [deg, dim] : cohom)
      if (deg == degree) {
        out.push_back(alpha);
        break;
      }
  return out;
}

ObstructionTable obstruction_table_for(const SimplicialComplex& sc, std::size_t ray_cap) {
  if (sc.num_vertices() > ray_cap)
    throw QtError("TooManyRays", "subset enumeration over " + std::to_string(sc.num_vertices()) +
                                     " vertices exceeds cap " + std::to_string(ray_cap));
  ObstructionTable table;
  table.num_vertices = sc.num_vertices();
  std::uint32_t total = 1u << sc.num_vertices();
  for (std::uint32_t alpha = 0; alpha < total; ++alpha) {
    auto cohom = reduced_cohomology(sc.induced(alpha));
    if (!cohom.empty()) table.entries.emplace(alpha, std::move(cohom));
  }
  return table;
}

}  // namespace qtoric
