#include "qtoric/qample.hpp"

#include <algorithm>
#include <set>

#include "qtoric/lp.hpp"

namespace qtoric {

namespace {

void require_q(const Fan& f, std::size_t q) {
  if (q > f.dim) throw QtError("InvalidQ", "q must lie in [0, n]");
}

// Any rational divisor representative of the class point.
RatVec lift_class(const ClassLattice& cl, const ClassVector& c) {
  return class_section(cl).apply(c);
}

// c in [closure(O_alpha)]: some representative lift + pairing(u) has
// coordinate j <= 0 for j in alpha and >= 0 otherwise.
bool in_closed_image(const Fan& f, const RatVec& lift, std::uint32_t alpha) {
  StrictSystem sys;
  sys.dim = f.dim;
  for (std::size_t j = 0; j < f.num_rays(); ++j) {
    RatVec nrm(f.dim);
    bool neg = (alpha >> j) & 1u;
    for (std::size_t t = 0; t < f.dim; ++t)
      nrm[t] = neg ? Rat(-f.rays[j][t]) : Rat(f.rays[j][t]);
    sys.add(std::move(nrm), neg ? -lift[j] : lift[j], false);
  }
  return lp_feasible(sys).feasible;
}

}  // namespace

ObstructionRegion obstruction_region(const Fan& f, std::size_t q) {
  require_q(f, q);
  ObstructionRegion region;
  region.q = q;
  ObstructionTable obs = obstruction_table(f);
  ClassLattice cl = class_lattice(f);
  RatMatrix proj = RatMatrix::from_int(cl.projection);
  std::set<std::uint32_t> seen;
  for (const auto& [alpha, cohom] : obs.entries) {
    for (const auto& [deg, dim] : cohom) {
      if (deg < static_cast<int>(q)) continue;
      region.alphas.emplace_back(deg, alpha);
      if (seen.insert(alpha).second)
        region.closed_images.push_back(project(closure(orthant(f.num_rays(), alpha)), proj));
    }
  }
  std::sort(region.alphas.begin(), region.alphas.end());
  return region;
}

bool is_q_ample(const Fan& f, const ClassVector& c, std::size_t q) {
  require_q(f, q);
  ObstructionTable obs = obstruction_table(f);
  ClassLattice cl = class_lattice(f);
  RatVec lift = lift_class(cl, c);
  for (const auto& [alpha, cohom] : obs.entries) {
    bool relevant = false;
    for (const auto& [deg, dim] : cohom) relevant |= deg >= static_cast<int>(q);
    if (!relevant) continue;
    if (in_closed_image(f, lift, alpha)) return false;
  }
  return true;
}

QAmpleCone q_ample_cone(const Fan& f, std::size_t q) {
  require_q(f, q);
  QAmpleCone out;
  out.q = q;
  ObstructionRegion region = obstruction_region(f, q);
  std::size_t rho = class_lattice(f).rank;
  if (region.closed_images.empty()) {
    POCone everything;
    everything.dim = rho;
    out.cells = {everything};
    out.closed_pieces = {everything};
    return out;
  }
  out.cells = complement(region.closed_images);
  for (const POCone& cell : out.cells) {
    Feasibility feas = lp_feasible(to_system(cell));
    if (!feas.feasible || !is_q_ample(f, feas.witness, q))
      throw QtError("BadFan", "cell witness disagrees with the membership test");
    if (lp_feasible(to_system(interior(cell))).feasible)
      out.closed_pieces.push_back(closure(cell));
  }
  return out;
}

std::size_t ampleness_level(const Fan& f, const ClassVector& c) {
  for (std::size_t q = 0; q <= f.dim; ++q)
    if (is_q_ample(f, c, q)) return q;
  return f.dim;  // unreachable: the obstruction table is empty at degree n
}

POCone effective_cone(const Fan& f) {
  ClassLattice cl = class_lattice(f);
  return project(orthant(f.num_rays(), 0), RatMatrix::from_int(cl.projection));
}

}  // namespace qtoric
