#include "qtoric/asymptotic.hpp"

#include "qtoric/cones.hpp"
#include "qtoric/lp.hpp"
#include "qtoric/qample.hpp"

namespace qtoric {

namespace {

Polyhedron chamber_of(const Fan& f, const RatVec& d, std::uint32_t alpha) {
  Polyhedron ch;
  ch.dim = f.dim;
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    RatVec nrm(f.dim);
    bool neg = (alpha >> i) & 1u;
    for (std::size_t j = 0; j < f.dim; ++j) nrm[j] = neg ? Rat(-f.rays[i][j]) : Rat(f.rays[i][j]);
    ch.add(std::move(nrm), neg ? -d[i] : d[i], neg);
  }
  return ch;
}

Rat pow_rat(const Rat& s, std::size_t n) {
  Rat out = 1;
  for (std::size_t j = 0; j < n; ++j) out *= s;
  return out;
}

std::vector<RatVec> default_perturbations(std::size_t rho) {
  std::vector<RatVec> out;
  std::vector<int> eps(rho, -1);
  while (true) {
    bool zero = true;
    for (int e : eps) zero &= e == 0;
    if (!zero) {
      RatVec p(rho);
      for (std::size_t j = 0; j < rho; ++j) p[j] = rat(eps[j], 64);
      out.push_back(std::move(p));
    }
    std::size_t j = 0;
    while (j < rho && eps[j] == 1) eps[j++] = -1;
    if (j == rho) break;
    ++eps[j];
  }
  return out;
}

}  // namespace

AsymptoticValue hhat(const Fan& f, const RatVec& d, std::size_t i) {
  if (i > f.dim) throw QtError("InvalidDegree", "degree must lie in [0, n]");
  ObstructionTable obs = obstruction_table(f);
  Rat total = 0;
  for (const auto& [alpha, cohom] : obs.entries) {
    std::size_t dim = 0;
    for (const auto& [deg, mult] : cohom)
      if (deg == static_cast<int>(i) - 1) dim = mult;
    if (dim == 0) continue;
    Polyhedron ch = chamber_of(f, d, alpha);
    if (!lp_feasible(to_system(ch)).feasible) continue;
    if (!is_bounded(ch)) throw QtError("UnboundedChamber", "contributing chamber is unbounded");
    total += Rat(dim) * volume(ch);
  }
  Int fact = 1;
  for (std::size_t j = 2; j <= f.dim; ++j) fact *= Int(j);
  return {i, Rat(fact) * total};
}

bool hhat_homogeneity_check(const Fan& f, const RatVec& d, std::size_t i, const Rat& s) {
  if (sgn(s) <= 0) throw QtError("BadScale", "scale must be positive");
  RatVec sd(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) sd[j] = s * d[j];
  return hhat(f, sd, i).value == pow_rat(s, f.dim) * hhat(f, d, i).value;
}

VanishingReport vanishing_equivalence_check(const Fan& f, const ClassVector& c, std::size_t q,
                                            const std::vector<RatVec>& perturbations) {
  ClassLattice cl = class_lattice(f);
  RatMatrix section = class_section(cl);
  RatMatrix proj = RatMatrix::from_int(cl.projection);
  const std::vector<RatVec> perts =
      perturbations.empty() ? default_perturbations(cl.rank) : perturbations;

  VanishingReport report;
  report.membership = is_q_ample(f, c, q);

  // structural path: c against the closed orthant images, via the projected
  // cone descriptions rather than lift LPs
  // functions hhat^i with i > q draw on table degrees i - 1 >= q
  ObstructionRegion region = obstruction_region(f, q);
  report.structural_zero = true;
  bool in_union = false, in_some_interior = false;
  for (const auto& [deg, alpha] : region.alphas) {
    POCone image = project(closure(orthant(f.num_rays(), alpha)), proj);
    if (member(c, image)) {
      in_union = true;
      report.structural_zero = false;
      if (member(c, interior(image))) in_some_interior = true;
    }
  }

  // sampled path: exact hhat values at c and at the perturbed points
  report.sampled_zero = true;
  bool straddles = false;
  std::vector<RatVec> points = {c};
  for (const RatVec& p : perts) {
    RatVec shifted(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) shifted[j] = c[j] + p[j];
    points.push_back(std::move(shifted));
  }
  for (const RatVec& point : points) {
    RatVec lift = section.apply(point);
    for (std::size_t i = q + 1; i <= f.dim; ++i)
      if (hhat(f, lift, i).value != 0) report.sampled_zero = false;
    if (is_q_ample(f, point, q) != report.membership) straddles = true;
  }

  report.inconclusive = straddles || (in_union && !in_some_interior);
  return report;
}

}  // namespace qtoric
