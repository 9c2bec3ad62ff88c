#include "qtoric/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "qtoric/cones.hpp"
#include "qtoric/lp.hpp"

namespace qtoric {

namespace {

Int pairing(const IntVec& m, const IntVec& ray, const Int& di) {
  Int val = di;
  for (std::size_t j = 0; j < ray.size(); ++j) val += m[j] * ray[j];
  return val;
}

void require_cartier(const Fan& f, const TorusDivisor& d) {
  if (!is_cartier(f, d).cartier) throw QtError("NotCartier", "divisor is not Cartier");
}

// Chamber of weights whose support pattern is exactly alpha:
// <u, v_i> + d_i < 0 for i in alpha, >= 0 otherwise.
Polyhedron chamber_of(const Fan& f, const TorusDivisor& d, std::uint32_t alpha) {
  Polyhedron ch;
  ch.dim = f.dim;
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    RatVec nrm(f.dim);
    bool neg = (alpha >> i) & 1u;
    for (std::size_t j = 0; j < f.dim; ++j) nrm[j] = neg ? Rat(-f.rays[i][j]) : Rat(f.rays[i][j]);
    ch.add(std::move(nrm), neg ? Rat(-d[i]) : Rat(d[i]), neg);
  }
  return ch;
}

// Inclusive integer bounding box of the chamber closure via 2n exact LPs.
// The closure is bounded by assumption (checked by the caller).
LatticeBox box_of(const Polyhedron& ch) {
  StrictSystem sys = to_system(ch);
  LatticeBox box;
  box.lo.resize(ch.dim);
  box.hi.resize(ch.dim);
  for (std::size_t j = 0; j < ch.dim; ++j) {
    RatVec obj(ch.dim);
    obj[j] = 1;
    LpResult hi = lp_optimize_closed(sys, obj, true);
    LpResult lo = lp_optimize_closed(sys, obj, false);
    if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal)
      throw QtError("UnboundedContribution", "chamber closure is unbounded");
    mpz_fdiv_q(box.hi[j].get_mpz_t(), hi.objective.get_num_mpz_t(), hi.objective.get_den_mpz_t());
    mpz_cdiv_q(box.lo[j].get_mpz_t(), lo.objective.get_num_mpz_t(), lo.objective.get_den_mpz_t());
  }
  return box;
}

template <typename Visit>
void for_each_lattice_point(const LatticeBox& box, IntVec& m, std::size_t j, Visit&& visit) {
  if (j == m.size()) {
    visit(m);
    return;
  }
  for (Int v = box.lo[j]; v <= box.hi[j]; ++v) {
    m[j] = v;
    for_each_lattice_point(box, m, j + 1, visit);
  }
}

}  // namespace

bool LatticeBox::empty() const {
  if (lo.empty()) return true;
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j]) return true;
  return false;
}

void LatticeBox::merge(const LatticeBox& other) {
  if (other.empty()) return;
  if (empty()) {
    *this = other;
    return;
  }
  for (std::size_t j = 0; j < lo.size(); ++j) {
    lo[j] = std::min(lo[j], other.lo[j]);
    hi[j] = std::max(hi[j], other.hi[j]);
  }
}

std::uint32_t support_pattern(const Fan& f, const TorusDivisor& d, const IntVec& m) {
  std::uint32_t alpha = 0;
  for (std::size_t i = 0; i < f.num_rays(); ++i)
    if (pairing(m, f.rays[i], d[i]) < 0) alpha |= 1u << i;
  return alpha;
}

std::vector<std::pair<int, std::size_t>> weight_cohomology(const Fan& f, const TorusDivisor& d,
                                                           const IntVec& m) {
  require_cartier(f, d);
  SimplicialComplex sub = boundary_complex(f).induced(support_pattern(f, d, m));
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [deg, dim] : reduced_cohomology(sub)) out.emplace_back(deg + 1, dim);
  return out;
}

CohomologyTable cohomology(const Fan& f, const TorusDivisor& d, bool keep_weights) {
  require_cartier(f, d);
  CohomologyTable table;
  table.divisor = d;
  table.dims.assign(f.dim + 1, 0);

  ObstructionTable obs = obstruction_table(f);
  for (const auto& [alpha, cohom] : obs.entries) {
    Polyhedron ch = chamber_of(f, d, alpha);
    Feasibility feas = lp_feasible(to_system(ch));
    if (!feas.feasible) continue;
    if (!is_bounded(ch))
      throw QtError("UnboundedContribution",
                    "contributing chamber has a nontrivial recession cone");
    LatticeBox box = box_of(ch);
    IntVec m(f.dim);
    for_each_lattice_point(box, m, 0, [&](const IntVec& pt) {
      for (std::size_t i = 0; i < f.num_rays(); ++i) {
        Int val = pairing(pt, f.rays[i], d[i]);
        bool neg = (alpha >> i) & 1u;
        if (neg ? val >= 0 : val < 0) return;
      }
      bool used = false;
      for (const auto& [deg, dim] : cohom) {
        std::size_t p = static_cast<std::size_t>(deg + 1);
        table.dims[p] += dim;
        if (keep_weights) table.weights[static_cast<int>(p)].emplace_back(pt, dim);
        used = true;
      }
      if (used) {
        LatticeBox pointbox{pt, pt};
        table.box.merge(pointbox);
      }
    });
  }
  if (keep_weights)
    for (auto& [p, list] : table.weights) std::sort(list.begin(), list.end());
  return table;
}

CohomologyTable cech_oracle(const Fan& f, const TorusDivisor& d, const LatticeBox& box) {
  require_cartier(f, d);
  CohomologyTable table;
  table.divisor = d;
  table.dims.assign(f.dim + 1, 0);
  table.box = box;
  if (box.empty()) return table;

  std::size_t k = f.max_cones.size();
  std::vector<std::uint32_t> cone_masks(k, 0);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r : f.max_cones[c]) cone_masks[c] |= 1u << r;

  IntVec m(f.dim);
  for_each_lattice_point(box, m, 0, [&](const IntVec& pt) {
    // subsets of the cover admitting this weight: <pt, v_i> + d_i >= 0 on
    // every ray of the intersection cone (common rays, the fan is simplicial)
    std::uint32_t nonneg = 0;
    for (std::size_t i = 0; i < f.num_rays(); ++i)
      if (pairing(pt, f.rays[i], d[i]) >= 0) nonneg |= 1u << i;

    std::vector<std::vector<std::uint32_t>> groups(k + 1);  // by subset size
    for (std::uint32_t s = 1; s < (1u << k); ++s) {
      std::uint32_t common = (1u << f.num_rays()) - 1;
      for (std::size_t c = 0; c < k; ++c)
        if ((s >> c) & 1u) common &= cone_masks[c];
      if ((common & ~nonneg) == 0) groups[std::popcount(s)].push_back(s);
    }

    std::vector<std::size_t> ranks(k + 1, 0);  // rank of delta^p: C^p -> C^{p+1}
    for (std::size_t p = 0; p + 2 <= k; ++p) {
      const auto& dom = groups[p + 1];
      if (dom.empty() || groups[p + 2].empty()) continue;
      RatMatrix delta(groups[p + 2].size(), dom.size());
      for (std::size_t col = 0; col < dom.size(); ++col) {
        std::uint32_t s = dom[col];
        for (std::size_t c = 0; c < k; ++c) {
          if ((s >> c) & 1u) continue;
          std::uint32_t t = s | (1u << c);
          auto it = std::lower_bound(groups[p + 2].begin(), groups[p + 2].end(), t);
          if (it == groups[p + 2].end() || *it != t) continue;
          std::size_t row = static_cast<std::size_t>(it - groups[p + 2].begin());
          int pos = std::popcount(s & ((1u << c) - 1));
          delta(row, col) = (pos % 2 == 0) ? 1 : -1;
        }
      }
      ranks[p] = rational_rank(delta);
    }

    for (std::size_t p = 0; p + 1 < groups.size(); ++p) {
      std::size_t dim = groups[p + 1].size();
      if (dim == 0) continue;
      std::size_t rank_out = ranks[p];
      std::size_t rank_in = p == 0 ? 0 : ranks[p - 1];
      std::size_t h = dim - rank_out - rank_in;
      if (h == 0) continue;
      if (p > f.dim)
        throw QtError("BadFan", "Cech cohomology above the fan dimension");
      table.dims[p] += h;
    }
  });
  return table;
}

}  // namespace qtoric
