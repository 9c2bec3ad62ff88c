#include "qtoric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "qtoric/lp.hpp"

namespace qtoric {

namespace {

RatMatrix cone_matrix(const Fan& f, const std::vector<std::size_t>& cone) {
  // columns are the cone's ray generators
  RatMatrix m(f.dim, cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t i = 0; i < f.dim; ++i) m(i, j) = Rat(f.rays[cone[j]][i]);
  return m;
}

// Solves <m, v_i> = -d_i over the rays of one maximal cone.
bool cone_witness(const Fan& f, const std::vector<std::size_t>& cone, const RatVec& d,
                  RatVec& m) {
  RatMatrix a(cone.size(), f.dim);
  RatVec b(cone.size());
  for (std::size_t r = 0; r < cone.size(); ++r) {
    for (std::size_t j = 0; j < f.dim; ++j) a(r, j) = Rat(f.rays[cone[r]][j]);
    b[r] = -d[cone[r]];
  }
  return solve_linear(a, b, m);
}

std::uint32_t mask_of(const std::vector<std::size_t>& cone) {
  std::uint32_t m = 0;
  for (std::size_t i : cone) m |= 1u << i;
  return m;
}

}  // namespace

bool cone_contains(const Fan& f, const std::vector<std::size_t>& cone, const RatVec& point) {
  // simplicial cone: unique coordinates, contained iff all nonnegative
  RatMatrix m = cone_matrix(f, cone);
  RatVec lambda;
  if (!solve_linear(m, point, lambda)) return false;
  // verify (solve_linear ignores inconsistency only when rows < rank)
  RatVec back = m.apply(lambda);
  for (std::size_t i = 0; i < f.dim; ++i)
    if (back[i] != point[i]) return false;
  for (const Rat& l : lambda)
    if (l < 0) return false;
  return true;
}

std::vector<Wall> walls(const Fan& f) {
  std::map<std::uint32_t, std::vector<std::size_t>> by_ridge;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    std::uint32_t full = mask_of(f.max_cones[c]);
    for (std::size_t k = 0; k < f.max_cones[c].size(); ++k)
      by_ridge[full & ~(1u << f.max_cones[c][k])].push_back(c);
  }
  std::vector<Wall> out;
  for (const auto& [ridge_mask, cones] : by_ridge) {
    if (cones.size() != 2) continue;
    Wall w;
    w.cone_a = cones[0];
    w.cone_b = cones[1];
    for (std::size_t i = 0; i < f.num_rays(); ++i)
      if (ridge_mask & (1u << i)) w.ridge.push_back(i);
    auto opposite = [&](std::size_t c) {
      for (std::size_t i : f.max_cones[c])
        if (!(ridge_mask & (1u << i))) return i;
      return f.num_rays();
    };
    w.opposite_a = opposite(cones[0]);
    w.opposite_b = opposite(cones[1]);
    out.push_back(std::move(w));
  }
  return out;
}

SimplicialComplex boundary_complex(const Fan& f) {
  std::vector<std::uint32_t> max_faces;
  max_faces.reserve(f.max_cones.size());
  for (const auto& c : f.max_cones) max_faces.push_back(mask_of(c));
  return SimplicialComplex::from_max_faces(f.num_rays(), max_faces);
}

ObstructionTable obstruction_table(const Fan& f, std::size_t ray_cap) {
  return obstruction_table_for(boundary_complex(f), ray_cap);
}

ClassLattice class_lattice(const Fan& f) {
  std::size_t n = f.dim, nrays = f.num_rays();
  ClassLattice cl;
  cl.pairing = IntMatrix(nrays, n);
  for (std::size_t i = 0; i < nrays; ++i)
    for (std::size_t j = 0; j < n; ++j) cl.pairing(i, j) = f.rays[i][j];
  SmithForm sf = smith_normal_form(cl.pairing);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(nrays, n); ++k)
    if (sf.s(k, k) != 0) ++rank;
  if (rank != n)
    throw QtError("BadFan", "rays do not span the ambient space (torus factor)");
  for (std::size_t k = 0; k < rank; ++k)
    if (sf.s(k, k) > 1) cl.torsion.push_back(sf.s(k, k));
  cl.rank = nrays - n;
  cl.projection = IntMatrix(cl.rank, nrays);
  for (std::size_t r = 0; r < cl.rank; ++r)
    for (std::size_t j = 0; j < nrays; ++j) cl.projection(r, j) = sf.u(n + r, j);
  return cl;
}

ClassVector class_of(const ClassLattice& cl, const RatVec& divisor) {
  return RatMatrix::from_int(cl.projection).apply(divisor);
}

RatMatrix class_section(const ClassLattice& cl) {
  // solve projection * R = I column by column; deterministic pivoting
  std::size_t rho = cl.rank, nrays = cl.projection.cols();
  RatMatrix p = RatMatrix::from_int(cl.projection);
  RatMatrix section(nrays, rho);
  for (std::size_t c = 0; c < rho; ++c) {
    RatVec e(rho, Rat(0));
    e[c] = 1;
    RatVec x;
    if (!solve_linear(p, e, x)) throw QtError("BadFan", "projection not surjective");
    for (std::size_t i = 0; i < nrays; ++i) section(i, c) = x[i];
  }
  return section;
}

CartierData is_cartier(const Fan& f, const TorusDivisor& d) {
  CartierData out;
  out.cartier = true;
  RatVec dr = to_rat(d);
  for (const auto& cone : f.max_cones) {
    RatVec m;
    if (!cone_witness(f, cone, dr, m)) {
      out.cartier = false;
      return out;
    }
    IntVec mi(f.dim);
    for (std::size_t j = 0; j < f.dim; ++j) {
      if (m[j].get_den() != 1) {
        out.cartier = false;
        return out;
      }
      mi[j] = m[j].get_num();
    }
    out.witnesses.push_back(std::move(mi));
  }
  return out;
}

bool is_ample(const Fan& f, const TorusDivisor& d) {
  CartierData cd = is_cartier(f, d);
  if (!cd.cartier) throw QtError("NotCartier", "divisor is not Cartier");
  for (const Wall& w : walls(f)) {
    // evaluate each side's witness on the opposite ray of the other side
    Int lhs_a = dot(cd.witnesses[w.cone_a], f.rays[w.opposite_b]);
    if (lhs_a + d[w.opposite_b] <= 0) return false;
    Int lhs_b = dot(cd.witnesses[w.cone_b], f.rays[w.opposite_a]);
    if (lhs_b + d[w.opposite_a] <= 0) return false;
  }
  return true;
}

TorusDivisor find_ample(const Fan& f) {
  std::size_t nrays = f.num_rays();
  // wall inequality <m_sigma(a), v_j> + a_j >= 1, with m_sigma(a) linear in a
  StrictSystem sys;
  sys.dim = nrays;
  for (const Wall& w : walls(f)) {
    const auto& cone = f.max_cones[w.cone_a];
    // m_sigma solves rows(v_i, i in cone) * m = -a_cone: m = -V^{-1} a_cone
    RatMatrix v(cone.size(), f.dim);
    for (std::size_t r = 0; r < cone.size(); ++r)
      for (std::size_t j = 0; j < f.dim; ++j) v(r, j) = Rat(f.rays[cone[r]][j]);
    // row of <m_sigma(a), v_opp>: solve V^T y = v_opp, then coefficient of
    // a_{cone[r]} is -y_r
    RatVec vopp(f.dim);
    for (std::size_t j = 0; j < f.dim; ++j) vopp[j] = Rat(f.rays[w.opposite_b][j]);
    RatVec y;
    if (!solve_linear(v.transpose(), vopp, y))
      throw QtError("NotSimplicial", "degenerate maximal cone");
    RatVec row(nrays, Rat(0));
    for (std::size_t r = 0; r < cone.size(); ++r) row[cone[r]] -= y[r];
    row[w.opposite_b] += 1;
    sys.add(std::move(row), Rat(-1), false);  // row . a - 1 >= 0
  }
  Feasibility feas = lp_feasible(sys);
  if (!feas.feasible) throw QtError("NotProjective", "no strictly convex support function");
  // clear denominators, then scale so every cone witness is integral
  IntVec a = primitive(feas.witness);
  bool zero = true;
  for (const Int& x : a) zero &= x == 0;
  if (zero) throw QtError("NotProjective", "degenerate ample witness");
  Int scale = 1;
  for (const auto& cone : f.max_cones) {
    RatMatrix v = cone_matrix(f, cone);
    // |det| via elimination
    Rat detv = 1;
    {
      RatMatrix m = v;
      std::size_t n = f.dim;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) {
          detv = 0;
          break;
        }
        if (p != c) {
          for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
          detv = -detv;
        }
        detv *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
          if (m(i, c) == 0) continue;
          Rat fct = m(i, c) / m(c, c);
          for (std::size_t j = c; j < n; ++j) m(i, j) -= fct * m(c, j);
        }
      }
    }
    Int dabs = abs(detv.get_num());
    if (dabs != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), dabs.get_mpz_t());
  }
  TorusDivisor out(nrays);
  for (std::size_t i = 0; i < nrays; ++i) out[i] = a[i] * scale;
  if (!is_ample(f, out)) throw QtError("NotProjective", "ample witness failed verification");
  return out;
}

ValidationReport validate(const Fan& f) {
  std::size_t n = f.dim, nrays = f.num_rays();
  auto fail = [](std::string code, std::string detail) {
    return ValidationReport{false, std::move(code), std::move(detail)};
  };
  if (n == 0 || nrays == 0) return fail("BadFan", "empty fan");
  if (nrays > 32) return fail("BadFan", "more than 32 rays unsupported");
  std::vector<bool> used(nrays, false);
  for (std::size_t i = 0; i < nrays; ++i) {
    if (f.rays[i].size() != n) return fail("BadFan", "ray dimension mismatch");
    Int g = 0;
    for (const Int& x : f.rays[i]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1) return fail("BadFan", "ray " + std::to_string(i + 1) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[i] == f.rays[j]) return fail("BadFan", "duplicate ray");
  }
  // (a) simplicial: n rays per cone, linearly independent
  for (const auto& cone : f.max_cones) {
    if (cone.size() != n) return fail("NotSimplicial", "maximal cone is not n rays");
    for (std::size_t i : cone) {
      if (i >= nrays) return fail("BadFan", "cone ray index out of range");
      used[i] = true;
    }
    if (rational_rank(cone_matrix(f, cone)) != n)
      return fail("NotSimplicial", "maximal cone rays are dependent");
  }
  for (std::size_t i = 0; i < nrays; ++i)
    if (!used[i]) return fail("BadFan", "ray " + std::to_string(i + 1) + " in no maximal cone");
  // (b) pseudomanifold: every ridge in exactly two maximal cones
  {
    std::map<std::uint32_t, int> ridge_count;
    for (const auto& cone : f.max_cones) {
      std::uint32_t full = mask_of(cone);
      for (std::size_t i : cone) ridge_count[full & ~(1u << i)]++;
    }
    for (const auto& [mask, count] : ridge_count)
      if (count != 2) return fail("NotComplete", "ridge not shared by exactly two cones");
  }
  // (c) sphere witness: top reduced cohomology of the boundary complex
  {
    auto cohom = reduced_cohomology(boundary_complex(f));
    bool top_ok = false;
    for (const auto& [deg, dim] : cohom)
      if (deg == static_cast<int>(n) - 1) top_ok = dim == 1;
    if (!top_ok) return fail("NotComplete", "boundary complex is not a homology sphere");
  }
  // (d) exact point location for seeded sample points
  {
    std::mt19937 rng(0);
    std::uniform_int_distribution<int> num(-999, 999);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
      RatVec p(n);
      for (auto& x : p) x = rat(num(rng), den(rng));
      bool located = false;
      for (const auto& cone : f.max_cones)
        if (cone_contains(f, cone, p)) {
          located = true;
          break;
        }
      if (!located) return fail("NotComplete", "sample point outside every maximal cone");
    }
  }
  // (e) projectivity
  try {
    find_ample(f);
  } catch (const QtError& e) {
    return fail("NotProjective", e.what());
  }
  return {true, "", ""};
}

}  // namespace qtoric
