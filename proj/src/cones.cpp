#include "qtoric/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace qtoric {

namespace {

Rat eval(const IntVec& normal, const RatVec& point) {
  Rat s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rat(normal[i]) * point[i];
  return s;
}

// sign normalization for hyperplanes: first nonzero entry positive
IntVec hyperplane_normal(const IntVec& v) {
  for (const Int& x : v) {
    if (x > 0) return v;
    if (x < 0) {
      IntVec w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
      return w;
    }
  }
  return v;
}

struct LiftedRow {
  RatVec coeffs;
  bool strict;
};

// any nonzero kernel vector of a matrix with nullity >= 1
bool kernel_vector(const RatMatrix& m0, RatVec& out) {
  RatMatrix m = m0;
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return false;
  out.assign(cols, Rat(0));
  out[free_col] = 1;
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
    out[pivot_of_row[i]] = -m(i, free_col) / m(i, pivot_of_row[i]);
  return true;
}

}  // namespace

POCone empty_cone(std::size_t dim) {
  POCone c;
  c.dim = dim;
  IntVec e(dim, 0);
  e[0] = 1;
  c.add(e, true);
  IntVec ne(dim, 0);
  ne[0] = -1;
  c.add(ne, true);
  return c;
}

POCone orthant(std::size_t dim, std::uint32_t alpha) {
  POCone c;
  c.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    if (alpha & (1u << i)) {
      e[i] = -1;  // d_i < 0
      c.add(std::move(e), true);
    } else {
      e[i] = 1;  // d_i >= 0
      c.add(std::move(e), false);
    }
  }
  return c;
}

StrictSystem to_system(const POCone& c) {
  StrictSystem sys;
  sys.dim = c.dim;
  for (const auto& row : c.constraints) sys.add(to_rat(row.normal), Rat(0), row.strict);
  return sys;
}

bool member(const RatVec& point, const POCone& c) {
  for (const auto& row : c.constraints) {
    Rat v = eval(row.normal, point);
    if (row.strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

bool member(const RatVec& point, const ConeUnion& u) {
  for (const POCone& c : u)
    if (member(point, c)) return true;
  return false;
}

POCone canonicalize(const POCone& c) {
  std::map<IntVec, bool> rows;  // normal -> strict (stricter wins)
  for (const auto& row : c.constraints) {
    IntVec n = primitive(to_rat(row.normal));
    bool zero = true;
    for (const Int& x : n) zero &= x == 0;
    if (zero) {
      if (row.strict) return empty_cone(c.dim);  // 0 > 0
      continue;
    }
    auto [it, inserted] = rows.emplace(std::move(n), row.strict);
    if (!inserted) it->second = it->second || row.strict;
  }
  POCone out;
  out.dim = c.dim;
  for (const auto& [n, strict] : rows) out.add(n, strict);
  return out;
}

namespace {

// violation system of one constraint: the exact complement half-space
StrictConstraint violation(const ConeConstraint& row) {
  RatVec neg(row.normal.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -Rat(row.normal[i]);
  // not(n.x > 0) is n.x <= 0; not(n.x >= 0) is n.x < 0
  return {std::move(neg), Rat(0), !row.strict};
}

}  // namespace

POCone prune(const POCone& c0) {
  POCone c = canonicalize(c0);
  for (std::size_t i = 0; i < c.constraints.size();) {
    StrictSystem sys;
    sys.dim = c.dim;
    for (std::size_t j = 0; j < c.constraints.size(); ++j)
      if (j != i) sys.add(to_rat(c.constraints[j].normal), Rat(0), c.constraints[j].strict);
    StrictConstraint v = violation(c.constraints[i]);
    sys.rows.push_back(v);
    if (!lp_feasible(sys).feasible)
      c.constraints.erase(c.constraints.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return c;
}

POCone project(const POCone& c, const RatMatrix& map) {
  std::size_t target = map.rows(), source = map.cols();
  if (c.dim != source) throw QtError("BadCone", "projection dimension mismatch");
  // variables: y (target) then x (source)
  std::size_t total = target + source;
  std::vector<LiftedRow> ineqs;
  for (const auto& row : c.constraints) {
    LiftedRow lr{RatVec(total, Rat(0)), row.strict};
    for (std::size_t j = 0; j < source; ++j) lr.coeffs[target + j] = Rat(row.normal[j]);
    ineqs.push_back(std::move(lr));
  }
  // equalities map*x - y = 0; eliminate one x variable per equality
  std::vector<RatVec> eqs;
  for (std::size_t r = 0; r < target; ++r) {
    RatVec e(total, Rat(0));
    e[r] = -1;
    for (std::size_t j = 0; j < source; ++j) e[target + j] = map(r, j);
    eqs.push_back(std::move(e));
  }
  std::vector<bool> x_alive(source, true);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    // pivot on an x column
    std::size_t piv = total;
    for (std::size_t j = 0; j < source; ++j)
      if (x_alive[j] && eqs[r][target + j] != 0) {
        piv = target + j;
        break;
      }
    if (piv == total) throw QtError("BadCone", "projection map is not surjective");
    x_alive[piv - target] = false;
    auto substitute = [&](RatVec& row) {
      if (row[piv] == 0) return;
      Rat f = row[piv] / eqs[r][piv];
      for (std::size_t j = 0; j < total; ++j) row[j] -= f * eqs[r][j];
    };
    for (std::size_t k = r + 1; k < eqs.size(); ++k) substitute(eqs[k]);
    for (auto& lr : ineqs) substitute(lr.coeffs);
  }
  // Fourier-Motzkin on the remaining x variables
  for (std::size_t j = 0; j < source; ++j) {
    if (!x_alive[j]) continue;
    std::size_t v = target + j;
    std::vector<LiftedRow> pos, neg, zero;
    for (auto& lr : ineqs) {
      int s = sgn(lr.coeffs[v]);
      if (s > 0)
        pos.push_back(std::move(lr));
      else if (s < 0)
        neg.push_back(std::move(lr));
      else
        zero.push_back(std::move(lr));
    }
    ineqs = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LiftedRow combo{RatVec(total, Rat(0)), p.strict || n.strict};
        Rat a = p.coeffs[v], b = -n.coeffs[v];
        for (std::size_t k = 0; k < total; ++k) combo.coeffs[k] = b * p.coeffs[k] + a * n.coeffs[k];
        ineqs.push_back(std::move(combo));
      }
    // prune after each round to keep the row count in check
    POCone round;
    round.dim = total;
    for (const auto& lr : ineqs) round.add(primitive(lr.coeffs), lr.strict);
    round = prune(round);
    ineqs.clear();
    for (const auto& row : round.constraints) {
      LiftedRow lr{RatVec(total, Rat(0)), row.strict};
      for (std::size_t k = 0; k < total; ++k) lr.coeffs[k] = Rat(row.normal[k]);
      ineqs.push_back(std::move(lr));
    }
  }
  POCone out;
  out.dim = target;
  for (const auto& lr : ineqs) {
    RatVec head(lr.coeffs.begin(), lr.coeffs.begin() + static_cast<long>(target));
    out.add(primitive(head), lr.strict);
  }
  return prune(out);
}

POCone closure(const POCone& c) {
  POCone out;
  out.dim = c.dim;
  for (const auto& row : c.constraints) out.add(row.normal, false);
  return prune(out);
}

POCone interior(const POCone& c) {
  POCone strict;
  strict.dim = c.dim;
  for (const auto& row : canonicalize(c).constraints) strict.add(row.normal, true);
  if (!lp_feasible(to_system(strict)).feasible) return empty_cone(c.dim);
  return prune(strict);
}

std::vector<ArrangementCell> arrangement_cells(const std::vector<IntVec>& normals,
                                               std::size_t dim) {
  std::vector<ArrangementCell> out;
  std::vector<int> signs;
  StrictSystem sys;
  sys.dim = dim;

  auto push_sign = [&](const IntVec& n, int s) {
    RatVec pos = to_rat(n);
    RatVec neg(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) neg[i] = -pos[i];
    if (s > 0)
      sys.add(pos, Rat(0), true);
    else if (s < 0)
      sys.add(neg, Rat(0), true);
    else {
      sys.add(pos, Rat(0), false);
      sys.add(neg, Rat(0), false);
    }
  };
  auto pop_sign = [&](int s) { sys.rows.resize(sys.rows.size() - (s == 0 ? 2 : 1)); };

  std::function<void(std::size_t)> dfs = [&](std::size_t h) {
    Feasibility feas = lp_feasible(sys);
    if (!feas.feasible) return;
    if (h == normals.size()) {
      ArrangementCell cell;
      cell.signs = signs;
      cell.witness = feas.witness.empty() ? RatVec(dim, Rat(0)) : feas.witness;
      cell.cone.dim = dim;
      for (std::size_t k = 0; k < normals.size(); ++k) {
        IntVec n = normals[k];
        IntVec neg(n.size());
        for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
        if (signs[k] > 0)
          cell.cone.add(n, true);
        else if (signs[k] < 0)
          cell.cone.add(neg, true);
        else {
          cell.cone.add(n, false);
          cell.cone.add(neg, false);
        }
      }
      out.push_back(std::move(cell));
      return;
    }
    for (int s : {-1, 0, 1}) {
      signs.push_back(s);
      push_sign(normals[h], s);
      dfs(h + 1);
      pop_sign(s);
      signs.pop_back();
    }
  };
  dfs(0);
  return out;
}

std::vector<IntVec> hyperplanes_of(const ConeUnion& u) {
  std::set<IntVec> set;
  for (const POCone& c : u)
    for (const auto& row : c.constraints) set.insert(hyperplane_normal(primitive(to_rat(row.normal))));
  return {set.begin(), set.end()};
}

ConeUnion complement(const ConeUnion& u) {
  if (u.empty()) {
    // complement of the empty union is the whole space; dimension unknown
    throw QtError("BadCone", "complement of an empty union needs a dimension");
  }
  std::size_t dim = u.front().dim;
  ConeUnion out;
  for (const auto& cell : arrangement_cells(hyperplanes_of(u), dim))
    if (!member(cell.witness, u)) out.push_back(cell.cone);
  return out;
}

bool union_equal(const ConeUnion& a, const ConeUnion& b) {
  std::set<IntVec> set;
  for (const ConeUnion* u : {&a, &b})
    for (const POCone& c : *u)
      for (const auto& row : c.constraints)
        set.insert(hyperplane_normal(primitive(to_rat(row.normal))));
  std::size_t dim = a.empty() ? (b.empty() ? 0 : b.front().dim) : a.front().dim;
  if (dim == 0) return true;
  std::vector<IntVec> normals(set.begin(), set.end());
  for (const auto& cell : arrangement_cells(normals, dim))
    if (member(cell.witness, a) != member(cell.witness, b)) return false;
  return true;
}

StrictSystem to_system(const Polyhedron& p) {
  StrictSystem sys;
  sys.dim = p.dim;
  for (const auto& row : p.rows) sys.add(row.normal, row.offset, row.strict);
  return sys;
}

bool is_bounded(const Polyhedron& p) {
  StrictSystem recession;
  recession.dim = p.dim;
  for (const auto& row : p.rows) recession.add(row.normal, Rat(0), false);
  for (std::size_t j = 0; j < p.dim; ++j)
    for (int s : {1, -1}) {
      StrictSystem sys = recession;
      RatVec e(p.dim, Rat(0));
      e[j] = s;
      sys.add(std::move(e), Rat(-1), false);  // s*x_j >= 1
      if (lp_feasible(sys).feasible) return false;
    }
  return true;
}

std::vector<RatVec> vertices(const Polyhedron& p) {
  if (!is_bounded(p)) throw QtError("Unbounded", "polyhedron has a nontrivial recession cone");
  std::size_t n = p.dim, m = p.rows.size();
  std::set<RatVec> verts;
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      RatMatrix a(n, n);
      RatVec b(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < n; ++j) a(r, j) = p.rows[idx[r]].normal[j];
        b[r] = -p.rows[idx[r]].offset;
      }
      if (rational_rank(a) != n) return;
      RatVec x;
      if (!solve_linear(a, b, x)) return;
      for (const auto& row : p.rows)
        if (dot(row.normal, x) + row.offset < 0) return;
      verts.insert(std::move(x));
      return;
    }
    for (std::size_t i = start; i + (n - pos) <= m; ++i) {
      idx[pos] = i;
      choose(pos + 1, i + 1);
    }
  };
  if (m >= n) choose(0, 0);
  return {verts.begin(), verts.end()};
}

namespace {

Rat simplex_volume(const std::vector<RatVec>& pts, const std::vector<std::size_t>& ix) {
  std::size_t d = ix.size() - 1;
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = pts[ix[i + 1]][j] - pts[ix[0]][j];
  // determinant by elimination
  Rat det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m(piv, c) == 0) ++piv;
    if (piv == d) return Rat(0);
    if (piv != c) {
      for (std::size_t j = 0; j < d; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < d; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < d; ++j) m(i, j) -= f * m(c, j);
    }
  }
  Rat fact = 1;
  for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<long>(k);
  return abs(det) / fact;
}

std::size_t affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  RatMatrix d(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j) d(i - 1, j) = pts[i][j] - pts[0][j];
  return rational_rank(d);
}

// triangulation of the convex hull of a full-dimensional point set in R^d
void hull_simplices(const std::vector<RatVec>& pts, std::size_t d,
                    std::vector<std::vector<std::size_t>>& out) {
  std::size_t m = pts.size();
  if (m == d + 1) {
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    out.push_back(std::move(all));
    return;
  }
  std::size_t apex = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (pts[i] < pts[apex]) apex = i;
  // enumerate supporting hyperplanes through d-subsets
  std::set<std::vector<std::size_t>> facets;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
    if (pos == d) {
      // hyperplane through the chosen points
      RatMatrix diff(d - 1, d);
      for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) diff(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
      if (d > 1 && rational_rank(diff) != d - 1) return;
      RatVec h;
      if (d == 1)
        h = {Rat(1)};
      else if (!kernel_vector(diff, h))
        return;
      Rat c = -dot(h, pts[idx[0]]);
      bool any_pos = false, any_neg = false;
      std::vector<std::size_t> on_plane;
      for (std::size_t i = 0; i < m; ++i) {
        Rat v = dot(h, pts[i]) + c;
        if (v > 0)
          any_pos = true;
        else if (v < 0)
          any_neg = true;
        else
          on_plane.push_back(i);
      }
      if (any_pos && any_neg) return;
      bool apex_on = std::binary_search(on_plane.begin(), on_plane.end(), apex);
      if (apex_on) return;
      facets.insert(on_plane);
      return;
    }
    for (std::size_t i = start; i + (d - pos) <= m; ++i) {
      idx[pos] = i;
      choose(pos + 1, i + 1);
    }
  };
  choose(0, 0);
  for (const auto& facet : facets) {
    if (d == 1) {
      // facet is a single point; simplex = segment to apex
      out.push_back({apex, facet[0]});
      continue;
    }
    // coordinates of the facet points in an affine basis of their hyperplane
    std::vector<RatVec> fpts;
    for (std::size_t i : facet) fpts.push_back(pts[i]);
    // basis: d-1 independent differences
    std::vector<RatVec> basis;
    for (std::size_t i = 1; i < fpts.size() && basis.size() < d - 1; ++i) {
      RatVec diff(d);
      for (std::size_t j = 0; j < d; ++j) diff[j] = fpts[i][j] - fpts[0][j];
      std::vector<RatVec> cand = basis;
      cand.push_back(diff);
      RatMatrix test(cand.size(), d);
      for (std::size_t r = 0; r < cand.size(); ++r)
        for (std::size_t j = 0; j < d; ++j) test(r, j) = cand[r][j];
      if (rational_rank(test) == cand.size()) basis.push_back(diff);
    }
    RatMatrix bmat(d, basis.size());
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t cidx = 0; cidx < basis.size(); ++cidx) bmat(r, cidx) = basis[cidx][r];
    std::vector<RatVec> coords;
    for (const RatVec& q : fpts) {
      RatVec rhs(d);
      for (std::size_t j = 0; j < d; ++j) rhs[j] = q[j] - fpts[0][j];
      RatVec sol;
      if (!solve_linear(bmat, rhs, sol)) throw QtError("BadCone", "facet coordinate failure");
      coords.push_back(sol);
    }
    std::vector<std::vector<std::size_t>> sub;
    hull_simplices(coords, d - 1, sub);
    for (const auto& s : sub) {
      std::vector<std::size_t> simplex{apex};
      for (std::size_t i : s) simplex.push_back(facet[i]);
      out.push_back(std::move(simplex));
    }
  }
}

}  // namespace

Rat hull_volume(const std::vector<RatVec>& points, std::size_t dim) {
  std::set<RatVec> uniq(points.begin(), points.end());
  std::vector<RatVec> pts(uniq.begin(), uniq.end());
  if (pts.size() < dim + 1) return Rat(0);
  if (affine_rank(pts) < dim) return Rat(0);
  std::vector<std::vector<std::size_t>> simplices;
  hull_simplices(pts, dim, simplices);
  Rat total = 0;
  for (const auto& s : simplices) total += simplex_volume(pts, s);
  return total;
}

Rat volume(const Polyhedron& p) { return hull_volume(vertices(p), p.dim); }

}  // namespace qtoric
