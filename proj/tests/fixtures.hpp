#pragma once

// Shared fan fixtures for the test suites.

#include <cstdlib>

#include "qtoric/fan.hpp"

namespace qtoric::fixtures {

inline Fan p2() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

// Blowup of P^n at a torus-fixed point: rays e_1..e_n, -(1..1), +(1..1).
inline Fan blowup_pn(std::size_t n) {
  Fan f;
  f.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(IntVec(n, -1));
  f.rays.push_back(IntVec(n, 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> base;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) base.push_back(i);
    auto with_far = base, with_exc = base;
    with_far.push_back(n);
    with_exc.push_back(n + 1);
    f.max_cones.push_back(with_far);
    f.max_cones.push_back(with_exc);
  }
  return f;
}

inline Fan p1xp1() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return f;
}

inline Fan p112() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -2}};
  f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

// Change of basis mapping the Smith-basis class coordinates of blowup_pn
// onto (H, E): H = class of E_{n+1}, E = class of E_{n+2}.
inline RatMatrix he_basis(const Fan& f, const ClassLattice& cl) {
  std::size_t nrays = f.num_rays();
  RatVec h_col = class_of(cl, TorusDivisor([&] {
                            IntVec d(nrays, 0);
                            d[nrays - 2] = 1;
                            return d;
                          }()));
  RatVec e_col = class_of(cl, TorusDivisor([&] {
                            IntVec d(nrays, 0);
                            d[nrays - 1] = 1;
                            return d;
                          }()));
  // invert [h_col e_col]
  Rat det = h_col[0] * e_col[1] - h_col[1] * e_col[0];
  if (det == 0) std::abort();
  RatMatrix t(2, 2);
  t(0, 0) = e_col[1] / det;
  t(0, 1) = -e_col[0] / det;
  t(1, 0) = -h_col[1] / det;
  t(1, 1) = h_col[0] / det;
  return t;
}

inline RatVec to_he(const RatMatrix& t, const RatVec& c) { return t.apply(c); }

}  // namespace qtoric::fixtures
