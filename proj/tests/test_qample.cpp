#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qtoric/qample.hpp"

using namespace qtoric;
using namespace qtoric::fixtures;

namespace {

// Internal class coordinates of x*H + y*E on blowup_pn.
RatVec from_he(const Fan& f, const ClassLattice& cl, const Rat& x, const Rat& y) {
  std::size_t nrays = f.num_rays();
  TorusDivisor h(nrays, 0), e(nrays, 0);
  h[nrays - 2] = 1;
  e[nrays - 1] = 1;
  RatVec hc = class_of(cl, h), ec = class_of(cl, e);
  return {x * hc[0] + y * ec[0], x * hc[1] + y * ec[1]};
}

// Cone given by (H, E)-coordinate constraints, rewritten in the internal
// basis: if he = t * internal then n_he . he = (t^T n_he) . internal.
POCone he_cone(const RatMatrix& t, std::initializer_list<std::pair<RatVec, bool>> rows) {
  POCone c;
  c.dim = 2;
  for (const auto& [n, s] : rows) {
    RatVec internal = t.transpose().apply(n);
    c.add(primitive(internal), s);
  }
  return c;
}

}  // namespace

TEST_CASE("obstruction region of the blowup of P2") {
  Fan f = blowup_pn(2);
  RatMatrix t = he_basis(f, class_lattice(f));
  SUBCASE("q = 1: one image, the antinef wedge") {
    ObstructionRegion r = obstruction_region(f, 1);
    REQUIRE(r.closed_images.size() == 1);
    CHECK(r.alphas == std::vector<std::pair<int, std::uint32_t>>{{1, 0b1111}});
    CHECK(union_equal(r.closed_images,
                      {he_cone(t, {{{Rat(-1), Rat(0)}, false}, {{Rat(-1), Rat(-1)}, false}})}));
  }
  SUBCASE("q = 0: all three orthant images") {
    ObstructionRegion r = obstruction_region(f, 0);
    REQUIRE(r.closed_images.size() == 3);
    ConeUnion expected = {
        he_cone(t, {{{Rat(0), Rat(1)}, false}, {{Rat(1), Rat(1)}, false}}),
        he_cone(t, {{{Rat(0), Rat(-1)}, false}, {{Rat(-1), Rat(-1)}, false}}),
        he_cone(t, {{{Rat(-1), Rat(0)}, false}, {{Rat(-1), Rat(-1)}, false}})};
    for (const POCone& img : r.closed_images) {
      bool matched = false;
      for (const POCone& exp : expected) matched |= union_equal({img}, {exp});
      CHECK(matched);
    }
  }
  SUBCASE("q = n: empty region") {
    CHECK(obstruction_region(f, 2).closed_images.empty());
    CHECK(obstruction_region(f, 2).alphas.empty());
  }
}

TEST_CASE("membership on the blowup of P3") {
  Fan f = blowup_pn(3);
  ClassLattice cl = class_lattice(f);
  CHECK(is_q_ample(f, from_he(f, cl, 2, -1), 0));
  CHECK(is_q_ample(f, from_he(f, cl, 1, -2), 1));
  CHECK_FALSE(is_q_ample(f, from_he(f, cl, 1, -2), 0));
  CHECK_FALSE(is_q_ample(f, from_he(f, cl, 0, -1), 2));
  CHECK_THROWS_AS(is_q_ample(f, from_he(f, cl, 1, 0), 4), QtError);
}

TEST_CASE("q-ample cones of the blowup of P3") {
  Fan f = blowup_pn(3);
  RatMatrix t = he_basis(f, class_lattice(f));
  SUBCASE("q = 0: interior of the span of H and H-E") {
    QAmpleCone amp = q_ample_cone(f, 0);
    ConeUnion expected = {he_cone(t, {{{Rat(0), Rat(-1)}, true}, {{Rat(1), Rat(1)}, true}})};
    CHECK(union_equal(amp.cells, expected));
  }
  SUBCASE("q = 1: open quadrant x > 0, y < 0") {
    QAmpleCone amp = q_ample_cone(f, 1);
    ConeUnion expected = {he_cone(t, {{{Rat(1), Rat(0)}, true}, {{Rat(0), Rat(-1)}, true}})};
    CHECK(union_equal(amp.cells, expected));
  }
  SUBCASE("q = 2: complement of the negated effective wedge") {
    QAmpleCone amp = q_ample_cone(f, 2);
    ConeUnion expected =
        complement({he_cone(t, {{{Rat(-1), Rat(0)}, false}, {{Rat(-1), Rat(-1)}, false}})});
    CHECK(union_equal(amp.cells, expected));
  }
  SUBCASE("q = n: everything") {
    QAmpleCone amp = q_ample_cone(f, 3);
    REQUIRE(amp.cells.size() == 1);
    CHECK(amp.cells[0].constraints.empty());
  }
}

TEST_CASE("ampleness levels on the blowup of P3") {
  Fan f = blowup_pn(3);
  ClassLattice cl = class_lattice(f);
  CHECK(ampleness_level(f, from_he(f, cl, 2, -1)) == 0);
  CHECK(ampleness_level(f, from_he(f, cl, 0, 1)) == 2);
  CHECK(ampleness_level(f, from_he(f, cl, -1, 0)) == 3);
}

TEST_CASE("effective cones") {
  SUBCASE("blowups: spanned by E and H-E") {
    for (std::size_t n : {2u, 3u}) {
      Fan f = blowup_pn(n);
      RatMatrix t = he_basis(f, class_lattice(f));
      POCone eff = effective_cone(f);
      CHECK(union_equal({eff},
                        {he_cone(t, {{{Rat(1), Rat(0)}, false}, {{Rat(1), Rat(1)}, false}})}));
    }
  }
  SUBCASE("P2: a single ray") {
    Fan f = p2();
    ClassLattice cl = class_lattice(f);
    POCone eff = effective_cone(f);
    RatVec pos = class_of(cl, TorusDivisor{1, 0, 0});
    RatVec neg = {-pos[0]};
    CHECK(member(pos, eff));
    CHECK_FALSE(member(neg, eff));
  }
  SUBCASE("P1xP1: classes of all four divisors, none of their negatives") {
    Fan f = p1xp1();
    ClassLattice cl = class_lattice(f);
    POCone eff = effective_cone(f);
    for (std::size_t i = 0; i < 4; ++i) {
      TorusDivisor d(4, 0);
      d[i] = 1;
      RatVec c = class_of(cl, d);
      CHECK(member(c, eff));
      RatVec nc = {-c[0], -c[1]};
      CHECK_FALSE(member(nc, eff));
    }
  }
}

TEST_CASE("nesting: q-ample implies (q+1)-ample") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  for (const Fan& f : {p2(), blowup_pn(2), blowup_pn(3), p1xp1(), p112()}) {
    std::size_t rho = class_lattice(f).rank;
    for (int trial = 0; trial < 200; ++trial) {
      RatVec c(rho);
      for (auto& e : c) e = rat(num(rng), den(rng));
      bool prev = is_q_ample(f, c, 0);
      for (std::size_t q = 1; q <= f.dim; ++q) {
        bool cur = is_q_ample(f, c, q);
        if (prev) CHECK(cur);
        prev = cur;
      }
      CHECK(prev);  // everything is n-ample
    }
  }
}

TEST_CASE("openness: members survive small coordinate perturbations") {
  for (const Fan& f : {p2(), blowup_pn(3)}) {
    std::size_t rho = class_lattice(f).rank;
    for (std::size_t q = 0; q <= f.dim; ++q) {
      QAmpleCone amp = q_ample_cone(f, q);
      for (const POCone& cell : amp.cells) {
        Feasibility feas = lp_feasible(to_system(cell));
        REQUIRE(feas.feasible);
        for (std::size_t j = 0; j < rho; ++j) {
          for (int s : {-1, 1}) {
            RatVec p = feas.witness;
            p[j] += rat(s, 1000);
            CHECK(is_q_ample(f, p, q));
          }
        }
      }
    }
  }
}

TEST_CASE("consistency: cell witnesses agree, obstruction witnesses disagree") {
  for (const Fan& f : {blowup_pn(2), blowup_pn(3), p112()}) {
    for (std::size_t q = 0; q + 1 <= f.dim; ++q) {
      QAmpleCone amp = q_ample_cone(f, q);
      for (const POCone& cell : amp.cells) {
        Feasibility feas = lp_feasible(to_system(cell));
        REQUIRE(feas.feasible);
        CHECK(is_q_ample(f, feas.witness, q));
      }
      ObstructionRegion region = obstruction_region(f, q);
      for (const POCone& img : region.closed_images) {
        Feasibility feas = lp_feasible(to_system(img));
        REQUIRE(feas.feasible);
        CHECK_FALSE(is_q_ample(f, feas.witness, q));
      }
    }
  }
}

TEST_CASE("(n-1)-ample cone is the complement of minus the effective cone") {
  for (const Fan& f : {p2(), blowup_pn(2), blowup_pn(3), p1xp1(), p112()}) {
    QAmpleCone amp = q_ample_cone(f, f.dim - 1);
    POCone eff = effective_cone(f);
    POCone neg = eff;
    for (auto& row : neg.constraints)
      for (auto& e : row.normal) e = -e;
    CHECK(union_equal(amp.cells, complement({neg})));
  }
}

TEST_CASE("0-ample matches ampleness of an integral multiple") {
  for (const Fan& f : {p2(), blowup_pn(2), p1xp1(), p112()}) {
    ClassLattice cl = class_lattice(f);
    RatMatrix section = class_section(cl);
    std::vector<RatVec> samples;
    if (cl.rank == 1)
      for (int x = -3; x <= 3; ++x) samples.push_back({Rat(x)});
    else
      for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) samples.push_back({Rat(x), Rat(y)});
    for (const RatVec& c : samples) {
      bool zero = true;
      for (const Rat& e : c) zero &= e == 0;
      if (zero) continue;
      RatVec lift = section.apply(c);
      Int scale = 1;
      for (const Rat& e : lift) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
      TorusDivisor base(f.num_rays());
      for (std::size_t i = 0; i < lift.size(); ++i) {
        Rat v = lift[i] * scale;
        base[i] = v.get_num();
      }
      bool found = false, ample = false;
      for (int k = 1; k <= 6 && !found; ++k) {
        TorusDivisor d(f.num_rays());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = base[i] * k;
        if (!is_cartier(f, d).cartier) continue;
        found = true;
        ample = is_ample(f, d);
      }
      REQUIRE(found);
      CHECK(is_q_ample(f, c, 0) == ample);
    }
  }
}
