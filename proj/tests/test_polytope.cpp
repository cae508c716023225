#include <doctest.h>

#include <cmath>
#include <vector>

#include "dhm/error.hpp"
#include "dhm/polytope.hpp"
#include "oracles.hpp"

using namespace dhm;
using dhm::testing::q;
using dhm::testing::rv;

namespace {

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

HPolytope triangle() { return HPolytope::standard_simplex(2); }

// Random bounded polygon: a box cut by a few random half-planes through points
// of the box, so it stays nonempty.
HPolytope random_polygon(dhm::testing::Gen& gen) {
  std::vector<IntegerVector> rows{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<Rational> offs{2, 2, 2, 2};
  const int cuts = static_cast<int>(gen.integer(0, 4));
  for (int i = 0; i < cuts; ++i) {
    const IntegerVector n = gen.nonzero_vector(2, -3, 3);
    const RationalVector through = gen.rational_vector(2, -1, 1);
    // n·x >= n·through - slack, slack >= 0 keeps the origin-ish region
    rows.push_back(n);
    offs.push_back(-dot(n, through) + gen.rational(0, 2));
  }
  return HPolytope(IntegerMatrix::from_rows(2, rows), RationalVector(offs));
}

HPolytope translate(const HPolytope& p, const RationalVector& t) {
  RationalVector o = p.offsets;
  for (std::size_t j = 0; j < p.num_constraints(); ++j) o[j] -= dot(p.normals.row(j), t);
  return HPolytope(p.normals, o);
}

HPolytope scale(const HPolytope& p, const Rational& s) { return HPolytope(p.normals, s * p.offsets); }

HPolytope with_constraint(const HPolytope& p, const IntegerVector& n, const Rational& off) {
  std::vector<IntegerVector> rows;
  for (std::size_t j = 0; j < p.num_constraints(); ++j) rows.push_back(p.normals.row(j));
  rows.push_back(n);
  std::vector<Rational> offs(p.offsets.begin(), p.offsets.end());
  offs.push_back(off);
  return HPolytope(IntegerMatrix::from_rows(p.ambient_dim(), rows), RationalVector(offs));
}

}  // namespace

TEST_CASE("contains on the unit square") {
  const auto sq = HPolytope::unit_cube(2);
  CHECK(contains(sq, rv({q(1, 2), q(1, 2)})) == Location::inside);
  CHECK(contains(sq, rv({0, q(1, 2)})) == Location::boundary);
  CHECK(contains(sq, rv({2, 0})) == Location::outside);
}

TEST_CASE("vertices examples") {
  CHECK(vertices(HPolytope::unit_cube(2)).vertices ==
        std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0}), rv({1, 1})});
  CHECK(vertices(triangle()).vertices == std::vector<RationalVector>{rv({0, 0}), rv({0, 1}), rv({1, 0})});
  const HPolytope half_plane(IntegerMatrix(1, 2, {1, 0}), rv({0}));
  CHECK_FALSE(is_bounded(half_plane));
  CHECK_THROWS_WITH_AS(vertices(half_plane), "unbounded polytope", Error);
  const HPolytope strip(IntegerMatrix(2, 2, {1, 0, -1, 0}), rv({0, 1}));
  CHECK_THROWS_AS(vertices(strip), Error);
}

TEST_CASE("random polygons: vertices and area against shoelace") {
  dhm::testing::Gen gen(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const HPolytope p = random_polygon(gen);
    const auto vs = vertices(p).vertices;
    for (const auto& v : vs) {
      std::size_t tight = 0;
      for (std::size_t j = 0; j < p.num_constraints(); ++j) {
        const Rational s = p.slack(j, v);
        CHECK(s >= 0);
        if (s == 0) ++tight;
      }
      CHECK(tight >= 2);
      CHECK(contains(p, v) == Location::boundary);
    }
    CHECK(volume(p) == dhm::testing::polygon_area(vs));
  }
}

TEST_CASE("volume of cubes and simplices") {
  for (std::size_t d = 1; d <= 5; ++d) {
    CHECK(volume(HPolytope::unit_cube(d)) == 1);
    CHECK(volume(HPolytope::standard_simplex(d)) == 1 / factorial(d));
  }
  CHECK(volume(scale(triangle(), 3)) == q(9, 2));
  const HPolytope box = HPolytope::box(rv({-1, 0, q(1, 3)}), rv({1, q(1, 2), 1}));
  CHECK(volume(box) == 2 * q(1, 2) * q(2, 3));
}

TEST_CASE("volume: degenerate inputs") {
  const HPolytope flat(IntegerMatrix(4, 2, {1, 0, -1, 0, 0, 1, 0, -1}), rv({0, 1, 0, 0}));
  CHECK(volume(flat) == 0);
  const HPolytope empty(IntegerMatrix(2, 1, {1, -1}), rv({-2, 1}));  // x >= 2, x <= 1
  CHECK(volume(empty) == 0);
}

TEST_CASE("volume: translation, scaling and subdivision on random inputs") {
  dhm::testing::Gen gen(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(2, 3));
    // Random box cut by one random half-space; then split by another.
    const RationalVector lo = gen.rational_vector(d, -2, 0);
    RationalVector hi = lo;
    for (std::size_t i = 0; i < d; ++i) hi[i] += gen.rational(1, 2);
    HPolytope p = HPolytope::box(lo, hi);
    const RationalVector centre = make_rational(1, 2) * (lo + hi);
    p = with_constraint(p, gen.nonzero_vector(d, -2, 2), gen.rational(0, 1));  // passes near origin
    const Rational v = volume(p);
    CHECK(v >= 0);

    const RationalVector t = gen.rational_vector(d, -3, 3);
    CHECK(volume(translate(p, t)) == v);

    const Rational s = gen.rational(1, 3);
    if (s > 0) {
      Rational sd = 1;
      for (std::size_t i = 0; i < d; ++i) sd *= s;
      CHECK(volume(scale(p, s)) == sd * v);
    }

    const IntegerVector n = gen.nonzero_vector(d, -3, 3);
    const Rational c = dot(n, centre) + gen.rational(-1, 1);
    const HPolytope plus = with_constraint(p, n, -c);       // n·x >= c
    const HPolytope minus = with_constraint(p, -n, c);      // n·x <= c
    CHECK(volume(plus) + volume(minus) == v);
  }
}

TEST_CASE("affine_dimension") {
  CHECK(affine_dimension({}) == -1);
  CHECK(affine_dimension({rv({1, 1})}) == 0);
  CHECK(affine_dimension({rv({0, 0}), rv({1, 1}), rv({2, 2})}) == 1);
  CHECK(affine_dimension({rv({0, 0}), rv({1, 0}), rv({0, 1})}) == 2);
}

TEST_CASE("slice_fiber_volume examples") {
  CHECK(slice_fiber_volume(HPolytope::unit_cube(2), IntegerMatrix(1, 2, {1, 0}), rv({q(1, 2)})) == 1);
  CHECK(slice_fiber_volume(triangle(), IntegerMatrix(1, 2, {1, 2}), rv({q(1, 2)})) == q(1, 4));
  CHECK(slice_fiber_volume(triangle(), IntegerMatrix(1, 2, {1, 2}), rv({5})) == 0);
  CHECK(slice_fiber_volume(triangle(), IntegerMatrix(1, 2, {1, 2}), rv({-1})) == 0);
  CHECK_THROWS_AS(slice_fiber_volume(triangle(), IntegerMatrix(1, 2, {0, 0}), rv({0})), Error);
  // Full-rank square projection: a point fiber counts 1.
  CHECK(slice_fiber_volume(triangle(), IntegerMatrix::identity(2), rv({q(1, 4), q(1, 4)})) == 1);
}

TEST_CASE("slice volumes integrate to the volume") {
  // Σ_k step · slice(k·step) ≈ vol(p) · index(proj) for a 1-row projection.
  struct Case {
    HPolytope p;
    IntegerMatrix proj;
  };
  const std::vector<Case> cases{
      {triangle(), IntegerMatrix(1, 2, {1, 2})},
      {HPolytope::unit_cube(3), IntegerMatrix(1, 3, {1, 1, 2})},
      {HPolytope::standard_simplex(3), IntegerMatrix(1, 3, {2, 0, 2})},
      {scale(HPolytope::unit_cube(2), 2), IntegerMatrix(1, 2, {3, -1})},
  };
  for (const auto& c : cases) {
    const auto vs = vertices(c.p).vertices;
    Rational lo = dot(c.proj.row(0), vs.front()), hi = lo;
    for (const auto& v : vs) {
      const Rational y = dot(c.proj.row(0), v);
      if (y < lo) lo = y;
      if (y > hi) hi = y;
    }
    const Rational step = make_rational(1, 256);
    Rational sum = 0;
    for (Rational y = lo + step / 2; y < hi; y += step) sum += step * slice_fiber_volume(c.p, c.proj, rv({y}));
    // The kernel-lattice slice measure integrates to vol · covolume of the row.
    Integer row_gcd = 0;
    for (const auto& e : c.proj.row(0)) row_gcd = gcd(row_gcd, e);
    const double expected = Rational(volume(c.p) * row_gcd).get_d();
    CHECK(std::abs(sum.get_d() - expected) <= 0.01 * expected);
  }
}

TEST_CASE("fiber parametrization") {
  const auto f = fiber(triangle(), IntegerMatrix(1, 2, {1, 2}), rv({q(1, 2)}));
  REQUIRE(f);
  CHECK(f->kernel.cols() == 1);
  CHECK((IntegerMatrix(1, 2, {1, 2}) * f->kernel).is_zero());
  CHECK(IntegerMatrix(1, 2, {1, 2}) * f->base == rv({q(1, 2)}));
  CHECK(volume(f->polytope) == q(1, 4));
}
