#include <doctest.h>

#include <vector>

#include "dhm/gls.hpp"
#include "dhm/polytope.hpp"
#include "dhm/toric.hpp"
#include "oracles.hpp"

using namespace dhm;
using dhm::testing::q;
using dhm::testing::rv;

namespace {

std::vector<FixedPointDatum> cp2() {
  return {
      {rv({0, 0}), {{1, 0}, {0, 1}}},
      {rv({1, 0}), {{-1, 0}, {-1, 1}}},
      {rv({0, 1}), {{0, -1}, {1, -1}}},
  };
}

std::vector<FixedPointDatum> square() { return vertex_data(HPolytope::unit_cube(2)).vertex_data; }

}  // namespace

TEST_CASE("assemble") {
  CHECK(assemble({}, PolarizingVector{1, 2}).summands.empty());

  const auto m = assemble(cp2(), PolarizingVector{1, 2});
  REQUIRE(m.summands.size() == 3);
  CHECK(m.torus_dim == 2);
  CHECK(m.summands[0].sign() == 1);
  CHECK(m.summands[1].sign() == -1);
  CHECK(m.summands[2].sign() == 1);

  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<Weight> basis;
    for (std::size_t i = 0; i < d; ++i) {
      IntegerVector e(d);
      e[i] = 1;
      basis.push_back(e);
    }
    IntegerVector eta(d);
    for (std::size_t i = 0; i < d; ++i) eta[i] = static_cast<long>(i + 1);
    const std::vector<FixedPointDatum> one{{RationalVector(d), basis}};
    const auto orthant = assemble(one, PolarizingVector(eta));
    REQUIRE(orthant.summands.size() == 1);
    RationalVector inside(d);
    for (std::size_t i = 0; i < d; ++i) inside[i] = make_rational(1, static_cast<long>(i + 2));
    CHECK(eval_density(orthant, inside) == DensityValue{1, true});
  }

  auto bad = cp2();
  bad[2].weights = {{1, -1}, {1, 1}};
  CHECK_THROWS_WITH_AS(assemble(bad, PolarizingVector{1, -1}), doctest::Contains("fixed point #"), Error);
}

TEST_CASE("eval_density on the triangle") {
  const auto m = assemble(cp2(), PolarizingVector{1, 2});
  CHECK(eval_density(m, rv({q(1, 4), q(1, 4)})) == DensityValue{1, true});
  CHECK(eval_density(m, rv({2, q(1, 2)})) == DensityValue{0, true});
  CHECK(eval_density(m, rv({-1, 5})) == DensityValue{0, true});
  CHECK_FALSE(eval_density(m, rv({0, 0})).regular);
  CHECK(eval_density(DHMeasure{{}, 2}, rv({1, 1})) == DensityValue{0, true});
}

TEST_CASE("group_by_eta") {
  const auto data = cp2();
  const auto m = assemble(data, PolarizingVector{1, 2});
  const auto groups = group_by_eta(m, data, PolarizingVector{1, 1});
  REQUIRE(groups.size() == 2);
  CHECK(groups[0] == ComponentGroup{0, {0}});
  CHECK(groups[1] == ComponentGroup{1, {1, 2}});

  const auto singles = group_by_eta(m, data, PolarizingVector{1, 3});
  CHECK(singles.size() == 3);
  for (const auto& g : singles) CHECK(g.members.size() == 1);

  const auto pair = m.subset(groups[1].members);
  CHECK(eval_density(pair, rv({q(1, 2), q(3, 4)})) == DensityValue{-1, true});
}

TEST_CASE("grouped measures sum to the total") {
  const auto data = cp2();
  const auto m = assemble(data, PolarizingVector{1, 2});
  const auto groups = group_by_eta(m, data, PolarizingVector{1, 1});
  dhm::testing::Gen gen(11);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const RationalVector b = gen.rational_vector(2, -2, 3);
    const auto total = eval_density(m, b);
    if (!total.regular) continue;
    Rational sum = 0;
    bool regular = true;
    for (const auto& g : groups) {
      const auto part = eval_density(m.subset(g.members), b);
      regular = regular && part.regular;
      sum += part.value;
    }
    REQUIRE(regular);
    CHECK(sum == total.value);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("eta independence") {
  dhm::testing::Gen gen(12);
  for (const auto& data : {cp2(), square()}) {
    const auto a = assemble(data, PolarizingVector{1, 2});
    const auto b = assemble(data, PolarizingVector{3, 1});
    const auto c = assemble(data, PolarizingVector{-2, 5});
    for (int i = 0; i < 300; ++i) {
      const RationalVector x = gen.rational_vector(2, -2, 3);
      const auto va = eval_density(a, x), vb = eval_density(b, x), vc = eval_density(c, x);
      if (va.regular && vb.regular) CHECK(va.value == vb.value);
      if (va.regular && vc.regular) CHECK(va.value == vc.value);
    }
  }
}

TEST_CASE("support_report") {
  const auto m = assemble(cp2(), PolarizingVector{1, 2});
  const auto inside = support_report(m, rv({q(1, 4), q(1, 4)}));
  REQUIRE(inside.size() == 3);
  CHECK(inside[0].in_support);
  CHECK_FALSE(inside[1].in_support);
  CHECK_FALSE(inside[2].in_support);

  const auto below = support_report(m, rv({-1, -1}));
  for (const auto& e : below) {
    CHECK_FALSE(e.in_support);
    CHECK_FALSE(e.pairing_ok);
  }

  const auto apex = support_report(m, rv({1, 0}));
  CHECK(apex[1].wall);
}

TEST_CASE("flipping a summand breaks the identity") {
  const auto m = assemble(cp2(), PolarizingVector{1, 2});
  CHECK(eval_density(m.with_flipped_sign(0), rv({q(1, 4), q(1, 4)})).value == -1);
  CHECK(m.with_flipped_sign(1).summands[1].sign() == 1);
}
