#include <doctest.h>

#include "dhm/linalg.hpp"
#include "oracles.hpp"

using namespace dhm;
using dhm::testing::q;
using dhm::testing::rv;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("2/4") == q(1, 2));
  CHECK(parse_rational("-3") == q(-3));
  CHECK(parse_rational("6/9") == q(2, 3));
  CHECK(parse_rational("+5") == q(5));
  CHECK(to_string(q(-4, 6)) == "-2/3");
  CHECK(to_string(q(5, 1)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}

TEST_CASE("rank") {
  CHECK(rank(IntegerMatrix::identity(2)) == 2);
  CHECK(rank(IntegerMatrix(3, 2)) == 0);
  CHECK(rank(IntegerMatrix(2, 2, {1, 2, 2, 4})) == 1);  // columns (1,2),(2,4)
}

TEST_CASE("solve_particular") {
  SUBCASE("identity") {
    const auto x = solve_particular(IntegerMatrix::identity(2), rv({3, q(1, 2)}));
    REQUIRE(x);
    CHECK(*x == rv({3, q(1, 2)}));
  }
  SUBCASE("underdetermined system is satisfied exactly") {
    const IntegerMatrix a(2, 3, {1, 0, 1, 0, 1, 1});
    const auto x = solve_particular(a, rv({1, 1}));
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[2] == 1);
    CHECK((*x)[1] + (*x)[2] == 1);
  }
  SUBCASE("right-hand side off the column span") {
    CHECK_FALSE(solve_particular(IntegerMatrix(2, 1, {1, 2}), rv({1, 0})));
  }
}

TEST_CASE("kernel_lattice_basis examples") {
  SUBCASE("columns (1,0),(0,1),(1,1)") {
    const IntegerMatrix a(2, 3, {1, 0, 1, 0, 1, 1});
    const IntegerMatrix k = kernel_lattice_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    const IntegerVector v = k.column(0);
    CHECK((v == IntegerVector{-1, -1, 1} || v == IntegerVector{1, 1, -1}));
    // Primitive: gcd of maximal minors of the 3x1 basis is 1.
    CHECK(dhm::testing::gcd_of_maximal_minors(k.transpose()) == 1);
  }
  SUBCASE("injective map") { CHECK(kernel_lattice_basis(IntegerMatrix::identity(2)).cols() == 0); }
  SUBCASE("zero map") {
    const IntegerMatrix k = kernel_lattice_basis(IntegerMatrix(1, 2));
    CHECK(k.cols() == 2);
    CHECK(abs(determinant(k)) == 1);
  }
}

TEST_CASE("image_lattice_index examples") {
  CHECK(image_lattice_index(IntegerMatrix::identity(2)) == 1);
  CHECK(image_lattice_index(IntegerMatrix(1, 1, {2})) == 2);
  CHECK(image_lattice_index(IntegerMatrix(2, 2, {1, 1, 0, 2})) == 2);  // columns (1,0),(1,2)
  CHECK_THROWS_WITH_AS(image_lattice_index(IntegerMatrix(2, 2, {1, 2, 2, 4})), "degenerate weight system", Error);
}

TEST_CASE("smith normal form structure") {
  const IntegerMatrix a(3, 4, {2, 4, 4, 6, -6, 6, 12, 0, 10, -4, -16, 8});
  const SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(diag[i + 1] % diag[i] == 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
}

TEST_CASE("determinant agrees with Laplace expansion") {
  dhm::testing::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const IntegerMatrix m = gen.matrix(n, n, -4, 4);
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    CHECK(determinant(m) == dhm::testing::laplace_det(rows));
  }
}

TEST_CASE("property: kernel, index and solve on random matrices") {
  dhm::testing::Gen gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 5));
    const IntegerMatrix a = gen.matrix(d, m, -3, 3);
    const std::size_t r = rank(a);

    const IntegerMatrix k = kernel_lattice_basis(a);
    CHECK(k.cols() == m - r);
    CHECK((a * k).is_zero());
    if (k.cols() > 0) {
      // A lattice basis of a saturated sublattice: maximal minors are coprime.
      CHECK(dhm::testing::gcd_of_maximal_minors(k.transpose()) == 1);
    }

    const SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.rank == r);

    if (r == d) {
      const Integer idx = image_lattice_index(a);
      CHECK(idx == dhm::testing::gcd_of_maximal_minors(a));
      // Second route: product of the Hermite pivots.
      const HermiteForm h = column_hermite_form(a);
      CHECK(a * h.v == h.h);
      CHECK(abs(determinant(h.v)) == 1);
      Integer pivots = 1;
      std::size_t col = 0;
      for (std::size_t i = 0; i < d; ++i) {
        REQUIRE(col < m);
        CHECK(h.h(i, col) > 0);
        pivots *= h.h(i, col);
        ++col;
      }
      CHECK(idx == pivots);
    } else {
      CHECK_THROWS_AS(image_lattice_index(a), Error);
    }

    const RationalVector b = gen.rational_vector(d, -3, 3);
    if (const auto x = solve_particular(a, b)) {
      CHECK(a * *x == b);
    } else {
      CHECK(r < d);
    }
  }
}

TEST_CASE("primitive vectors") {
  CHECK(primitive(IntegerVector{4, -6}) == IntegerVector{2, -3});
  CHECK(primitive(rv({q(1, 2), q(-1, 3)})) == IntegerVector{3, -2});
  CHECK_THROWS_AS(primitive(IntegerVector{0, 0}), Error);
}
