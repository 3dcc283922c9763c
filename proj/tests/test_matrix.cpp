#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "idio/matrix.hpp"
#include "oracles.hpp"

using namespace idio;
using idio::testing::Rng;

TEST_SUITE("matrix") {
  TEST_CASE("integer determinant matches permutation expansion") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 6);
      const IntMatrix m = testing::random_int_matrix(rng, n, -4, 4);
      CHECK(determinant(m) == testing::leibniz_det(m));
    }
  }

  TEST_CASE("zero pivots are handled by row swaps") {
    IntMatrix swap(2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == -1);

    IntMatrix m(3);
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(2, 2) = 5;
    CHECK(determinant(m) == -30);
    CHECK(determinant(IntMatrix(4)) == 0);
  }

  TEST_CASE("polynomial determinant matches permutation expansion") {
    Rng rng(22);
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 4);
      const PolyMatrix m = testing::random_poly_matrix(rng, n, 3, 2);
      CHECK(determinant(m) == testing::leibniz_det(m));
    }
  }

  TEST_CASE("charpoly evaluated at integers equals det(xI - M)") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 6);
      const IntMatrix m = testing::random_int_matrix(rng, n, -3, 3);
      const MPoly p = charpoly(to_poly_matrix(m));
      for (long x = -2; x <= 2; ++x) {
        IntMatrix shifted(n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? Integer(x) : Integer(0)) - m(r, c);
        CHECK(p.eval(x, 0, 0) == determinant(shifted));
      }
    }
  }

  TEST_CASE("charpoly is monic with trace coefficient and transpose invariant") {
    Rng rng(24);
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 5);
      const PolyMatrix m = testing::random_poly_matrix(rng, n, 3, 2);
      const MPoly p = charpoly(m);
      CHECK(p.degree_x() == n);
      CHECK(p.coeff({static_cast<unsigned>(n), 0, 0}) == 1);
      MPoly sub;  // coefficient of X^(n-1)
      for (const auto& t : p.terms()) {
        const Exponents e = MPoly::unpack(t.key);
        if (e.x == n - 1) sub += MPoly::monomial(t.coeff, {0, e.y, e.z});
      }
      CHECK(sub == -trace(m));
      CHECK(p == charpoly(m.transposed()));
    }
  }

  TEST_CASE("elimination and trace recurrences agree") {
    Rng rng(25);
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 6);
      const PolyMatrix m = testing::random_poly_matrix(rng, n, 2, 2);
      CHECK(charpoly(m) == charpoly_faddeev_leverrier(m));
    }
  }

  TEST_CASE("charpoly against permutation expansion of xI - M") {
    Rng rng(26);
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = testing::uniform(rng, 1, 4);
      const PolyMatrix m = testing::random_poly_matrix(rng, n, 2, 2);
      CHECK(charpoly(m) == testing::leibniz_charpoly(m));
    }
  }

  TEST_CASE("charpoly rejects entries involving X") {
    PolyMatrix m(2);
    m(0, 1) = MPoly::X();
    CHECK_THROWS_AS(charpoly(m), std::invalid_argument);
  }

  TEST_CASE("matrix basics") {
    const IntMatrix id = IntMatrix::identity(3);
    CHECK(determinant(id) == 1);
    CHECK(id.transposed() == id);
    PolyMatrix a(2);
    a(0, 1) = MPoly::y();
    const PolyMatrix sq = a * a;
    CHECK(sq == PolyMatrix(2));
    CHECK(trace(to_poly_matrix(id)) == MPoly(3));
    CHECK_THROWS(IntMatrix(0));
  }
}
