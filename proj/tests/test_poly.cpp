#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "idio/poly.hpp"

using namespace idio;
using idio::testing::Rng;

TEST_SUITE("poly") {
  TEST_CASE("canonical string orders terms lexicographically, X before y before z") {
    const MPoly x = MPoly::X(), y = MPoly::y(), z = MPoly::z();
    const MPoly p = x.pow(3) - 3 * (y + z) * x - (1 + (y + z).pow(3));
    CHECK(p.str() == "X^3 - 3*X*y - 3*X*z - y^3 - 3*y^2*z - 3*y*z^2 - z^3 - 1");
    CHECK(MPoly().str() == "0");
    CHECK(MPoly(-7).str() == "-7");
    CHECK((-x).str() == "-X");
    CHECK((2 * x * y * y - z).str() == "2*X*y^2 - z");
  }

  TEST_CASE("parse inverts str and accepts any term order") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const MPoly p = testing::random_mpoly(rng, 6, 4, true);
      CHECK(MPoly::parse(p.str()) == p);
    }
    CHECK(MPoly::parse("1 + X^2 - X^2 + y*X") == MPoly::X() * MPoly::y() + 1);
    CHECK(MPoly::parse("-3*z^2") == -3 * MPoly::z().pow(2));
    CHECK_THROWS_AS(MPoly::parse("X^"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse("w + 1"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse(""), std::invalid_argument);
  }

  TEST_CASE("ring axioms on random triples") {
    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
      const MPoly a = testing::random_mpoly(rng, 5, 3, true);
      const MPoly b = testing::random_mpoly(rng, 5, 3, true);
      const MPoly c = testing::random_mpoly(rng, 5, 3, true);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
      CHECK(a * 1 == a);
      CHECK((a * 0).is_zero());
    }
  }

  TEST_CASE("exact division recovers factors and rejects remainders") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      const MPoly a = testing::random_mpoly(rng, 4, 3, true);
      MPoly b = testing::random_mpoly(rng, 4, 3, true);
      if (b.is_zero()) b = 1;
      CHECK(exact_div(a * b, b) == a);
    }
    CHECK(exact_div(MPoly(12) * MPoly::y(), Integer(4)) == 3 * MPoly::y());
    CHECK_THROWS_AS(exact_div(MPoly::X() + 1, MPoly::X()), std::logic_error);
    CHECK_THROWS_AS(exact_div(MPoly(3), Integer(2)), std::logic_error);
    CHECK_THROWS(exact_div(MPoly::X(), MPoly()));
  }

  TEST_CASE("evaluation and substitution agree") {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const MPoly p = testing::random_mpoly(rng, 6, 3, true);
      const Integer x = static_cast<long>(testing::uniform(rng, 0, 6)) - 3;
      const Integer y = static_cast<long>(testing::uniform(rng, 0, 6)) - 3;
      const Integer z = static_cast<long>(testing::uniform(rng, 0, 6)) - 3;
      const MPoly partial = p.substitute(std::nullopt, y, z);
      CHECK_FALSE(partial.depends_on_yz());
      CHECK(partial.eval(x, 0, 0) == p.eval(x, y, z));
      CHECK(p.substitute(x, y, z) == MPoly(p.eval(x, y, z)));
    }
  }

  TEST_CASE("coefficients and degrees") {
    const MPoly p = MPoly::parse("X^4 - 2*X*y*z + 5");
    CHECK(p.degree_x() == 4);
    CHECK(p.coeff({1, 1, 1}) == -2);
    CHECK(p.coeff({0, 0, 0}) == 5);
    CHECK(p.coeff({2, 0, 0}) == 0);
    CHECK(p.term_count() == 3);
    CHECK(p.depends_on_x());
    CHECK(p.depends_on_yz());
    CHECK_FALSE(MPoly(4).depends_on_x());
    CHECK(MPoly::unpack(MPoly::pack({7, 3, 2})) == Exponents{7, 3, 2});
  }

  TEST_CASE("big coefficients stay exact") {
    MPoly p = MPoly(1) + MPoly::X();
    const MPoly q = p.pow(80);
    CHECK(q.coeff({40, 0, 0}) == Integer("107507208733336176461620"));
    CHECK(q.eval(1, 0, 0) == Integer(1) << 80);
  }

  TEST_CASE("Gaussian identity on small characteristic polynomials") {
    // Single edge: P = X^2 - 1; one orientation has A - A^T = [[0,1],[-1,0]].
    CHECK(gaussian_identity_check(MPoly::parse("X^2 - 1"), MPoly::parse("X^2 + 1"), 2));
    CHECK_FALSE(gaussian_identity_check(MPoly::parse("X^2 - 1"), MPoly::parse("X^2 - 1"), 2));
    // Path on three vertices: P = X^3 - 2X, Q = X^3 + 2X.
    CHECK(gaussian_identity_check(MPoly::parse("X^3 - 2*X"), MPoly::parse("X^3 + 2*X"), 3));
    CHECK_THROWS_AS(gaussian_identity_check(MPoly::parse("X*y"), MPoly::X(), 1), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_identity_check(MPoly::X().pow(3), MPoly::X(), 2), std::invalid_argument);

    const GaussPoly s = substitute_neg_i_x(MPoly::parse("X^2 + X + 1"));
    CHECK(s.re == MPoly::parse("1 - X^2"));
    CHECK(s.im == MPoly::parse("-X"));
    CHECK(GaussPoly::i_power(2).re == MPoly(-1));
    CHECK(GaussPoly::i_power(3).im == MPoly(-1));
  }
}
