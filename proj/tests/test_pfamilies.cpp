#include <doctest.h>

#include <stdexcept>

#include "morsekit/euler.hpp"
#include "morsekit/ktable.hpp"
#include "morsekit/pfamilies.hpp"

using morsekit::general_formula;
using morsekit::general_weight;
using morsekit::Integer;
using morsekit::KTable;
using morsekit::p_family;
using morsekit::PPoly;
using morsekit::PSet;
using morsekit::Rational;

TEST_CASE("weights") {
  CHECK(general_weight(2, 2) == Rational(-1));
  CHECK(general_weight(2, 3) == Rational(-3));
  CHECK(general_weight(3, 4) == Rational(3));
  CHECK(general_weight(3, 5) == Rational(15));
  CHECK(general_weight(4, 6) == Rational(-15));
  CHECK_THROWS_AS(general_weight(3, 3), std::invalid_argument);
}

TEST_CASE("explicit coefficient polynomials") {
  // top coefficient is always 1
  for (int k = 2; k <= 5; ++k) {
    const PPoly top = p_family(k, k - 1);
    CHECK(top.coeffs.size() == 1);
    CHECK(top.coeffs[0] == Rational(1));
  }
  // the two lower families at hand-checked points
  CHECK(p_family(2, 0).eval(2) == Rational(2));
  CHECK(p_family(2, 0).eval(3) == morsekit::make_rational(8, 3));
  CHECK(p_family(3, 1).eval(5) == morsekit::make_rational(22, 3));
  CHECK(p_family(3, 0).eval(5) == morsekit::make_rational(184, 15));
  CHECK(p_family(4, 2).eval(6) == Rational(12));
  CHECK(p_family(4, 1).eval(6) == Rational(44));
}

TEST_CASE("weight formula reproduces the closed forms") {
  KTable t;
  const PSet pset = PSet::explicit_families(3);
  // l = 2: K_{n+3} - (n+2) K_{n+1}; l = 3: K_{n+5} - (3n+8) K_{n+3}
  const auto k = morsekit::boustrophedon(40);
  for (long n = 0; n <= 10; ++n) {
    CHECK(general_formula(t, n, 2, pset) == k[n + 3] - (n + 2) * k[n + 1]);
    CHECK(general_formula(t, n, 3, pset) == k[n + 5] - (3 * n + 8) * k[n + 3]);
  }
  CHECK(general_formula(t, 2, 3, pset) == 48);
  CHECK(Integer(k[7] - 14 * k[5]) == 48);
}

TEST_CASE("weight formula matches the recurrence, explicit families") {
  KTable t;
  const PSet pset = PSet::explicit_families(3);
  for (long l = 2; l <= 5; ++l)
    for (long n = -2; n <= 12; ++n)
      CHECK(general_formula(t, n, l, pset) == t.at(n, l));
}

TEST_CASE("missing families are reported") {
  KTable t;
  const PSet pset = PSet::explicit_families(3);
  CHECK_THROWS_AS(general_formula(t, 1, 8, pset), std::invalid_argument);
}

TEST_CASE("fitting recovers the known families") {
  KTable t;
  for (int k = 2; k <= 3; ++k) {
    const auto fitted = morsekit::fit_p(t, k);
    REQUIRE(fitted.size() == static_cast<size_t>(k));
    for (int d = k - 1; d >= k - 3 && d >= 0; --d) {
      const PPoly known = p_family(k, d);
      const PPoly& got = fitted[d];
      CHECK(got.coeffs == known.coeffs);
    }
  }
}

TEST_CASE("fitting extends the k=4 family downward") {
  KTable t;
  const auto fitted = morsekit::fit_p(t, 4);
  REQUIRE(fitted.size() == 4);
  CHECK(fitted[3].coeffs == p_family(4, 3).coeffs);
  CHECK(fitted[2].coeffs == p_family(4, 2).coeffs);
  CHECK(fitted[1].coeffs == p_family(4, 1).coeffs);
  // the constant-in-n coefficient is a cubic in l with nonzero lead
  CHECK(fitted[0].coeffs.size() == 4);
  CHECK(fitted[0].coeffs[3] != 0);
  // forced by the diagonal identity at l = 6: the k=4 coefficient
  // polynomial must vanish at n = -6 or the formula would reach K_{-1}
  CHECK(fitted[0].eval(6) == Rational(48));
}

TEST_CASE("assembled set closes rows l = 6 and 7") {
  KTable t;
  const PSet pset = morsekit::assembled_pset(t, 4);
  for (long n = -2; n <= 12; ++n)
    CHECK(general_formula(t, n, 6, pset) == t.at(n, 6));
  const PSet pset5 = morsekit::assembled_pset(t, 5);
  for (long n = -2; n <= 12; ++n)
    CHECK(general_formula(t, n, 7, pset5) == t.at(n, 7));
}

TEST_CASE("negative-n identities through the weight formula") {
  KTable t;
  const PSet pset = morsekit::assembled_pset(t, 4);
  for (long m = 1; m <= 6; ++m) {
    CHECK(general_formula(t, -m, m, pset) == morsekit::factorial(m - 1));
    for (long l = m + 1; l <= 6; ++l)
      CHECK(general_formula(t, -m, l, pset) == 0);
  }
}
