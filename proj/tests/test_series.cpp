#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "morsekit/series.hpp"

using morsekit::Rational;
using morsekit::Series1;
using morsekit::Series2;
using morsekit::Trig;
using morsekit::trig_series;

namespace {

Series1 sample(std::size_t order, int salt) {
  Series1 s(order);
  for (std::size_t k = 0; k <= order; ++k)
    s[k] = morsekit::make_rational(static_cast<long>(k * k) + salt,
                                   static_cast<long>(k) + 2);
  return s;
}

// Independent check value: coefficients of (1 + sin t) / cos t computed by
// plain long division on rational vectors, no Series1 machinery involved.
std::vector<Rational> sec_plus_tan_by_hand(std::size_t order) {
  std::vector<Rational> sin(order + 1, 0), cos(order + 1, 0);
  Rational fact = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<long>(k);
    const Rational inv = 1 / fact;
    if (k % 2 == 1)
      sin[k] = (k % 4 == 1) ? inv : -inv;
    else
      cos[k] = (k % 4 == 0) ? inv : -inv;
  }
  std::vector<Rational> num = sin;
  num[0] += 1;
  std::vector<Rational> q(order + 1, 0);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q[j] * cos[k - j];
    q[k] = acc / cos[0];
  }
  return q;
}

}  // namespace

TEST_CASE("series ring identities") {
  const auto a = sample(12, 3);
  const auto b = sample(12, 7);
  const auto c = sample(12, 11);
  CHECK((a + b) * c == a * c + b * c);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a + (-a) == Series1(12));
  CHECK(Rational(3) * a == a + a + a);
}

TEST_CASE("pythagorean identity to order 24") {
  const auto s = trig_series(Trig::Sin, 24);
  const auto c = trig_series(Trig::Cos, 24);
  auto one = Series1(24);
  one[0] = 1;
  CHECK(s * s + c * c == one);
}

TEST_CASE("sec plus tan matches a hand-rolled division") {
  const auto fast = trig_series(Trig::SecPlusTan, 14);
  const auto slow = sec_plus_tan_by_hand(14);
  for (std::size_t k = 0; k <= 14; ++k) CHECK(fast[k] == slow[k]);
  CHECK(fast[4] == morsekit::make_rational(5, 24));
}

TEST_CASE("reciprocal of 1 - sin") {
  const auto inv = trig_series(Trig::InvOneMinusSin, 20);
  auto one_minus_sin = -trig_series(Trig::Sin, 20);
  one_minus_sin[0] += 1;
  auto one = Series1(20);
  one[0] = 1;
  CHECK(inv * one_minus_sin == one);
}

TEST_CASE("derivative and integral round trip") {
  const auto f = sample(10, 5);
  auto expected = f;
  expected[0] = 0;
  CHECK(f.derivative().integral() == expected);
  // the other way: integral then derivative loses nothing below the top
  const auto g = f.integral().derivative();
  for (std::size_t k = 0; k + 1 <= 10; ++k) CHECK(g[k] == f[k]);
}

TEST_CASE("division undoes multiplication") {
  auto b = sample(10, 2);
  b[0] = 1;  // invertible
  const auto a = sample(10, 9);
  CHECK((a * b) / b == a);
  Series1 zero_const(10);
  CHECK_THROWS_AS(a / zero_const, std::domain_error);
}

TEST_CASE("truncation never grows") {
  const auto f = sample(8, 1);
  CHECK(f.truncated(5).order() == 5);
  CHECK_THROWS_AS(f.truncated(9), std::invalid_argument);
}

TEST_CASE("two-variable grid bookkeeping") {
  Series2 g(2, 3);
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      g.at(a, b) = morsekit::make_rational(static_cast<long>(3 * a + b), 1);

  SUBCASE("partial derivatives shrink their own order") {
    const auto gx = g.dx();
    CHECK(gx.order_x() == 1);
    CHECK(gx.order_y() == 3);
    CHECK(gx.at(0, 2) == g.at(1, 2));
    CHECK(gx.at(1, 0) == Rational(2) * g.at(2, 0));
    const auto gy = g.dy();
    CHECK(gy.order_y() == 2);
    CHECK(gy.at(2, 1) == Rational(2) * g.at(2, 2));
  }

  SUBCASE("shifts are exact and grow the shape") {
    const auto xs = g.shifted_x();
    CHECK(xs.order_x() == 3);
    CHECK(xs.at(0, 1) == 0);
    CHECK(xs.at(3, 2) == g.at(2, 2));
    const auto ys = g.shifted_y();
    CHECK(ys.order_y() == 4);
    CHECK(ys.at(1, 0) == 0);
    CHECK(ys.at(1, 4) == g.at(1, 3));
  }

  SUBCASE("polynomial scaling") {
    // (1 - 2x) g
    const auto scaled = morsekit::scale_poly(
        g, {{0, 0, Rational(1)}, {1, 0, Rational(-2)}});
    CHECK(scaled.order_x() == 3);
    CHECK(scaled.at(0, 2) == g.at(0, 2));
    CHECK(scaled.at(2, 1) == g.at(2, 1) - Rational(2) * g.at(1, 1));
    CHECK(scaled.at(3, 1) == Rational(-2) * g.at(2, 1));
  }

  SUBCASE("shape mismatches are rejected") {
    Series2 other(3, 3);
    CHECK_THROWS_AS(g + other, std::invalid_argument);
    CHECK_THROWS_AS(Series2(0, 3).dx(), std::invalid_argument);
    CHECK_THROWS_AS(g.at(3, 0), std::out_of_range);
  }

  SUBCASE("zero test and truncation") {
    CHECK_FALSE(g.is_zero());
    CHECK(Series2(4, 4).is_zero());
    const auto t = g.truncated(1, 1);
    CHECK(t.order_x() == 1);
    CHECK(t.at(1, 1) == g.at(1, 1));
  }
}
