#include <doctest.h>

#include <cstdio>

#include "morsekit/euler.hpp"
#include "morsekit/ktable.hpp"

using morsekit::boustrophedon;
using morsekit::DomainError;
using morsekit::Integer;
using morsekit::KTable;

TEST_CASE("domain shape") {
  CHECK(KTable::in_domain(1, 0));
  CHECK_FALSE(KTable::in_domain(0, 0));
  CHECK(KTable::in_domain(-1, 1));
  CHECK_FALSE(KTable::in_domain(-2, 1));
  CHECK(KTable::in_domain(-2, 2));
  CHECK(KTable::in_domain(-5, 5));
  CHECK_FALSE(KTable::in_domain(-6, 5));
  CHECK(KTable::in_domain(0, 2));
}

TEST_CASE("frozen table values") {
  KTable t;
  CHECK(t.at(3, 2) == 36);
  CHECK(t.at(1, 3) == 6);
  CHECK(t.at(2, 2) == 8);
  CHECK(t.at(2, 3) == 48);
  CHECK(t.at(4, 2) == 176);
  CHECK(t.at(5, 2) == 958);
  CHECK(t.at(0, 3) == 0);
  CHECK(t.at(-3, 3) == 2);
  CHECK(t.at(-4, 4) == 6);
  CHECK(t.at(-5, 5) == 24);
}

TEST_CASE("boundary rows reduce to zigzag numbers") {
  KTable t;
  const auto k = boustrophedon(31);
  for (long n = 1; n <= 30; ++n) CHECK(t.at(n, 0) == k[n - 1]);
  for (long n = -1; n <= 30; ++n) CHECK(t.at(n, 1) == k[n + 1]);
}

TEST_CASE("reference block at negative n, including the gaps") {
  KTable t;
  const long expected[6][5] = {{1, 0, 0, 0, 0},   {1, 0, 0, 0, 0},
                               {-1, 1, 0, 0, 0},  {-1, -1, 2, 0, 0},
                               {-1, -1, -1, 6, 0}, {-1, -1, -1, -1, 24}};
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 5; ++col) {
      const long n = -row, l = col + 1;
      if (expected[row][col] < 0) {
        CHECK_THROWS_AS(t.at(n, l), DomainError);
      } else {
        CHECK(t.at(n, l) == expected[row][col]);
      }
    }
}

TEST_CASE("domain errors carry their cell") {
  KTable t;
  try {
    t.at(-2, 1);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.n == -2);
    CHECK(e.l == 1);
  }
}

TEST_CASE("defining recurrence holds on the whole sampled domain") {
  KTable t;
  for (long l = 2; l <= 6; ++l)
    for (long n = -l; n <= 15; ++n) {
      const Integer lhs = t.at(n, l);
      const Integer mult = Integer(n + 2) * (l - 1);
      if (mult == 0)
        CHECK(lhs == t.at(n + 2, l - 1));
      else
        CHECK(lhs == t.at(n + 2, l - 1) - mult * t.at(n + 2, l - 2));
    }
}

TEST_CASE("closed forms match the recurrence on all valid n") {
  KTable t;
  for (int l = 2; l <= 5; ++l)
    for (long n = -l; n <= 20; ++n)
      CHECK(morsekit::closed_form(t, n, l) == t.at(n, l));
}

TEST_CASE("stratum counts divide out l!") {
  KTable t;
  CHECK(t.strata_count(3, 2) == 18);
  for (long n = 1; n <= 12; ++n)
    for (long l = 0; l <= 6; ++l)
      CHECK(t.strata_count(n, l) * morsekit::factorial(l) == t.at(n, l));
}

TEST_CASE("memo saves and loads") {
  const char* path = "ktable_roundtrip_test.json";
  {
    KTable t;
    t.at(3, 2);
    t.at(-5, 5);
    t.at(10, 4);
    t.save(path);
  }
  KTable fresh;
  CHECK(fresh.load(path) > 0);
  CHECK(fresh.at(3, 2) == 36);
  CHECK(fresh.at(-5, 5) == 24);
  KTable none;
  CHECK(none.load("does_not_exist_anywhere.json") == 0);
  std::remove(path);
}
