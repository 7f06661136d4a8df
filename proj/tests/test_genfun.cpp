#include "morsekit/genfun.hpp"

#include "doctest.h"
#include "morsekit/euler.hpp"

using namespace morsekit;

TEST_CASE("row EGFs agree three ways") {
  KTable table;
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    Series1 from_table = egf_from_table(table, l, 20);
    CHECK(from_table == closed_form_egf(l, 20));
    CHECK(from_table == operator_form_egf(l, 20));
  }
  // l = 0 has no trig-rational form; the operator form still must match.
  CHECK(egf_from_table(table, 0, 20) == operator_form_egf(0, 20));
}

TEST_CASE("l=3 EGF coefficient spots") {
  Series1 k3 = closed_form_egf(3, 5);
  CHECK(k3[0] == 0);
  CHECK(k3[1] == 6);    // K_1^3 = 3!
  CHECK(k3[2] == 24);   // K_2^3 / 2! = 48/2
  CHECK(k3[3] == 58);   // K_3^3 / 3! = 348/6
}

TEST_CASE("operator form rejects underprovisioned input") {
  Series1 k = trig_series(Trig::SecPlusTan, 10);
  CHECK_NOTHROW(apply_k_operator(2, k, 7));
  CHECK_THROWS_AS(apply_k_operator(2, k, 8), std::invalid_argument);
  CHECK_THROWS_AS(apply_k_operator(4, k, 4), std::invalid_argument);
  CHECK_THROWS_AS(apply_k_operator(5, k, 1), std::invalid_argument);
  CHECK_THROWS_AS(apply_k_operator(-1, k, 1), std::invalid_argument);
}

TEST_CASE("bivariate grid entries") {
  KTable table;
  Series2 g = k_bivariate_grid(table, 4, 6);
  CHECK(g.at(0, 0) == 0);  // undefined corner, stored as zero
  CHECK(g.at(2, 3) == 3);  // K_3^2 / (2! 3!) = 36/12
  CHECK(g.at(0, 2) == make_rational(1, 2));   // K_1 / 2!
  CHECK(g.at(1, 0) == 1);                     // K_0^1 = K_1
  CHECK(g.at(3, 1) == 1);                     // K_1^3 / 3! = 6/6
  CHECK(g.at(4, 2) == 8);                     // K_2^4 / (4! 2!) = 384/48
}

TEST_CASE("bivariate equation residual vanishes") {
  KTable table;
  CHECK(pde_residual(table, 4, 10).is_zero());
  CHECK(pde_residual(table, 6, 6).is_zero());
}

TEST_CASE("parity subtable residuals vanish") {
  KTable table;
  CHECK(pde_residual_parity(table, ParityPde::EvenR, 4, 5).is_zero());
  CHECK(pde_residual_parity(table, ParityPde::OddS, 4, 5).is_zero());
}

TEST_CASE("published odd-row form does not vanish") {
  KTable table;
  Series2 r = pde_residual_odd_published(table, 3, 3);
  CHECK_FALSE(r.is_zero());
  // The residual works out to x (S_y - S_yy); entry (a,b) for a >= 1 is
  // (K_{2b+1}^{a-1} - K_{2b+3}^{a-1}) / ((a-1)! b!).
  CHECK(r.at(1, 1) == -4);    // K_2 - K_4
  CHECK(r.at(2, 1) == -56);   // K_4 - K_6
  CHECK(r.at(2, 0) == -4);    // K_2 - K_4 again, via the b=0 column
  CHECK(r.at(1, 0) == 0);     // K_0 - K_2 = 0
  for (std::size_t b = 0; b <= 3; ++b) CHECK(r.at(0, b) == 0);
}
