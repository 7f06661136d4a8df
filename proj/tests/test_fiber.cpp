#include "morsekit/fiber.hpp"

#include <cmath>
#include <string>

#include "doctest.h"
#include "morsekit/ktable.hpp"
#include "morsekit/svg.hpp"

using namespace morsekit;

namespace {

int rational_sign(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("integrating critical points") {
  std::vector<double> f = from_critical_points({-1.0, 1.0});
  REQUIRE(f.size() == 4);  // x^3 - 3x
  CHECK(f[0] == doctest::Approx(0.0));
  CHECK(f[1] == doctest::Approx(-3.0));
  CHECK(f[2] == doctest::Approx(0.0));
  CHECK(f[3] == doctest::Approx(1.0));
  CHECK(poly_value(f, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("classify rejects repeated critical values") {
  // x^4/4 - x^2/2 scaled monic: values at -1 and 1 coincide
  CHECK_THROWS_AS(classify_snake({-1.0, 0.0, 1.0}), std::runtime_error);
}

TEST_CASE("realize then classify round-trips every snake") {
  for (int n = 2; n <= 5; ++n) {
    auto snakes = enumerate_snakes(n);
    for (std::size_t i = 0; i < snakes.size(); ++i) {
      CAPTURE(n);
      CAPTURE(i);
      std::vector<double> xs = realize_snake(snakes[i], 777 + i);
      REQUIRE(xs.size() == static_cast<std::size_t>(n - 1));
      for (std::size_t j = 0; j + 1 < xs.size(); ++j) CHECK(xs[j] < xs[j + 1]);
      CHECK(classify_snake(xs) == snakes[i]);
    }
  }
}

TEST_CASE("realization is deterministic in the seed") {
  SnakePattern snake = enumerate_snakes(4)[1];
  std::vector<double> a = realize_snake(snake, 4242);
  std::vector<double> b = realize_snake(snake, 4242);
  CHECK(a == b);  // bitwise: same seed, same arithmetic
}

TEST_CASE("divided difference divides exactly") {
  SnakePattern snake = enumerate_snakes(4)[0];
  std::vector<double> poly =
      from_critical_points(realize_snake(snake, 900));
  FiberCurve g = divided_difference(poly);

  auto f_exact = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
      acc = acc * x + Rational(*it);
    return acc;
  };
  const Rational x = make_rational(3, 7);
  const Rational y = make_rational(-2, 5);
  CHECK((x - y) * g.eval(x, y) == f_exact(x) - f_exact(y));
  CHECK(g.eval(x, y) == g.eval(y, x));
  CHECK((x - x) * g.eval(x, x) == 0);

  // certified sign matches the exact sign
  for (double px : {-1.25, 0.3, 2.0})
    for (double py : {-0.75, 1.5}) {
      CAPTURE(px);
      CAPTURE(py);
      CHECK(g.sign_at(px, py) ==
            rational_sign(g.eval(Rational(px), Rational(py))));
    }
}

TEST_CASE("degree 1: only the diagonal") {
  auto snakes = enumerate_snakes(1);
  REQUIRE(snakes.size() == 1);
  FiberArrangement arr = build_arrangement(snakes[0], 1);
  CHECK(arr.net.empty());
  CHECK(count_regions(arr, 64) == 2);
  CHECK(stable_region_count(arr).regions == 2);
}

TEST_CASE("degree 2: eight sectors") {
  auto snakes = enumerate_snakes(2);
  REQUIRE(snakes.size() == 1);
  FiberArrangement arr = build_arrangement(snakes[0], 2);
  CHECK(arr.net.size() == 1);
  CHECK(count_regions(arr, 64) == 8);
  CHECK(stable_region_count(arr).regions == 8);
}

TEST_CASE("degree 3: single snake, 36 regions") {
  auto snakes = enumerate_snakes(3);
  REQUIRE(snakes.size() == 1);
  FiberArrangement arr = build_arrangement(snakes[0], 3);
  CHECK(arr.net.size() == 4);
  CHECK(stable_region_count(arr).regions == 36);
}

TEST_CASE("degree 4: two snakes split 176") {
  auto snakes = enumerate_snakes(4);
  REQUIRE(snakes.size() == 2);
  long long total = 0;
  for (std::size_t i = 0; i < snakes.size(); ++i) {
    FiberArrangement arr = build_arrangement(snakes[i], 4 + i);
    total += stable_region_count(arr).regions;
  }
  CHECK(total == 176);
}

TEST_CASE("geometric counts reproduce the l=2 column") {
  KTable table;
  CHECK(knl2_geometric(1, 11) == table.at(1, 2));  // 2
  CHECK(knl2_geometric(2, 12) == table.at(2, 2));  // 8
  CHECK(knl2_geometric(3, 13) == table.at(3, 2));  // 36
}

TEST_CASE("svg rendering of the degree-3 arrangement") {
  FiberArrangement arr = build_arrangement(enumerate_snakes(3)[0], 99);
  std::string svg = render_arrangement_svg(arr);
  CHECK(svg == render_arrangement_svg(arr));  // pure function of the input
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 800\"") != std::string::npos);
  CHECK(count_substr(svg, "stroke-dasharray") == 1);  // one diagonal
  // the fiber curve of a cubic is a single closed oval
  CHECK(count_substr(svg, "stroke=\"#c00\"") == 1);
  CHECK(count_substr(svg, " Z\"") == 1);
  CHECK(svg.find(">b1</text>") != std::string::npos);
  CHECK(svg.find(">b2</text>") != std::string::npos);
}
