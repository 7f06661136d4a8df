#pragma once
// Numeric side of the two-boundary-point check. For each snake of degree n
// we realize a monic polynomial with that critical-value pattern, then count
// the regions of the plane arrangement cut out, in coordinates (b1, b2) of
// the two boundary points, by
//   - the lines b1 = p and b2 = p over every net position p (preimages of
//     critical values),
//   - the diagonal b1 = b2,
//   - the curve f(b1) = f(b2) with the diagonal factor divided out.
// Summing the region counts over all snakes of degree n must reproduce
// K_n^2; that is the geometric cross-check the tests run for n = 2, 3, 4.
//
// The polynomial lives in doubles, but its coefficients, once computed, are
// taken as exact rationals: the divided-difference curve g satisfies
// (b1 - b2) g(b1, b2) = f(b1) - f(b2) exactly over Q, and grid signs of g
// are certified (double evaluation with an error bound, exact rational
// fallback when the bound does not separate the value from zero).

#include <cstdint>
#include <vector>

#include "morsekit/morsification.hpp"
#include "morsekit/numbers.hpp"

namespace morsekit {

// Monic f of degree xs.size()+1 with f'(x) = n * prod (x - xs[i]) and
// f(0) = 0; coefficients ascending.
std::vector<double> from_critical_points(const std::vector<double>& xs);

double poly_value(const std::vector<double>& coeffs, double x);

// Rank pattern of the critical values at the given (strictly increasing)
// critical points. Throws std::runtime_error when two critical values are
// closer than 1e-6 relative to their magnitude.
SnakePattern classify_snake(const std::vector<double>& xs);

// Strictly increasing critical points realizing the snake, found by seeded
// random search with hill climbing. Deterministic for a fixed seed. Throws
// std::runtime_error naming the snake if the search fails.
std::vector<double> realize_snake(const SnakePattern& snake,
                                  std::uint64_t seed);

// Every preimage of every critical value, sorted, duplicates merged at
// 1e-9 of the spread. Critical points appear exactly as given.
std::vector<double> net_positions(const std::vector<double>& xs);

// (f(b1) - f(b2)) / (b1 - b2) with exact rational coefficients taken from
// the double coefficients of f.
struct FiberCurve {
  // coeff[i][j] multiplies b1^i b2^j; populated for i + j <= degree
  std::vector<std::vector<Rational>> coeff;
  std::vector<std::vector<double>> coeff_d;
  int degree = 0;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval_double(double x, double y) const;
  // exact sign at the exact rational values of the two doubles
  int sign_at(double x, double y) const;
};

FiberCurve divided_difference(const std::vector<double>& poly);

struct FiberArrangement {
  int degree = 0;
  SnakePattern snake;
  std::vector<double> critical_points;
  std::vector<double> poly;  // f, ascending coefficients
  std::vector<double> net;   // sorted net positions
  FiberCurve curve;
  double box_lo = 0.0;
  double box_hi = 0.0;
};

// margin scales the padding around the net positions: delta =
// margin * max(spread, 1), so a single-position net still gets a real box.
FiberArrangement build_arrangement(const SnakePattern& snake,
                                   std::uint64_t seed, double margin = 0.5);

// Region count of the arrangement inside the box at one grid resolution:
// cells are classified by (slab of b1, slab of b2, side of the diagonal,
// sign of g) and merged by 4-connectivity; cells landing exactly on a
// boundary are excluded.
long long count_regions(const FiberArrangement& arr, int resolution);

struct RegionCount {
  long long regions = 0;
  int resolution = 0;  // finest grid used
};

// Doubles the resolution until three consecutive counts agree; throws
// std::runtime_error with the history if max_resolution is passed.
RegionCount stable_region_count(const FiberArrangement& arr,
                                int start_resolution = 64,
                                int max_resolution = 8192);

// Sum of stable region counts over every snake of degree n (1 <= n <= 5);
// must equal K_n^2. Snake i uses seed + i.
Integer knl2_geometric(int n, std::uint64_t seed);

}  // namespace morsekit
