#pragma once
// Combinatorial enumeration of topological types of M-morsifications of
// x^{n+1} with l labeled boundary points. A type is a triple:
//
//   snake:      the rank permutation of the n-1 critical values of a monic
//               degree-n polynomial whose derivative has all roots real and
//               distinct; alternation is fixed by the monic convention (the
//               rightmost critical point is a local minimum);
//   placement:  which of the n open intervals between consecutive critical
//               points (plus the two unbounded ones) each labeled boundary
//               point lies in, together with the left-to-right order of the
//               points sharing an interval;
//   value order: one total order on the n-1 critical values and l boundary
//               values, subject to realizability:
//                 - the critical values are ordered exactly as the snake says;
//                 - a boundary value in a bounded interval lies strictly
//                   between the adjacent critical values;
//                 - in an unbounded interval it lies on the reachable side of
//                   the adjacent critical value (monic sign convention);
//                 - boundary values sharing an interval are ordered by the
//                   interval's monotonicity.
//
// count_types(n, l) equals K_n^l; that equality is what the tests and the
// acceptance suite check against the recurrence table.
//
// Two implementations are kept deliberately:
//   * morsekit::serial -- a naive filter over every (snake, placement,
//     permutation), the auditable reference;
//   * the kernels below -- per (snake, placement) the valid value orders are
//     counted by inserting symbols in increasing value with early pruning,
//     parallelized over placements with OpenMP.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "morsekit/numbers.hpp"

namespace morsekit {

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct SnakePattern {
  int degree = 0;         // n
  std::vector<int> ranks;  // size n-1; ranks[i] in 1..n-1, 1 = lowest value

  bool operator==(const SnakePattern&) const = default;
};

// Critical point i (0-based, left to right) is a local minimum iff the
// interval to its right is rising; the rightmost interval always rises.
bool is_local_min(int n, int i);
// Interval j in 0..n-1 (j=0 leftmost unbounded, j=n-1 rightmost unbounded).
bool interval_rising(int n, int j);

// All snakes of degree n in lexicographic rank order; count is K_{n-1}.
std::vector<SnakePattern> enumerate_snakes(int n);

struct Placement {
  // per_interval[j] lists the labels (0-based) in interval j in x-order
  std::vector<std::vector<int>> per_interval;

  bool operator==(const Placement&) const = default;
};

// All placements of l labeled points into n intervals; count is the rising
// factorial n(n+1)...(n+l-1).
std::vector<Placement> enumerate_placements(int n, int l);

struct MorsificationType {
  SnakePattern snake;
  Placement placement;
  // global value ranks 1..(n-1)+l for symbols v_0..v_{n-2}, w_0..w_{l-1}
  std::vector<int> value_rank;

  bool operator==(const MorsificationType&) const = default;
};

// The realizability predicate spelled out above.
bool is_valid_type(const MorsificationType& type);

// x -> -x mirror of a type; an involution on valid types when n is even.
MorsificationType mirror_type(const MorsificationType& type);

/// Enumeration budget: n-1+l symbols, at most 8.
inline constexpr int kMaxSymbols = 8;

// --- parallel kernels (OpenMP over placements) ---

// Number of types; equals K_n^l.
Integer count_types(int n, int l);

// Types where exactly one labeled boundary point sits on a critical point
// (value tied to that critical value), everything else generic. Equals
// l(n-1) K_n^{l-1}. Requires n >= 2, l >= 1.
Integer count_boundary_caustic_types(int n, int l);

// Types tallied once per qualifying side: once if some boundary value
// exceeds every critical value, once if some boundary value is below every
// critical value (both-sided types count twice). Equals 2l K_n^{l-1}.
// Requires l >= 1.
Integer count_extreme_boundary_types(int n, int l);

namespace serial {

// Reference implementations: filter all (snake, placement, permutation).
Integer count_types(int n, int l);
Integer count_boundary_caustic_types(int n, int l);
Integer count_extreme_boundary_types(int n, int l);

void for_each_type(int n, int l,
                   const std::function<void(const MorsificationType&)>& fn);

}  // namespace serial

}  // namespace morsekit
