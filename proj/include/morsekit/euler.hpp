#pragma once
// The Bernoulli-Euler (zigzag) numbers K_n: 1, 1, 1, 2, 5, 16, 61, 272, ...
// Two independent constructions are kept so they can cross-check each other:
// the Seidel boustrophedon triangle and the coefficients of sec t + tan t.

#include <cstddef>
#include <vector>

#include "morsekit/numbers.hpp"

namespace morsekit {

using EulerList = std::vector<Integer>;

// K_0..K_n via the boustrophedon triangle: row 0 is (1); row m starts at 0
// and accumulates the previous row read in reverse (this reversal is what
// alternates the sweep direction); the last entry of row m is K_m.
EulerList boustrophedon(std::size_t n);

// K_0..K_n as m! * [t^m] (sec t + tan t), exact rational series arithmetic.
EulerList euler_via_series(std::size_t n);

}  // namespace morsekit
