#include "morsekit/euler.hpp"

#include "morsekit/series.hpp"

namespace morsekit {

EulerList boustrophedon(std::size_t n) {
  EulerList out;
  out.reserve(n + 1);
  std::vector<Integer> row{1};
  out.push_back(1);
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1);
    next[0] = 0;
    for (std::size_t k = 1; k <= m; ++k) next[k] = next[k - 1] + row[m - k];
    out.push_back(next[m]);
    row = std::move(next);
  }
  return out;
}

EulerList euler_via_series(std::size_t n) {
  Series1 k = trig_series(Trig::SecPlusTan, n);
  EulerList out;
  out.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m)
    out.push_back(to_integer(Rational(factorial(m)) * k[m]));
  return out;
}

}  // namespace morsekit
