#pragma once
// The two-index family K_n^l generalizing the Bernoulli-Euler numbers.
//
// Boundary rows:  K_n^0 = K_{n-1}  (n >= 1),  K_n^1 = K_{n+1}  (n >= -1).
// For l >= 2 the defining recurrence K_{n-2}^{l+1} = K_n^l - n*l*K_n^{l-1}
// is rearranged into the computation rule
//
//     K_n^l = K_{n+2}^{l-1} - (n+2)(l-1) * K_{n+2}^{l-2},
//
// valid on the domain
//     (l = 0 and n >= 1)  or  (l = 1 and n >= -1)  or  (l >= 2 and n >= -l),
// with the convention that a term whose integer multiplier (n+2)(l-1)
// vanishes contributes zero even when its K-factor lies outside the domain.
// Cells outside the domain are hard errors (the "?" cells of the table).

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morsekit/numbers.hpp"

namespace morsekit {

class DomainError : public std::domain_error {
 public:
  DomainError(long n, long l)
      : std::domain_error("K(n=" + std::to_string(n) +
                          ", l=" + std::to_string(l) +
                          ") is outside the table domain"),
        n(n),
        l(l) {}
  long n, l;
};

// Memoized table. Fill is lazy and not thread-safe; concurrent reads of
// already-computed cells are fine (values are never mutated once stored).
class KTable {
 public:
  KTable() = default;

  static bool in_domain(long n, long l);

  // K_n^l; throws DomainError outside the domain.
  const Integer& at(long n, long l);

  // K_idx, extending the boustrophedon list on demand.
  const Integer& euler(std::size_t idx);

  // K_n^l / l! for n >= 1; throws if the division is not exact.
  Integer strata_count(long n, long l);

  // Cache persistence: decimal-string JSON, exact round trip.
  void save(const std::string& path) const;
  std::size_t load(const std::string& path);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const Integer& compute(long n, long l);

  std::map<std::pair<long, long>, Integer> memo_;
  std::vector<Integer> euler_;
};

// Closed forms in the Bernoulli-Euler numbers, l in 2..5:
//   K_n^2 = K_{n+3} - (n+2) K_{n+1}
//   K_n^3 = K_{n+5} - (3n+8) K_{n+3}
//   K_n^4 = K_{n+7} - (6n+20) K_{n+5} + 3(n+2)(n+4) K_{n+3}
//   K_n^5 = K_{n+9} - (10n+40) K_{n+7} + (15n^2+110n+184) K_{n+5}
// A vanishing integer multiplier annihilates its term before the Euler index
// is looked at; a negative index with a nonzero multiplier is a DomainError.
Integer closed_form(KTable& table, long n, int l);

}  // namespace morsekit
