#pragma once
// The polynomial coefficient families of the general expansion
//
//   K_n^l = K_{n+2l-1}
//         + sum_{k=2}^{floor(l/2)+1} w_k(l) * (sum_d p_{k,d}(l) n^d) * K_{n+2(l-k)+1},
//
//   w_k(l) = (-1)^{k-1} / (2^{k-1} (k-1)!) * l! / (l-2k+2)!
//
// Three families are known in closed form (d = k-1, k-2, k-3); the rest are
// recovered by exact linear algebra from table values (fit_p).

#include <optional>
#include <vector>

#include "morsekit/ktable.hpp"
#include "morsekit/numbers.hpp"

namespace morsekit {

// p_{k,d}(x), a polynomial of degree exactly k-d-1.
struct PPoly {
  int k = 0;
  int d = 0;
  std::vector<Rational> coeffs;  // ascending powers of x, size k-d

  Rational eval(const Rational& x) const;
};

// Closed-form families; valid for d in {k-1, k-2, k-3}:
//   p_{k,k-1}(x) = 1
//   p_{k,k-2}(x) = (k-1)/3 * (2x + 4 - k)
//   p_{k,k-3}(x) = (k-1)(k-2)/90 * (20x^2 + (72-20k)x + (5k^2-39k+64))
PPoly p_family(int k, int d);

// A (k,d)-indexed collection used by general_formula.
class PSet {
 public:
  void insert(PPoly p);
  const PPoly* find(int k, int d) const;

  // All closed-form families for k up to k_max.
  static PSet explicit_families(int k_max);

 private:
  std::vector<PPoly> entries_;
};

// w_k(l) as an exact rational. Requires l - 2k + 2 >= 0.
Rational general_weight(int k, long l);

// Evaluate the expansion above at (n, l), l >= 1. A term whose exact scalar
// coefficient vanishes contributes zero without touching its Euler index
// (same convention as the table recurrence); a nonzero coefficient with a
// negative index throws DomainError. Missing p_{k,d} -> invalid_argument.
Integer general_formula(KTable& table, long n, long l, const PSet& pset);

// Recover p_{k,d} for d = 0..k-1 from table values. For each sample
// l in {2k-2, ..., 3k-3} one exact linear system is solved whose unknowns are
// the values p_{k',d}(l) of every active term k' <= floor(l/2)+1; the k-row
// values are then interpolated to polynomials of degree exactly k-d-1 and the
// leftover sample points are checked for consistency. Throws on a singular or
// inconsistent system, reporting the sample set.
std::vector<PPoly> fit_p(KTable& table, int k);

// Explicit families where known (d >= k-3), fitted polynomials for the rest,
// for every k needed up to k_max.
PSet assembled_pset(KTable& table, int k_max);

}  // namespace morsekit
