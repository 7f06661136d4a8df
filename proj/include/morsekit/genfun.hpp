#pragma once
// Exponential generating functions of the K_n^l rows and the bivariate PDEs.
// Everything here is exact rational series arithmetic; "residual" means a
// coefficient grid that is identically zero when the claimed identity holds.
//
// Row EGFs K_l(t) = sum_n K_n^l t^n / n! are produced three independent ways
// (table, trig-rational closed form, differential operator applied to
// K(t) = sec t + tan t) and compared coefficientwise.
//
// Bivariate: K(x,y) = sum K_n^l x^l y^n / (l! n!) satisfies
//     K_x = (1-2x) K_yy - xy K_yyy.
// The even subtable R_n^l = K_{2n}^l satisfies R_x = (1-2x) R_y - 2xy R_yy.
// For the odd subtable S_n^l = K_{2n-1}^l the analogous equation was
// re-derived from the recurrence at odd n:
//     S_x = (1-x) S_y - 2xy S_yy        (holds identically)
// which differs from the published form (1-2x) S_y - x(2y-1) S_yy; the
// published form's residual is exposed separately so the discrepancy can be
// reported rather than hidden.

#include "morsekit/ktable.hpp"
#include "morsekit/series.hpp"

namespace morsekit {

// sum_n K_n^l t^n / n! to the given order; l = 0 starts at n = 1.
Series1 egf_from_table(KTable& table, int l, std::size_t order);

// Trig-rational closed forms, l in 1..4:
//   K_1 = 1/(1-sin t)
//   K_2 = (3 sin t - t cos t) / (1-sin t)^2
//   K_3 = 3 (sin t (3 sin t + 7) - t cos t (5 + sin t)) / (1-sin t)^3
//   K_4 = (3t^2/(1-sin t) - 3t cos t (3-sin t)/(1-sin t)^2
//          + 3(2-sin t)/(1-sin t)^2)''''
Series1 closed_form_egf(int l, std::size_t order);

// Differential-operator forms applied to k = sec + tan, l in 0..4:
//   l=0: integral(k);  l=1: k';  l=2: k''' - (t k)'';
//   l=3: (k'' - 3t k' + k)''';  l=4: (k''' - 6t k'' + (3t^2+4) k' - 3t k)''''
// Requires k.order() >= out_order + {0,1,3,5,7}[l]; throws otherwise.
Series1 apply_k_operator(int l, const Series1& k, std::size_t out_order);

// apply_k_operator with a freshly built sec+tan series of sufficient order.
Series1 operator_form_egf(int l, std::size_t order);

// Grid of K(x,y) with entry (a,b) = K_b^a / (a! b!); the undefined corner
// (0,0) is stored as 0 and is never read by any derivative below.
Series2 k_bivariate_grid(KTable& table, std::size_t order_x,
                         std::size_t order_y);

// K_x - (1-2x) K_yy + xy K_yyy truncated to (order_x, order_y).
Series2 pde_residual(KTable& table, std::size_t order_x, std::size_t order_y);

enum class ParityPde { EvenR, OddS };

// Residual of the parity subtable equation (OddS uses the derived equation).
Series2 pde_residual_parity(KTable& table, ParityPde which,
                            std::size_t order_x, std::size_t order_y);

// Residual of the published odd-subtable form; nonzero, kept for reporting.
Series2 pde_residual_odd_published(KTable& table, std::size_t order_x,
                                   std::size_t order_y);

}  // namespace morsekit
