#include "morsekit/genfun.hpp"

#include <array>
#include <stdexcept>

namespace morsekit {

Series1 egf_from_table(KTable& table, int l, std::size_t order) {
  Series1 s(order);
  for (std::size_t n = (l == 0 ? 1 : 0); n <= order; ++n)
    s[n] = make_rational(table.at(static_cast<long>(n), l), factorial(n));
  return s;
}

Series1 closed_form_egf(int l, std::size_t order) {
  std::size_t w = order + (l == 4 ? 4 : 0);  // l=4 differentiates four times
  Series1 one = Series1::monomial(1, 0, w);
  Series1 s = trig_series(Trig::Sin, w);
  Series1 c = trig_series(Trig::Cos, w);
  Series1 tc = c.shifted_up();
  Series1 d = one - s;
  switch (l) {
    case 1:
      return (one / d).truncated(order);
    case 2:
      return ((Rational(3) * s - tc) / (d * d)).truncated(order);
    case 3: {
      Series1 num = s * (Rational(3) * s + Rational(7) * one) -
                    tc * (Rational(5) * one + s);
      return (Rational(3) * num / (d * d * d)).truncated(order);
    }
    case 4: {
      Series1 t2 = Series1::monomial(3, 2, w);
      Series1 bracket = t2 / d -
                        Rational(3) * tc * (Rational(3) * one - s) / (d * d) +
                        Rational(3) * (Rational(2) * one - s) / (d * d);
      return bracket.derivative().derivative().derivative().derivative()
          .truncated(order);
    }
    default:
      throw std::invalid_argument("closed_form_egf: l must be in 1..4");
  }
}

Series1 apply_k_operator(int l, const Series1& k, std::size_t out_order) {
  static constexpr std::array<std::size_t, 5> loss{0, 1, 3, 5, 7};
  if (l < 0 || l > 4)
    throw std::invalid_argument("apply_k_operator: l must be in 0..4");
  if (k.order() < out_order + loss[static_cast<std::size_t>(l)])
    throw std::invalid_argument(
        "apply_k_operator: insufficient series order for l=" +
        std::to_string(l));
  auto t_times = [](const Series1& s) { return s.shifted_up(); };
  switch (l) {
    case 0:
      return k.integral().truncated(out_order);
    case 1:
      return k.derivative().truncated(out_order);
    case 2: {
      Series1 k3 = k.derivative().derivative().derivative();
      Series1 tk2 = t_times(k).derivative().derivative();
      return (k3 - tk2).truncated(out_order);
    }
    case 3: {
      Series1 inner = k.derivative().derivative() -
                      Rational(3) * t_times(k.derivative()) + k;
      return inner.derivative().derivative().derivative().truncated(out_order);
    }
    case 4: {
      Series1 k1 = k.derivative();
      Series1 inner = k1.derivative().derivative() -
                      Rational(6) * t_times(k1.derivative()) +
                      Rational(3) * t_times(t_times(k1)) + Rational(4) * k1 -
                      Rational(3) * t_times(k);
      return inner.derivative().derivative().derivative().derivative()
          .truncated(out_order);
    }
  }
  throw std::logic_error("unreachable");
}

Series1 operator_form_egf(int l, std::size_t order) {
  return apply_k_operator(l, trig_series(Trig::SecPlusTan, order + 7), order);
}

Series2 k_bivariate_grid(KTable& table, std::size_t order_x,
                         std::size_t order_y) {
  Series2 g(order_x, order_y);
  for (std::size_t a = 0; a <= order_x; ++a)
    for (std::size_t b = (a == 0 ? 1 : 0); b <= order_y; ++b)
      g.at(a, b) = make_rational(
          table.at(static_cast<long>(b), static_cast<long>(a)),
          factorial(a) * factorial(b));
  return g;
}

Series2 pde_residual(KTable& table, std::size_t order_x, std::size_t order_y) {
  Series2 k = k_bivariate_grid(table, order_x + 1, order_y + 3);
  Series2 kx = k.dx();
  Series2 kyy = k.dy().dy();
  Series2 kyyy = kyy.dy();
  Series2 lin = scale_poly(kyy, {{0, 0, Rational(1)}, {1, 0, Rational(-2)}});
  Series2 xy = kyyy.shifted_y().shifted_x();
  return kx.truncated(order_x, order_y) - lin.truncated(order_x, order_y) +
         xy.truncated(order_x, order_y);
}

namespace {

// Parity grids: entry (a,b) = K_{2b(+offset)}^a / (a! b!); undefined cells
// along the edge are 0 and unused by the residuals.
Series2 parity_grid(KTable& table, int y_scale_offset, std::size_t order_x,
                    std::size_t order_y) {
  Series2 g(order_x, order_y);
  for (std::size_t a = 0; a <= order_x; ++a)
    for (std::size_t b = 0; b <= order_y; ++b) {
      long n = 2 * static_cast<long>(b) + y_scale_offset;
      if (!KTable::in_domain(n, static_cast<long>(a))) continue;
      g.at(a, b) = make_rational(table.at(n, static_cast<long>(a)),
                                 factorial(a) * factorial(b));
    }
  return g;
}

}  // namespace

Series2 pde_residual_parity(KTable& table, ParityPde which,
                            std::size_t order_x, std::size_t order_y) {
  Series2 g = parity_grid(table, which == ParityPde::EvenR ? 0 : -1,
                          order_x + 1, order_y + 2);
  Series2 gx = g.dx();
  Series2 gy = g.dy();
  Series2 gyy = gy.dy();
  Series2 xy2 = Rational(2) * gyy.shifted_y().shifted_x();
  Series2 lin =
      which == ParityPde::EvenR
          ? scale_poly(gy, {{0, 0, Rational(1)}, {1, 0, Rational(-2)}})
          : scale_poly(gy, {{0, 0, Rational(1)}, {1, 0, Rational(-1)}});
  return gx.truncated(order_x, order_y) - lin.truncated(order_x, order_y) +
         xy2.truncated(order_x, order_y);
}

Series2 pde_residual_odd_published(KTable& table, std::size_t order_x,
                                   std::size_t order_y) {
  Series2 g = parity_grid(table, -1, order_x + 1, order_y + 2);
  Series2 gx = g.dx();
  Series2 gy = g.dy();
  Series2 gyy = gy.dy();
  Series2 lin = scale_poly(gy, {{0, 0, Rational(1)}, {1, 0, Rational(-2)}});
  Series2 quad =
      scale_poly(gyy, {{1, 1, Rational(2)}, {1, 0, Rational(-1)}});
  return gx.truncated(order_x, order_y) - lin.truncated(order_x, order_y) +
         quad.truncated(order_x, order_y);
}

}  // namespace morsekit
