#pragma once
// Dense truncated power series over the exact rationals, univariate and
// bivariate. Conventions, applied uniformly:
//   * a Series1 of order O stores coefficients of t^0..t^O;
//   * binary arithmetic truncates to the smaller operand order (never grows
//     silently);
//   * derivative() keeps the order and zero-pads the top coefficient, so one
//     order of accuracy is lost per application -- consumers over-provision;
//   * integral() pins the constant term to 0 and does not use the top input
//     coefficient;
//   * Series2 derivatives shrink the corresponding order by one instead
//     (callers over-provision the grid), while shift/scale operations grow
//     the shape exactly.

#include <cstddef>
#include <tuple>
#include <vector>

#include "morsekit/numbers.hpp"

namespace morsekit {

class Series1 {
 public:
  explicit Series1(std::size_t order) : c_(order + 1) {}

  static Series1 monomial(const Rational& coeff, std::size_t power,
                          std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }
  Rational& operator[](std::size_t k) { return c_.at(k); }

  Series1 truncated(std::size_t new_order) const;
  Series1 derivative() const;
  Series1 integral() const;
  Series1 shifted_up() const;  // multiply by t; top coefficient drops

  Series1 operator-() const;
  bool operator==(const Series1&) const = default;

  friend Series1 operator+(const Series1& a, const Series1& b);
  friend Series1 operator-(const Series1& a, const Series1& b);
  friend Series1 operator*(const Series1& a, const Series1& b);
  friend Series1 operator*(const Rational& s, const Series1& a);
  // long division; throws std::domain_error when b has no constant term
  friend Series1 operator/(const Series1& a, const Series1& b);

 private:
  std::vector<Rational> c_;
};

enum class Trig { Sin, Cos, SecPlusTan, InvOneMinusSin };

Series1 trig_series(Trig kind, std::size_t order);

// Coefficient grid c[a][b] of x^a y^b, a <= order_x, b <= order_y.
class Series2 {
 public:
  Series2(std::size_t order_x, std::size_t order_y)
      : ox_(order_x), oy_(order_y), c_((order_x + 1) * (order_y + 1)) {}

  std::size_t order_x() const { return ox_; }
  std::size_t order_y() const { return oy_; }
  const Rational& at(std::size_t a, std::size_t b) const {
    return c_.at(idx(a, b));
  }
  Rational& at(std::size_t a, std::size_t b) { return c_.at(idx(a, b)); }

  Series2 dx() const;  // shape (ox-1, oy)
  Series2 dy() const;  // shape (ox, oy-1)
  Series2 shifted_x() const;  // multiply by x: shape (ox+1, oy), exact
  Series2 shifted_y() const;
  Series2 truncated(std::size_t nx, std::size_t ny) const;
  bool is_zero() const;

  bool operator==(const Series2&) const = default;
  friend Series2 operator+(const Series2& a, const Series2& b);
  friend Series2 operator-(const Series2& a, const Series2& b);
  friend Series2 operator*(const Rational& s, const Series2& a);

 private:
  std::size_t idx(std::size_t a, std::size_t b) const {
    if (a > ox_ || b > oy_) throw std::out_of_range("Series2::at");
    return a * (oy_ + 1) + b;
  }
  std::size_t ox_, oy_;
  std::vector<Rational> c_;
};

// Multiply by a sparse polynomial given as (x-exponent, y-exponent, coeff)
// monomials. Exact; the shape grows by the largest exponents.
Series2 scale_poly(const Series2& s,
                   const std::vector<std::tuple<unsigned, unsigned, Rational>>&
                       monomials);

}  // namespace morsekit
