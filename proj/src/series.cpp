#include "morsekit/series.hpp"

#include <stdexcept>

namespace morsekit {

Series1 Series1::monomial(const Rational& coeff, std::size_t power,
                          std::size_t order) {
  Series1 s(order);
  if (power <= order) s.c_[power] = coeff;
  return s;
}

Series1 Series1::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw std::invalid_argument("Series1::truncated: order would grow");
  Series1 s(new_order);
  for (std::size_t k = 0; k <= new_order; ++k) s.c_[k] = c_[k];
  return s;
}

Series1 Series1::derivative() const {
  Series1 s(order());
  for (std::size_t k = 0; k + 1 <= order(); ++k)
    s.c_[k] = Rational(static_cast<long>(k + 1)) * c_[k + 1];
  return s;  // top coefficient padded with 0
}

Series1 Series1::integral() const {
  Series1 s(order());
  for (std::size_t k = 1; k <= order(); ++k)
    s.c_[k] = c_[k - 1] / Rational(static_cast<long>(k));
  return s;  // constant term pinned to 0
}

Series1 Series1::shifted_up() const {
  Series1 s(order());
  for (std::size_t k = 1; k <= order(); ++k) s.c_[k] = c_[k - 1];
  return s;
}

Series1 Series1::operator-() const {
  Series1 s(order());
  for (std::size_t k = 0; k <= order(); ++k) s.c_[k] = -c_[k];
  return s;
}

Series1 operator+(const Series1& a, const Series1& b) {
  Series1 s(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= s.order(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
  return s;
}

Series1 operator-(const Series1& a, const Series1& b) {
  Series1 s(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= s.order(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
  return s;
}

Series1 operator*(const Series1& a, const Series1& b) {
  Series1 s(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= s.order(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
    s.c_[k] = acc;
  }
  return s;
}

Series1 operator*(const Rational& s, const Series1& a) {
  Series1 r(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) r.c_[k] = s * a.c_[k];
  return r;
}

Series1 operator/(const Series1& a, const Series1& b) {
  if (b.c_[0] == 0)
    throw std::domain_error("Series1 division by series with zero constant term");
  Series1 q(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= q.order(); ++k) {
    Rational acc = a.c_[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= b.c_[i] * q.c_[k - i];
    q.c_[k] = acc / b.c_[0];
  }
  return q;
}

Series1 trig_series(Trig kind, std::size_t order) {
  switch (kind) {
    case Trig::Sin: {
      Series1 s(order);
      int sign = 1;
      for (std::size_t k = 1; k <= order; k += 2) {
        s[k] = make_rational(Integer(sign), factorial(k));
        sign = -sign;
      }
      return s;
    }
    case Trig::Cos: {
      Series1 s(order);
      int sign = 1;
      for (std::size_t k = 0; k <= order; k += 2) {
        s[k] = make_rational(Integer(sign), factorial(k));
        sign = -sign;
      }
      return s;
    }
    case Trig::SecPlusTan: {
      // (1 + sin t) / cos t
      Series1 one = Series1::monomial(1, 0, order);
      return (one + trig_series(Trig::Sin, order)) /
             trig_series(Trig::Cos, order);
    }
    case Trig::InvOneMinusSin: {
      Series1 one = Series1::monomial(1, 0, order);
      return one / (one - trig_series(Trig::Sin, order));
    }
  }
  throw std::invalid_argument("trig_series: bad kind");
}

Series2 Series2::dx() const {
  if (ox_ == 0) throw std::invalid_argument("Series2::dx on order_x 0");
  Series2 s(ox_ - 1, oy_);
  for (std::size_t a = 0; a < ox_; ++a)
    for (std::size_t b = 0; b <= oy_; ++b)
      s.at(a, b) = Rational(static_cast<long>(a + 1)) * at(a + 1, b);
  return s;
}

Series2 Series2::dy() const {
  if (oy_ == 0) throw std::invalid_argument("Series2::dy on order_y 0");
  Series2 s(ox_, oy_ - 1);
  for (std::size_t a = 0; a <= ox_; ++a)
    for (std::size_t b = 0; b < oy_; ++b)
      s.at(a, b) = Rational(static_cast<long>(b + 1)) * at(a, b + 1);
  return s;
}

Series2 Series2::shifted_x() const {
  Series2 s(ox_ + 1, oy_);
  for (std::size_t a = 0; a <= ox_; ++a)
    for (std::size_t b = 0; b <= oy_; ++b) s.at(a + 1, b) = at(a, b);
  return s;
}

Series2 Series2::shifted_y() const {
  Series2 s(ox_, oy_ + 1);
  for (std::size_t a = 0; a <= ox_; ++a)
    for (std::size_t b = 0; b <= oy_; ++b) s.at(a, b + 1) = at(a, b);
  return s;
}

Series2 Series2::truncated(std::size_t nx, std::size_t ny) const {
  if (nx > ox_ || ny > oy_)
    throw std::invalid_argument("Series2::truncated: shape would grow");
  Series2 s(nx, ny);
  for (std::size_t a = 0; a <= nx; ++a)
    for (std::size_t b = 0; b <= ny; ++b) s.at(a, b) = at(a, b);
  return s;
}

bool Series2::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

Series2 operator+(const Series2& a, const Series2& b) {
  if (a.ox_ != b.ox_ || a.oy_ != b.oy_)
    throw std::invalid_argument("Series2 addition: shape mismatch");
  Series2 s(a.ox_, a.oy_);
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
  return s;
}

Series2 operator-(const Series2& a, const Series2& b) {
  if (a.ox_ != b.ox_ || a.oy_ != b.oy_)
    throw std::invalid_argument("Series2 subtraction: shape mismatch");
  Series2 s(a.ox_, a.oy_);
  for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
  return s;
}

Series2 operator*(const Rational& s, const Series2& a) {
  Series2 r(a.ox_, a.oy_);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = s * a.c_[i];
  return r;
}

Series2 scale_poly(
    const Series2& s,
    const std::vector<std::tuple<unsigned, unsigned, Rational>>& monomials) {
  unsigned mx = 0, my = 0;
  for (const auto& [ex, ey, c] : monomials) {
    mx = std::max(mx, ex);
    my = std::max(my, ey);
  }
  Series2 r(s.order_x() + mx, s.order_y() + my);
  for (const auto& [ex, ey, c] : monomials)
    for (std::size_t a = 0; a <= s.order_x(); ++a)
      for (std::size_t b = 0; b <= s.order_y(); ++b)
        r.at(a + ex, b + ey) += c * s.at(a, b);
  return r;
}

}  // namespace morsekit
