#include "morsekit/pfamilies.hpp"

#include <sstream>
#include <stdexcept>

namespace morsekit {

Rational PPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

PPoly p_family(int k, int d) {
  if (d == k - 1) return {k, d, {Rational(1)}};
  if (d == k - 2) {
    Rational f = make_rational(k - 1, 3);
    return {k, d, {f * Rational(4 - k), f * 2}};
  }
  if (d == k - 3) {
    Rational f = make_rational((k - 1) * (k - 2), 90);
    return {k, d,
            {f * Rational(5 * k * k - 39 * k + 64), f * Rational(72 - 20 * k),
             f * 20}};
  }
  throw std::invalid_argument(
      "p_family: only d in {k-1, k-2, k-3} has a closed form");
}

void PSet::insert(PPoly p) {
  for (auto& e : entries_)
    if (e.k == p.k && e.d == p.d) {
      e = std::move(p);
      return;
    }
  entries_.push_back(std::move(p));
}

const PPoly* PSet::find(int k, int d) const {
  for (const auto& e : entries_)
    if (e.k == k && e.d == d) return &e;
  return nullptr;
}

PSet PSet::explicit_families(int k_max) {
  PSet set;
  for (int k = 2; k <= k_max; ++k)
    for (int d = k - 3; d <= k - 1; ++d)
      if (d >= 0) set.insert(p_family(k, d));
  return set;
}

Rational general_weight(int k, long l) {
  if (l - 2 * k + 2 < 0)
    throw std::invalid_argument("general_weight: term not active at this l");
  Integer num = factorial(static_cast<unsigned long>(l));
  Integer den = int_pow(2, k - 1) * factorial(k - 1) *
                factorial(static_cast<unsigned long>(l - 2 * k + 2));
  Rational w = make_rational(num, den);
  return (k % 2 == 0) ? -w : w;
}

Integer general_formula(KTable& table, long n, long l, const PSet& pset) {
  if (l < 1) throw std::invalid_argument("general_formula: l must be >= 1");
  auto euler_at = [&table, n, l](long idx) -> Integer {
    if (idx < 0) throw DomainError(n, l);
    return table.euler(static_cast<std::size_t>(idx));
  };
  Rational total = Rational(euler_at(n + 2 * l - 1));
  for (long k = 2; k <= l / 2 + 1; ++k) {
    Rational poly = 0;
    Rational npow = 1;
    for (long d = 0; d <= k - 1; ++d) {
      const PPoly* p = pset.find(static_cast<int>(k), static_cast<int>(d));
      if (!p)
        throw std::invalid_argument("general_formula: missing p_{" +
                                    std::to_string(k) + "," +
                                    std::to_string(d) + "}");
      poly += p->eval(Rational(l)) * npow;
      npow *= Rational(n);
    }
    Rational coeff = general_weight(static_cast<int>(k), l) * poly;
    if (coeff == 0) continue;  // zero multiplier: index never evaluated
    total += coeff * Rational(euler_at(n + 2 * (l - k) + 1));
  }
  return to_integer(total);
}

namespace {

// Exact Gauss elimination; returns the unique solution of rows * x = rhs
// (rows are augmented). Throws (with context) when singular or inconsistent.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m,
                                  std::size_t unknowns,
                                  const std::string& context) {
  std::size_t rows = m.size();
  std::vector<std::size_t> pivot_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= unknowns; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_row.push_back(c);
    ++r;
  }
  if (pivot_row.size() < unknowns)
    throw std::runtime_error("fit_p: singular system for " + context);
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][unknowns] != 0)
      throw std::runtime_error("fit_p: inconsistent system for " + context);
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i)
    x[pivot_row[i]] = m[i][unknowns] / m[i][pivot_row[i]];
  return x;
}

// Newton-free exact interpolation through (xs[i], ys[i]).
std::vector<Rational> interpolate(const std::vector<Rational>& xs,
                                  const std::vector<Rational>& ys) {
  std::size_t m = xs.size();
  std::vector<Rational> acc(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    // Lagrange basis polynomial for node i
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] -= basis[t] * xs[j];
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rational scale = ys[i] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += scale * basis[t];
  }
  return acc;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<PPoly> fit_p(KTable& table, int k) {
  if (k < 2) throw std::invalid_argument("fit_p: k must be >= 2");
  // value samples p_{k,d}(l) for l over the window below
  std::vector<Rational> sample_ls;
  std::vector<std::vector<Rational>> sample_values;  // [sample][d]
  for (long l = 2 * k - 2; l <= 3 * k - 3; ++l) {
    long m_terms = l / 2 + 1;
    // unknown layout: (k', d) for k' = 2..m_terms, d = 0..k'-1
    std::vector<std::pair<long, long>> cols;
    for (long kp = 2; kp <= m_terms; ++kp)
      for (long d = 0; d < kp; ++d) cols.emplace_back(kp, d);
    std::size_t unknowns = cols.size();
    std::ostringstream ctx;
    ctx << "k=" << k << ", l=" << l << ", n=0.." << unknowns + 2;
    std::vector<std::vector<Rational>> rows;
    for (long n = 0; n <= static_cast<long>(unknowns) + 2; ++n) {
      std::vector<Rational> row(unknowns + 1, Rational(0));
      for (std::size_t c = 0; c < unknowns; ++c) {
        auto [kp, d] = cols[c];
        Rational npow = 1;
        for (long t = 0; t < d; ++t) npow *= Rational(n);
        row[c] = general_weight(static_cast<int>(kp), l) * npow *
                 Rational(table.euler(
                     static_cast<std::size_t>(n + 2 * (l - kp) + 1)));
      }
      row[unknowns] =
          Rational(table.at(n, l)) -
          Rational(table.euler(static_cast<std::size_t>(n + 2 * l - 1)));
      rows.push_back(std::move(row));
    }
    std::vector<Rational> sol = solve_exact(std::move(rows), unknowns, ctx.str());
    std::vector<Rational> vals(k);
    for (std::size_t c = 0; c < unknowns; ++c)
      if (cols[c].first == k) vals[cols[c].second] = sol[c];
    sample_ls.push_back(Rational(l));
    sample_values.push_back(std::move(vals));
  }

  std::vector<PPoly> out;
  for (int d = 0; d < k; ++d) {
    std::size_t need = static_cast<std::size_t>(k - d);  // degree k-d-1
    std::vector<Rational> xs(sample_ls.begin(), sample_ls.begin() + need);
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < need; ++i) ys.push_back(sample_values[i][d]);
    std::vector<Rational> coeffs = interpolate(xs, ys);
    // every sample beyond the interpolation window must land on the curve
    for (std::size_t i = need; i < sample_ls.size(); ++i)
      if (poly_eval(coeffs, sample_ls[i]) != sample_values[i][d])
        throw std::runtime_error(
            "fit_p: samples not polynomial of claimed degree, k=" +
            std::to_string(k) + " d=" + std::to_string(d));
    if (coeffs.back() == 0 && coeffs.size() > 1)
      throw std::runtime_error("fit_p: degree drop for p_{" +
                               std::to_string(k) + "," + std::to_string(d) +
                               "}");
    out.push_back(PPoly{k, d, std::move(coeffs)});
  }
  return out;
}

PSet assembled_pset(KTable& table, int k_max) {
  PSet set = PSet::explicit_families(k_max);
  for (int k = 2; k <= k_max; ++k) {
    if (k - 3 <= 0) continue;  // families already cover every d
    for (auto& p : fit_p(table, k))
      if (p.d < p.k - 3) set.insert(std::move(p));
  }
  return set;
}

}  // namespace morsekit
