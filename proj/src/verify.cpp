#include "morsekit/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "morsekit/euler.hpp"
#include "morsekit/genfun.hpp"
#include "morsekit/ktable.hpp"
#include "morsekit/morsification.hpp"
#include "morsekit/pfamilies.hpp"

namespace morsekit {

namespace {

using Clock = std::chrono::steady_clock;

void expect(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

CheckResult run_one(const std::string& name,
                    const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = Clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// n = 0..-5 by l = 1..5; -1 encodes a cell outside the domain
constexpr long kNegativeTable[6][5] = {
    {1, 0, 0, 0, 0},    {1, 0, 0, 0, 0},   {-1, 1, 0, 0, 0},
    {-1, -1, 2, 0, 0},  {-1, -1, -1, 6, 0}, {-1, -1, -1, -1, 24}};

void group_recurrence(std::vector<CheckResult>& out) {
  out.push_back(run_one("zigzag-two-ways", [] {
    const auto a = boustrophedon(50);
    const auto b = euler_via_series(50);
    for (int m = 0; m <= 50; ++m)
      expect(a[m] == b[m],
             "triangle and series disagree at index " + std::to_string(m));
    return std::string("triangle matches series through index 50");
  }));
  out.push_back(run_one("boundary-rows", [] {
    KTable t;
    for (long n = 1; n <= 30; ++n)
      expect(t.at(n, 0) == boustrophedon(n - 1).back(),
             "l=0 row broken at n=" + std::to_string(n));
    for (long n = -1; n <= 30; ++n)
      expect(t.at(n, 1) == boustrophedon(n + 1).back(),
             "l=1 row broken at n=" + std::to_string(n));
    return std::string("l=0 and l=1 rows match the zigzag numbers to n=30");
  }));
  out.push_back(run_one("spot-values", [] {
    KTable t;
    expect(t.at(3, 2) == 36, "K_3^2 != 36");
    expect(t.at(1, 3) == 6, "K_1^3 != 6");
    expect(t.at(2, 3) == 48, "K_2^3 != 48");
    expect(t.at(5, 2) == 958, "K_5^2 != 958");
    return std::string("K_3^2=36 K_1^3=6 K_2^3=48 K_5^2=958");
  }));
  out.push_back(run_one("negative-n-table", [] {
    KTable t;
    for (int row = 0; row < 6; ++row)
      for (int col = 0; col < 5; ++col) {
        const long n = -row, l = col + 1;
        if (kNegativeTable[row][col] < 0) {
          expect(!KTable::in_domain(n, l), "cell unexpectedly in domain");
          bool threw = false;
          try {
            t.at(n, l);
          } catch (const DomainError&) {
            threw = true;
          }
          expect(threw, "no domain error at n=" + std::to_string(n) +
                            " l=" + std::to_string(l));
        } else {
          expect(t.at(n, l) == kNegativeTable[row][col],
                 "wrong value at n=" + std::to_string(n) +
                     " l=" + std::to_string(l));
        }
      }
    return std::string("n=0..-5, l=1..5 block reproduced, gaps rejected");
  }));
}

void group_closed_forms(std::vector<CheckResult>& out) {
  for (long l = 2; l <= 5; ++l)
    out.push_back(run_one("closed-form-l" + std::to_string(l), [l] {
      KTable t;
      for (long n = -l; n <= 20; ++n)
        expect(closed_form(t, n, l) == t.at(n, l),
               "mismatch at n=" + std::to_string(n));
      std::ostringstream d;
      d << "matches the recurrence for n=" << -l << "..20";
      return d.str();
    }));
}

void group_genfun(std::vector<CheckResult>& out, std::size_t order) {
  out.push_back(run_one("series-three-ways", [order] {
    KTable t;
    for (int l = 1; l <= 4; ++l) {
      const auto a = egf_from_table(t, l, order);
      const auto b = closed_form_egf(l, order);
      const auto c = operator_form_egf(l, order);
      expect(a == b, "table vs trig closed form differ at l=" +
                         std::to_string(l));
      expect(a == c,
             "table vs operator form differ at l=" + std::to_string(l));
    }
    const auto a0 = egf_from_table(t, 0, order);
    const auto c0 = operator_form_egf(0, order);
    expect(a0 == c0, "l=0 operator form differs from the table");
    return "table, trig, and operator series agree to order " +
           std::to_string(order);
  }));
}

void group_pde(std::vector<CheckResult>& out) {
  out.push_back(run_one("full-grid-equation", [] {
    KTable t;
    expect(pde_residual(t, 5, 12).is_zero(),
           "K_x - (1-2x)K_yy + xy K_yyy not identically zero");
    return std::string("residual vanishes on a 5x12 grid");
  }));
  out.push_back(run_one("even-rows-equation", [] {
    KTable t;
    expect(pde_residual_parity(t, ParityPde::EvenR, 5, 6).is_zero(),
           "even-index equation has nonzero residual");
    return std::string("R_x - (1-2x)R_y + 2xy R_yy vanishes on 5x6");
  }));
  out.push_back(run_one("odd-rows-equation", [] {
    KTable t;
    expect(pde_residual_parity(t, ParityPde::OddS, 5, 6).is_zero(),
           "odd-index equation has nonzero residual");
    return std::string("S_x - (1-x)S_y + 2xy S_yy vanishes on 5x6");
  }));
  out.push_back(run_one("odd-rows-published-form", [] {
    KTable t;
    const auto r = pde_residual_odd_published(t, 3, 3);
    expect(!r.is_zero(),
           "the (1-2x), x(2y-1) variant unexpectedly has zero residual");
    expect(r.at(1, 1) == Rational(-4),
           "witness coefficient at x^1 y^1 is not -4");
    return std::string(
        "variant with (1-2x), x(2y-1) fails; witness x y coefficient = -4");
  }));
}

void group_identities(std::vector<CheckResult>& out) {
  out.push_back(run_one("first-columns", [] {
    KTable t;
    for (long l = 0; l <= 8; ++l) {
      expect(t.at(1, l) == factorial(l),
             "K_1^l != l! at l=" + std::to_string(l));
      expect(t.at(2, l) == int_pow(2, l) * factorial(l),
             "K_2^l != 2^l l! at l=" + std::to_string(l));
    }
    return std::string("K_1^l = l! and K_2^l = 2^l l! for l=0..8");
  }));
  out.push_back(run_one("general-formula-explicit", [] {
    KTable t;
    const PSet pset = PSet::explicit_families(3);
    for (long l = 2; l <= 5; ++l)
      for (long n = -2; n <= 12; ++n)
        expect(general_formula(t, n, l, pset) == t.at(n, l),
               "mismatch at n=" + std::to_string(n) +
                   " l=" + std::to_string(l));
    return std::string("explicit weight polynomials cover l=2..5, n=-2..12");
  }));
  out.push_back(run_one("general-formula-fitted", [] {
    KTable t;
    const PSet pset = assembled_pset(t, 4);
    for (long n = -2; n <= 12; ++n)
      expect(general_formula(t, n, 6, pset) == t.at(n, 6),
             "mismatch at n=" + std::to_string(n));
    return std::string("fitted constant term closes the l=6 row, n=-2..12");
  }));
  out.push_back(run_one("vanishing-and-diagonal", [] {
    KTable t;
    for (long m = 1; m <= 8; ++m) {
      for (long l = m + 1; l <= 8; ++l)
        expect(t.at(-m, l) == 0, "K_{-m}^l != 0 above the diagonal");
      expect(t.at(-m, m) == factorial(m - 1),
             "K_{-m}^m != (m-1)! at m=" + std::to_string(m));
    }
    for (long l = 2; l <= 8; ++l)
      expect(t.at(0, l) == 0, "K_0^l != 0 at l=" + std::to_string(l));
    return std::string(
        "K_{-m}^l = 0 for l>m, K_{-m}^m = (m-1)!, K_0^l = 0 for l>=2 (m<=8)");
  }));
  out.push_back(run_one("diagonal-via-general-formula", [] {
    KTable t;
    const PSet pset = assembled_pset(t, 4);
    for (long m = 1; m <= 6; ++m) {
      expect(general_formula(t, -m, m, pset) == factorial(m - 1),
             "formula misses (m-1)! at m=" + std::to_string(m));
      for (long l = m + 1; l <= 6; ++l)
        expect(general_formula(t, -m, l, pset) == 0,
               "formula nonzero above the diagonal at m=" +
                   std::to_string(m) + " l=" + std::to_string(l));
    }
    return std::string(
        "negative-n identities reproduced through the weight formula, l<=6");
  }));
}

void group_oracle(std::vector<CheckResult>& out) {
  out.push_back(run_one("types-vs-table", [] {
    KTable t;
    int cells = 0;
    for (int n = 1; n - 1 <= 7; ++n)
      for (int l = 0; n - 1 + l <= 7; ++l) {
        expect(count_types(n, l) == t.at(n, l),
               "enumeration disagrees at n=" + std::to_string(n) +
                   " l=" + std::to_string(l));
        ++cells;
      }
    return "enumerated counts match the table on " + std::to_string(cells) +
           " cells (n-1+l <= 7)";
  }));
  out.push_back(run_one("kernel-vs-reference", [] {
    for (int n = 1; n - 1 <= 5; ++n)
      for (int l = 0; n - 1 + l <= 5; ++l)
        expect(count_types(n, l) == serial::count_types(n, l),
               "pruned kernel and permutation filter disagree at n=" +
                   std::to_string(n) + " l=" + std::to_string(l));
    return std::string(
        "pruned kernel equals the permutation filter for n-1+l <= 5");
  }));
  out.push_back(run_one("pinned-point-count", [] {
    KTable t;
    for (int n = 2; n - 1 <= 6; ++n)
      for (int l = 1; n - 1 + l <= 6; ++l)
        expect(count_boundary_caustic_types(n, l) ==
                   Integer(l) * (n - 1) * t.at(n, l - 1),
               "pinned-point count off at n=" + std::to_string(n) +
                   " l=" + std::to_string(l));
    return std::string("one point on a critical point: l(n-1) K_n^{l-1}");
  }));
  out.push_back(run_one("extreme-point-count", [] {
    KTable t;
    for (int n = 1; n - 1 <= 6; ++n)
      for (int l = 1; n - 1 + l <= 6; ++l)
        expect(count_extreme_boundary_types(n, l) ==
                   Integer(2) * l * t.at(n, l - 1),
               "extreme-point count off at n=" + std::to_string(n) +
                   " l=" + std::to_string(l));
    return std::string("boundary value past every critical value: 2l "
                       "K_n^{l-1}");
  }));
}

void group_divisibility(std::vector<CheckResult>& out) {
  out.push_back(run_one("factorial-divisibility", [] {
    KTable t;
    for (long n = 1; n <= 20; ++n)
      for (long l = 0; l <= 8; ++l)
        t.strata_count(n, l);  // throws if l! does not divide K_n^l
    expect(KTable().strata_count(3, 2) == 18, "K_3^2 / 2! != 18");
    return std::string("l! divides K_n^l for n=1..20, l=0..8");
  }));
}

}  // namespace

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> groups = {
      "recurrence", "closed-forms", "genfun",      "pde",
      "identities", "oracle",       "divisibility"};
  return groups;
}

std::vector<CheckResult> run_verification(const std::string& group,
                                          std::size_t order) {
  std::vector<CheckResult> out;
  const bool all = group == "all";
  bool known = all;
  if (all || group == "recurrence") group_recurrence(out), known = true;
  if (all || group == "closed-forms") group_closed_forms(out), known = true;
  if (all || group == "genfun") group_genfun(out, order), known = true;
  if (all || group == "pde") group_pde(out), known = true;
  if (all || group == "identities") group_identities(out), known = true;
  if (all || group == "oracle") group_oracle(out), known = true;
  if (all || group == "divisibility") group_divisibility(out), known = true;
  if (!known)
    throw std::invalid_argument("unknown verification group: " + group);
  return out;
}

}  // namespace morsekit
