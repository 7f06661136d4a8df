#include "morsekit/fiber.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace morsekit {

namespace {

// [0,1) from the top 53 bits; std::uniform_real_distribution is not
// pinned down across standard libraries, this is
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string ranks_to_string(const std::vector<int>& ranks) {
  std::string out = "(";
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ranks[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<double> from_critical_points(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size()) + 1;
  std::vector<double> d{1.0};  // monic expansion of prod (x - xs[i])
  for (double r : xs) {
    std::vector<double> grown(d.size() + 1, 0.0);
    for (size_t k = 0; k < d.size(); ++k) {
      grown[k + 1] += d[k];
      grown[k] -= r * d[k];
    }
    d = std::move(grown);
  }
  std::vector<double> f(n + 1, 0.0);
  for (size_t k = 0; k < d.size(); ++k)
    f[k + 1] = n * d[k] / static_cast<double>(k + 1);
  return f;
}

double poly_value(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

SnakePattern classify_snake(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size()) + 1;
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument(
          "classify_snake: critical points must be strictly increasing");
  const auto f = from_critical_points(xs);
  std::vector<double> vals(xs.size());
  double scale = 1.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    vals[i] = poly_value(f, xs[i]);
    scale = std::max(scale, std::fabs(vals[i]));
  }
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t k = i + 1; k < vals.size(); ++k)
      if (std::fabs(vals[i] - vals[k]) < 1e-6 * scale)
        throw std::runtime_error(
            "classify_snake: degenerate critical values (two closer than "
            "1e-6 relative)");
  SnakePattern out;
  out.degree = n;
  out.ranks.resize(xs.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    int rank = 1;
    for (size_t k = 0; k < vals.size(); ++k)
      if (vals[k] < vals[i]) ++rank;
    out.ranks[i] = rank;
  }
  return out;
}

std::vector<double> realize_snake(const SnakePattern& snake,
                                  std::uint64_t seed) {
  const int n = snake.degree;
  const int m = n - 1;
  if (n < 1 || static_cast<int>(snake.ranks.size()) != m)
    throw std::invalid_argument("realize_snake: malformed snake");
  if (m == 0) return {};

  constexpr double kMinGap = 1e-3;   // relative critical-value separation
  constexpr double kMinStep = 1e-3;  // critical-point separation

  // (discordant pairs, -relative value gap); lexicographically smaller is
  // better, so the climb first fixes the order, then pushes values apart
  auto score = [&](const std::vector<double>& xs) {
    const auto f = from_critical_points(xs);
    std::vector<double> vals(m);
    double scale = 1.0;
    for (int i = 0; i < m; ++i) {
      vals[i] = poly_value(f, xs[i]);
      scale = std::max(scale, std::fabs(vals[i]));
    }
    int bad = 0;
    double gap = HUGE_VAL;
    for (int i = 0; i < m; ++i)
      for (int k = i + 1; k < m; ++k) {
        if ((vals[i] < vals[k]) != (snake.ranks[i] < snake.ranks[k])) ++bad;
        gap = std::min(gap, std::fabs(vals[i] - vals[k]) / scale);
      }
    if (m == 1) gap = 1.0;
    return std::make_pair(bad, -gap);
  };
  auto separated = [&](const std::vector<double>& xs) {
    for (int i = 0; i + 1 < m; ++i)
      if (xs[i + 1] - xs[i] < kMinStep) return false;
    return true;
  };

  std::mt19937_64 rng(seed);
  for (int restart = 0; restart < 400; ++restart) {
    std::vector<double> xs(m);
    for (auto& x : xs) x = -2.0 + 4.0 * unit_uniform(rng);
    std::sort(xs.begin(), xs.end());
    if (!separated(xs)) continue;
    auto best = score(xs);
    double step = 0.5;
    for (int iter = 0; iter < 5000; ++iter) {
      if (best.first == 0 && -best.second >= kMinGap) return xs;
      int c = std::min(m - 1, static_cast<int>(unit_uniform(rng) * m));
      auto trial = xs;
      trial[c] += step * (2.0 * unit_uniform(rng) - 1.0);
      std::sort(trial.begin(), trial.end());
      step = std::max(step * 0.999, 5e-3);
      if (!separated(trial)) continue;
      auto s = score(trial);
      if (s < best) {
        best = s;
        xs = std::move(trial);
      }
    }
    if (best.first == 0 && -best.second >= kMinGap) return xs;
  }
  throw std::runtime_error("realize_snake: no realization found for snake " +
                           ranks_to_string(snake.ranks));
}

std::vector<double> net_positions(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size()) + 1;
  if (n == 1) return {};
  const auto f = from_critical_points(xs);
  std::vector<double> vals(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) vals[i] = poly_value(f, xs[i]);

  std::vector<double> found(xs.begin(), xs.end());

  auto bisect = [&](double lo, double hi, double q) {
    // f(lo) and f(hi) straddle q strictly
    bool below = poly_value(f, lo) < q;
    while (hi - lo > 1e-12 * std::max({1.0, std::fabs(lo), std::fabs(hi)})) {
      const double mid = 0.5 * (lo + hi);
      if ((poly_value(f, mid) < q) == below)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto grow_left = [&](double q) {
    const double fr = poly_value(f, xs.front()) - q;
    double step = 1.0;
    double lo = xs.front() - step;
    for (int tries = 0; tries < 200; ++tries) {
      const double fl = poly_value(f, lo) - q;
      if (fl != 0.0 && std::signbit(fl) != std::signbit(fr) && fl * fr < 0.0)
        return lo;
      step *= 2.0;
      lo = xs.front() - step;
    }
    throw std::runtime_error("net_positions: no left bracket");
  };
  auto grow_right = [&](double q) {
    const double fl = poly_value(f, xs.back()) - q;
    double step = 1.0;
    double hi = xs.back() + step;
    for (int tries = 0; tries < 200; ++tries) {
      const double fr = poly_value(f, hi) - q;
      if (fr != 0.0 && fl * fr < 0.0) return hi;
      step *= 2.0;
      hi = xs.back() + step;
    }
    throw std::runtime_error("net_positions: no right bracket");
  };

  for (double q : vals) {
    // interior branches: exactly one preimage when the endpoint values
    // straddle q; equality means the critical point itself, already listed
    for (size_t j = 0; j + 1 < xs.size(); ++j) {
      const double a = poly_value(f, xs[j]) - q;
      const double b = poly_value(f, xs[j + 1]) - q;
      if (a * b < 0.0) found.push_back(bisect(xs[j], xs[j + 1], q));
    }
    // unbounded branches: monotone out to +-infinity, so q is attained iff
    // it lies beyond the boundary critical value in the outgoing direction
    {
      const double a = poly_value(f, xs.front()) - q;
      const bool outgoing_up = (n % 2 == 0);  // monic: f -> +inf on the left
                                              // iff the degree is even
      if (a != 0.0 && ((outgoing_up && a < 0.0) || (!outgoing_up && a > 0.0)))
        found.push_back(bisect(grow_left(q), xs.front(), q));
    }
    {
      const double b = poly_value(f, xs.back()) - q;
      if (b < 0.0) found.push_back(bisect(xs.back(), grow_right(q), q));
    }
  }

  std::sort(found.begin(), found.end());
  const double spread = found.back() - found.front();
  const double tol = 1e-9 * std::max(spread, 1.0);
  std::vector<double> out;
  for (double x : found)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

Rational FiberCurve::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  Rational xp = 1;
  for (int i = 0; i <= degree; ++i) {
    Rational yp = 1;
    for (int j = 0; i + j <= degree; ++j) {
      acc += coeff[i][j] * xp * yp;
      yp *= y;
    }
    xp *= x;
  }
  return acc;
}

double FiberCurve::eval_double(double x, double y) const {
  double acc = 0.0;
  double xp = 1.0;
  for (int i = 0; i <= degree; ++i) {
    double yp = 1.0;
    for (int j = 0; i + j <= degree; ++j) {
      acc += coeff_d[i][j] * xp * yp;
      yp *= y;
    }
    xp *= x;
  }
  return acc;
}

int FiberCurve::sign_at(double x, double y) const {
  double acc = 0.0, mag = 0.0;
  double xp = 1.0;
  int terms = 0;
  for (int i = 0; i <= degree; ++i) {
    double yp = 1.0;
    for (int j = 0; i + j <= degree; ++j) {
      const double t = coeff_d[i][j] * xp * yp;
      acc += t;
      mag += std::fabs(t);
      ++terms;
      yp *= y;
    }
    xp *= x;
  }
  // crude forward bound on the double evaluation error
  const double bound = mag * terms * 8.0 * DBL_EPSILON;
  if (std::fabs(acc) > bound) return acc > 0.0 ? 1 : -1;
  const Rational exact = eval(rational_from_double(x), rational_from_double(y));
  return sgn(exact);
}

FiberCurve divided_difference(const std::vector<double>& poly) {
  // f(x) - f(y) = sum_k c_k (x^k - y^k) = (x - y) sum_k c_k sum_{i+j=k-1}
  // x^i y^j, so the quotient's (i, j) coefficient is c_{i+j+1}
  const int n = static_cast<int>(poly.size()) - 1;
  FiberCurve g;
  g.degree = n - 1;
  g.coeff.assign(n, std::vector<Rational>(n, Rational(0)));
  g.coeff_d.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) {
      g.coeff[i][j] = rational_from_double(poly[i + j + 1]);
      g.coeff_d[i][j] = poly[i + j + 1];
    }
  return g;
}

FiberArrangement build_arrangement(const SnakePattern& snake,
                                   std::uint64_t seed, double margin) {
  if (margin <= 0.0)
    throw std::invalid_argument("build_arrangement: margin must be positive");
  FiberArrangement arr;
  arr.degree = snake.degree;
  arr.snake = snake;
  arr.critical_points = realize_snake(snake, seed);
  if (arr.degree >= 2 && !(classify_snake(arr.critical_points) == snake))
    throw std::runtime_error(
        "build_arrangement: realized points do not classify back to the "
        "requested snake");
  arr.poly = from_critical_points(arr.critical_points);
  arr.net = net_positions(arr.critical_points);
  arr.curve = divided_difference(arr.poly);
  const double lo = arr.net.empty() ? 0.0 : arr.net.front();
  const double hi = arr.net.empty() ? 0.0 : arr.net.back();
  const double delta = margin * std::max(hi - lo, 1.0);
  arr.box_lo = lo - delta;
  arr.box_hi = hi + delta;
  return arr;
}

namespace {

// streaming connected-component labeling over one grid row at a time
class LabelMerger {
 public:
  int fresh() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  long long count_roots() {
    long long roots = 0;
    for (size_t i = 0; i < parent_.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return roots;
  }

 private:
  std::vector<int> parent_;
};

constexpr std::int64_t kBlocked = -1;

}  // namespace

long long count_regions(const FiberArrangement& arr, int resolution) {
  if (resolution < 2)
    throw std::invalid_argument("count_regions: resolution must be >= 2");
  const double h = (arr.box_hi - arr.box_lo) / resolution;
  const auto& net = arr.net;

  // sample off-center so the diagonal can never be hit exactly:
  // x - y = (a - b) h - 0.25 h != 0
  auto sample_x = [&](int a) { return arr.box_lo + (a + 0.50) * h; };
  auto sample_y = [&](int b) { return arr.box_lo + (b + 0.75) * h; };

  auto classify = [&](double x, double y) -> std::int64_t {
    std::int64_t slab1 = 0, slab2 = 0;
    for (double p : net) {
      if (x == p || y == p) return kBlocked;
      if (x > p) ++slab1;
      if (y > p) ++slab2;
    }
    if (x == y) return kBlocked;
    const int sg = arr.curve.sign_at(x, y);
    if (sg == 0) return kBlocked;
    return slab1 | (slab2 << 8) | (std::int64_t(x > y ? 1 : 0) << 16) |
           (std::int64_t(sg > 0 ? 1 : 0) << 17);
  };

  LabelMerger merger;
  std::vector<std::int64_t> prev_class(resolution), cur_class(resolution);
  std::vector<int> prev_label(resolution), cur_label(resolution);

  for (int b = 0; b < resolution; ++b) {
    const double y = sample_y(b);
    for (int a = 0; a < resolution; ++a) {
      cur_class[a] = classify(sample_x(a), y);
      if (cur_class[a] == kBlocked) {
        cur_label[a] = -1;
        continue;
      }
      int label = -1;
      if (a > 0 && cur_class[a - 1] == cur_class[a]) label = cur_label[a - 1];
      if (b > 0 && prev_class[a] == cur_class[a] && prev_label[a] >= 0) {
        if (label < 0)
          label = prev_label[a];
        else
          merger.unite(label, prev_label[a]);
      }
      cur_label[a] = (label >= 0) ? label : merger.fresh();
    }
    std::swap(prev_class, cur_class);
    std::swap(prev_label, cur_label);
  }
  return merger.count_roots();
}

RegionCount stable_region_count(const FiberArrangement& arr,
                                int start_resolution, int max_resolution) {
  std::vector<long long> history;
  for (int res = start_resolution; res <= max_resolution; res *= 2) {
    history.push_back(count_regions(arr, res));
    const size_t k = history.size();
    if (k >= 3 && history[k - 1] == history[k - 2] &&
        history[k - 2] == history[k - 3])
      return RegionCount{history.back(), res};
  }
  std::ostringstream msg;
  msg << "stable_region_count: counts did not settle up to resolution "
      << max_resolution << ":";
  for (long long c : history) msg << " " << c;
  throw std::runtime_error(msg.str());
}

Integer knl2_geometric(int n, std::uint64_t seed) {
  if (n < 1 || n > 5)
    throw std::invalid_argument(
        "knl2_geometric: region counting supports 1 <= n <= 5");
  const auto snakes = enumerate_snakes(n);
  const int count = static_cast<int>(snakes.size());
  long long total = 0;
  bool failed = false;
  std::string first_error;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      const auto arr = build_arrangement(snakes[i], seed + i);
      total += stable_region_count(arr).regions;
    } catch (const std::exception& e) {
#pragma omp critical
      {
        if (!failed) first_error = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw std::runtime_error("knl2_geometric: " + first_error);
  return Integer(static_cast<long>(total));
}

}  // namespace morsekit
