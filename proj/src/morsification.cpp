#include "morsekit/morsification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "morsekit/euler.hpp"

namespace morsekit {

bool interval_rising(int n, int j) { return (n - 1 - j) % 2 == 0; }

bool is_local_min(int n, int i) { return interval_rising(n, i + 1); }

std::vector<SnakePattern> enumerate_snakes(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_snakes: n must be >= 1");
  std::vector<int> ranks(n - 1);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<SnakePattern> out;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n - 1 && ok; ++i) {
      // interval i+1 separates critical points i and i+1
      if (interval_rising(n, i + 1))
        ok = ranks[i] < ranks[i + 1];
      else
        ok = ranks[i] > ranks[i + 1];
    }
    if (ok) out.push_back(SnakePattern{n, ranks});
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

std::vector<Placement> enumerate_placements(int n, int l) {
  if (n < 1 || l < 0)
    throw std::invalid_argument("enumerate_placements: need n >= 1, l >= 0");
  std::vector<Placement> out;
  out.push_back(Placement{std::vector<std::vector<int>>(n)});
  for (int label = 0; label < l; ++label) {
    std::vector<Placement> next;
    next.reserve(out.size() * (n + label));
    for (const auto& partial : out)
      for (int j = 0; j < n; ++j)
        for (size_t at = 0; at <= partial.per_interval[j].size(); ++at) {
          Placement grown = partial;
          auto& iv = grown.per_interval[j];
          iv.insert(iv.begin() + static_cast<long>(at), label);
          next.push_back(std::move(grown));
        }
    out = std::move(next);
  }
  return out;
}

bool is_valid_type(const MorsificationType& type) {
  const int n = type.snake.degree;
  if (n < 1) return false;
  if (static_cast<int>(type.snake.ranks.size()) != n - 1) return false;
  if (static_cast<int>(type.placement.per_interval.size()) != n) return false;
  int l = 0;
  for (const auto& iv : type.placement.per_interval)
    l += static_cast<int>(iv.size());
  const int total = (n - 1) + l;
  if (static_cast<int>(type.value_rank.size()) != total) return false;

  std::vector<char> seen(total + 1, 0);
  for (int r : type.value_rank) {
    if (r < 1 || r > total || seen[r]) return false;
    seen[r] = 1;
  }
  std::vector<char> lab(l, 0);
  for (const auto& iv : type.placement.per_interval)
    for (int m : iv) {
      if (m < 0 || m >= l || lab[m]) return false;
      lab[m] = 1;
    }

  // critical values ordered as the snake dictates
  for (int i = 0; i < n - 1; ++i)
    for (int k = i + 1; k < n - 1; ++k)
      if ((type.value_rank[i] < type.value_rank[k]) !=
          (type.snake.ranks[i] < type.snake.ranks[k]))
        return false;

  for (int j = 0; j < n; ++j) {
    const bool rise = interval_rising(n, j);
    // value range swept by the interval, as global ranks; 0 / total+1 mark
    // the unbounded sides
    const int lo = rise ? (j >= 1 ? type.value_rank[j - 1] : 0)
                        : (j <= n - 2 ? type.value_rank[j] : 0);
    const int hi = rise ? (j <= n - 2 ? type.value_rank[j] : total + 1)
                        : (j >= 1 ? type.value_rank[j - 1] : total + 1);
    int prev = 0;
    for (int m : type.placement.per_interval[j]) {
      const int w = type.value_rank[n - 1 + m];
      if (w <= lo || w >= hi) return false;
      if (prev != 0 && (rise ? w <= prev : w >= prev)) return false;
      prev = w;
    }
  }
  return true;
}

MorsificationType mirror_type(const MorsificationType& type) {
  const int n = type.snake.degree;
  const int s = n - 1;
  MorsificationType out;
  out.snake.degree = n;
  out.snake.ranks.assign(type.snake.ranks.rbegin(), type.snake.ranks.rend());
  out.placement.per_interval.resize(n);
  for (int j = 0; j < n; ++j) {
    auto iv = type.placement.per_interval[j];
    std::reverse(iv.begin(), iv.end());
    out.placement.per_interval[n - 1 - j] = std::move(iv);
  }
  // x -> -x fixes every value, so global ranks survive; the critical point
  // at slot i lands at slot s-1-i
  out.value_rank.resize(type.value_rank.size());
  for (int i = 0; i < s; ++i)
    out.value_rank[s - 1 - i] = type.value_rank[i];
  for (size_t m = s; m < type.value_rank.size(); ++m)
    out.value_rank[m] = type.value_rank[m];
  return out;
}

namespace {

void require_shape(const char* who, int n, int l) {
  if (n < 1 || l < 0) {
    std::ostringstream msg;
    msg << who << ": need n >= 1 and l >= 0, got n=" << n << " l=" << l;
    throw std::invalid_argument(msg.str());
  }
}

void require_budget(const char* who, int n, int l) {
  if (n - 1 + l <= kMaxSymbols) return;
  Integer snakes = boustrophedon(n - 1).back();
  Integer placements = 1;
  for (int t = 0; t < l; ++t) placements *= n + t;
  std::ostringstream msg;
  msg << who << ": enumeration budget exceeded, n-1+l = " << (n - 1 + l)
      << " symbols (limit " << kMaxSymbols << "); this would walk "
      << Integer(snakes * placements).get_str()
      << " (snake, placement) pairs";
  throw BudgetError(msg.str());
}

// Closed interval of v-progress during which interval j accepts points:
// open while [low, high) contains the count of already placed critical
// values. low = snake rank of the lower endpoint (0 if unbounded below),
// high = rank of the upper endpoint (n if unbounded above).
struct IntervalSpan {
  int low = 0;
  int high = 0;
};

std::vector<IntervalSpan> interval_spans(const SnakePattern& snake) {
  const int n = snake.degree;
  std::vector<IntervalSpan> out(n);
  for (int j = 0; j < n; ++j) {
    const bool rise = interval_rising(n, j);
    const int left = (j >= 1) ? snake.ranks[j - 1] : -1;
    const int right = (j <= n - 2) ? snake.ranks[j] : -1;
    const int lo = rise ? left : right;
    const int hi = rise ? right : left;
    out[j].low = (lo < 0) ? 0 : lo;
    out[j].high = (hi < 0) ? n : hi;
  }
  return out;
}

struct Tally {
  long long total = 0;
  long long top_w = 0;  // highest value belongs to a boundary point
  long long bot_w = 0;  // lowest value belongs to a boundary point
};

// Builds every valid value order by inserting symbols in increasing value.
// cv counts critical values placed so far; the next one always carries snake
// rank cv+1. A boundary point goes into any open interval; intervals fill in
// x-order on the rising side and reverse x-order on the falling side, which
// is exactly one queue per interval, so only the fill counts matter here.
void count_orders(const std::vector<IntervalSpan>& spans,
                  const std::vector<int>& sizes, std::vector<int>& pos,
                  int cv, int placed, int total_syms, bool first_w,
                  bool last_w, Tally& out) {
  if (placed == total_syms) {
    ++out.total;
    if (last_w) ++out.top_w;
    if (first_w) ++out.bot_w;
    return;
  }
  const int n = static_cast<int>(spans.size());
  if (cv < n - 1) {
    const int r = cv + 1;
    bool closes_unfilled = false;
    for (int j = 0; j < n; ++j)
      if (spans[j].high == r && pos[j] < sizes[j]) {
        closes_unfilled = true;
        break;
      }
    if (!closes_unfilled)
      count_orders(spans, sizes, pos, cv + 1, placed + 1, total_syms,
                   placed == 0 ? false : first_w, false, out);
  }
  for (int j = 0; j < n; ++j) {
    if (pos[j] >= sizes[j]) continue;
    if (spans[j].low <= cv && cv < spans[j].high) {
      ++pos[j];
      count_orders(spans, sizes, pos, cv, placed + 1, total_syms,
                   placed == 0 ? true : first_w, true, out);
      --pos[j];
    }
  }
}

Tally tally_all(int n, int l) {
  const auto snakes = enumerate_snakes(n);
  const auto placements = enumerate_placements(n, l);
  const long long s_count = static_cast<long long>(snakes.size());
  const long long p_count = static_cast<long long>(placements.size());
  const long long pairs = s_count * p_count;
  const int total_syms = n - 1 + l;

  long long total = 0, top_w = 0, bot_w = 0;
#pragma omp parallel for reduction(+ : total, top_w, bot_w) \
    schedule(dynamic, 64)
  for (long long idx = 0; idx < pairs; ++idx) {
    const auto& snake = snakes[idx / p_count];
    const auto& placement = placements[idx % p_count];
    const auto spans = interval_spans(snake);
    std::vector<int> sizes(n), pos(n, 0);
    for (int j = 0; j < n; ++j)
      sizes[j] = static_cast<int>(placement.per_interval[j].size());
    Tally t;
    count_orders(spans, sizes, pos, 0, 0, total_syms, false, false, t);
    total += t.total;
    top_w += t.top_w;
    bot_w += t.bot_w;
  }
  return Tally{total, top_w, bot_w};
}

}  // namespace

Integer count_types(int n, int l) {
  require_shape("count_types", n, l);
  require_budget("count_types", n, l);
  return Integer(static_cast<long>(tally_all(n, l).total));
}

Integer count_boundary_caustic_types(int n, int l) {
  require_shape("count_boundary_caustic_types", n, l);
  if (n < 2 || l < 1)
    throw std::invalid_argument(
        "count_boundary_caustic_types: need n >= 2 and l >= 1");
  require_budget("count_boundary_caustic_types", n, l);
  // The pinned point contributes its critical-point slot and a tied value,
  // nothing else; the remaining l-1 labeled points are unconstrained by it.
  Integer reduced = Integer(static_cast<long>(tally_all(n, l - 1).total));
  return Integer(l) * (n - 1) * reduced;
}

Integer count_extreme_boundary_types(int n, int l) {
  require_shape("count_extreme_boundary_types", n, l);
  if (l < 1)
    throw std::invalid_argument("count_extreme_boundary_types: need l >= 1");
  require_budget("count_extreme_boundary_types", n, l);
  const Tally t = tally_all(n, l);
  return Integer(static_cast<long>(t.top_w)) + Integer(static_cast<long>(t.bot_w));
}

}  // namespace morsekit
