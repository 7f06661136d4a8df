#include <algorithm>
#include <numeric>
#include <sstream>

#include "morsekit/euler.hpp"
#include "morsekit/morsification.hpp"

// Reference path: generate every candidate triple and keep the ones
// is_valid_type accepts. No pruning, no insertion logic shared with the
// fast kernel, so agreement between the two is a real cross-check.

namespace morsekit::serial {

namespace {

void check(const char* who, int n, int l) {
  if (n < 1 || l < 0) {
    std::ostringstream msg;
    msg << who << ": need n >= 1 and l >= 0, got n=" << n << " l=" << l;
    throw std::invalid_argument(msg.str());
  }
  if (n - 1 + l > kMaxSymbols) {
    std::ostringstream msg;
    msg << who << ": enumeration budget exceeded, n-1+l = " << (n - 1 + l)
        << " symbols (limit " << kMaxSymbols << ")";
    throw BudgetError(msg.str());
  }
}

}  // namespace

void for_each_type(int n, int l,
                   const std::function<void(const MorsificationType&)>& fn) {
  check("serial::for_each_type", n, l);
  const auto snakes = enumerate_snakes(n);
  const auto placements = enumerate_placements(n, l);
  const int total = n - 1 + l;
  std::vector<int> base(total);
  std::iota(base.begin(), base.end(), 1);
  MorsificationType type;
  for (const auto& snake : snakes) {
    type.snake = snake;
    for (const auto& placement : placements) {
      type.placement = placement;
      auto perm = base;
      do {
        type.value_rank = perm;
        if (is_valid_type(type)) fn(type);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

Integer count_types(int n, int l) {
  long long count = 0;
  for_each_type(n, l, [&](const MorsificationType&) { ++count; });
  return Integer(static_cast<long>(count));
}

Integer count_boundary_caustic_types(int n, int l) {
  if (n < 2 || l < 1)
    throw std::invalid_argument(
        "serial::count_boundary_caustic_types: need n >= 2 and l >= 1");
  check("serial::count_boundary_caustic_types", n, l);
  // A configuration here is (pinned label, critical point it sits on,
  // type formed by the other l-1 labels); walk all three coordinates.
  long long count = 0;
  for (int pinned = 0; pinned < l; ++pinned)
    for (int at = 0; at < n - 1; ++at)
      for_each_type(n, l - 1, [&](const MorsificationType&) { ++count; });
  return Integer(static_cast<long>(count));
}

Integer count_extreme_boundary_types(int n, int l) {
  if (l < 1)
    throw std::invalid_argument(
        "serial::count_extreme_boundary_types: need l >= 1");
  check("serial::count_extreme_boundary_types", n, l);
  const int total = n - 1 + l;
  long long count = 0;
  for_each_type(n, l, [&](const MorsificationType& type) {
    for (int sym = n - 1; sym < total; ++sym) {
      if (type.value_rank[sym] == total) ++count;  // some w above every v
      if (type.value_rank[sym] == 1) ++count;      // some w below every v
    }
  });
  return Integer(static_cast<long>(count));
}

}  // namespace morsekit::serial
