#include "morsekit/ktable.hpp"

#include <fstream>

#include <nlohmann/json.hpp>
#include "morsekit/euler.hpp"

namespace morsekit {

bool KTable::in_domain(long n, long l) {
  if (l < 0) return false;
  if (l == 0) return n >= 1;
  if (l == 1) return n >= -1;
  return n >= -l;
}

const Integer& KTable::euler(std::size_t idx) {
  if (idx >= euler_.size()) {
    // grow with headroom; the triangle is cheap
    euler_ = boustrophedon(idx + 16);
  }
  return euler_[idx];
}

const Integer& KTable::at(long n, long l) {
  if (!in_domain(n, l)) throw DomainError(n, l);
  auto it = memo_.find({n, l});
  if (it != memo_.end()) return it->second;
  return compute(n, l);
}

const Integer& KTable::compute(long n, long l) {
  Integer value;
  if (l == 0) {
    value = euler(static_cast<std::size_t>(n - 1));
  } else if (l == 1) {
    value = euler(static_cast<std::size_t>(n + 1));
  } else {
    Integer first = at(n + 2, l - 1);
    Integer mult = Integer(n + 2) * Integer(l - 1);
    // zero multiplier: the second factor may be outside the domain and is
    // deliberately never evaluated
    if (mult != 0) first -= mult * at(n + 2, l - 2);
    value = first;
  }
  return memo_.emplace(std::make_pair(n, l), std::move(value)).first->second;
}

Integer KTable::strata_count(long n, long l) {
  if (n < 1) throw DomainError(n, l);
  const Integer& k = at(n, l);
  Integer lf = factorial(static_cast<unsigned long>(l));
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), k.get_mpz_t(), lf.get_mpz_t());
  if (r != 0)
    throw std::domain_error("strata_count: l! does not divide K(n=" +
                            std::to_string(n) + ", l=" + std::to_string(l) +
                            ")");
  return q;
}

void KTable::save(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : memo_) {
    entries.push_back({{"n", key.first},
                       {"l", key.second},
                       {"K", to_decimal(value)}});
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("KTable::save: cannot write " + path);
  out << nlohmann::json{{"entries", entries}}.dump(1) << "\n";
}

std::size_t KTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.contains("entries")) return 0;
  std::size_t count = 0;
  for (const auto& e : doc["entries"]) {
    long n = e.at("n").get<long>();
    long l = e.at("l").get<long>();
    if (!in_domain(n, l)) continue;
    memo_[{n, l}] = Integer(e.at("K").get<std::string>());
    ++count;
  }
  return count;
}

Integer closed_form(KTable& table, long n, int l) {
  auto term = [&table, n, l](const Integer& mult, long idx) -> Integer {
    if (mult == 0) return 0;
    if (idx < 0) throw DomainError(n, l);
    return mult * table.euler(static_cast<std::size_t>(idx));
  };
  Integer N(n);
  switch (l) {
    case 2:
      return term(1, n + 3) - term(N + 2, n + 1);
    case 3:
      return term(1, n + 5) - term(3 * N + 8, n + 3);
    case 4:
      return term(1, n + 7) - term(6 * N + 20, n + 5) +
             term(3 * (N + 2) * (N + 4), n + 3);
    case 5:
      return term(1, n + 9) - term(10 * N + 40, n + 7) +
             term(15 * N * N + 110 * N + 184, n + 5);
    default:
      throw std::invalid_argument("closed_form: l must be in 2..5");
  }
}

}  // namespace morsekit
