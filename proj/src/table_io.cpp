#include "morsekit/table_io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace morsekit {

namespace {

void check_selection(const TableSelection& sel) {
  if (sel.nmin > sel.nmax || sel.lmin > sel.lmax)
    throw std::invalid_argument("table selection: empty range");
}

template <typename Cell, typename Unknown>
void walk(KTable& table, const TableSelection& sel, UnknownPolicy policy,
          Cell&& cell, Unknown&& unknown) {
  check_selection(sel);
  for (long l = sel.lmin; l <= sel.lmax; ++l)
    for (long n = sel.nmin; n <= sel.nmax; ++n) {
      if (!KTable::in_domain(n, l)) {
        switch (policy) {
          case UnknownPolicy::Omit:
            break;
          case UnknownPolicy::Mark:
            unknown(n, l);
            break;
          case UnknownPolicy::Error:
            throw DomainError(n, l);
        }
        continue;
      }
      cell(n, l, table.at(n, l));
    }
}

}  // namespace

std::string export_table_csv(KTable& table, const TableSelection& sel,
                             UnknownPolicy policy) {
  std::ostringstream out;
  out << "n,l,K\n";
  walk(
      table, sel, policy,
      [&](long n, long l, const Integer& v) {
        out << n << "," << l << "," << v.get_str() << "\n";
      },
      [&](long n, long l) { out << n << "," << l << ",?\n"; });
  return out.str();
}

std::string export_table_json(KTable& table, const TableSelection& sel,
                              UnknownPolicy policy) {
  nlohmann::json entries = nlohmann::json::array();
  walk(
      table, sel, policy,
      [&](long n, long l, const Integer& v) {
        entries.push_back({{"n", n}, {"l", l}, {"K", v.get_str()}});
      },
      [&](long n, long l) {
        entries.push_back({{"n", n}, {"l", l}, {"K", "?"}});
      });
  nlohmann::json doc;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::vector<TableCell> import_table_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array())
    throw std::invalid_argument("table import: no entries array");
  std::vector<TableCell> out;
  for (const auto& e : doc["entries"]) {
    if (!e.contains("n") || !e.contains("l") || !e.contains("K") ||
        !e["n"].is_number_integer() || !e["l"].is_number_integer() ||
        !e["K"].is_string())
      throw std::invalid_argument("table import: malformed entry");
    TableCell cell;
    cell.n = e["n"].get<long>();
    cell.l = e["l"].get<long>();
    const std::string k = e["K"].get<std::string>();
    if (k != "?") cell.value = Integer(k);
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace morsekit
