#pragma once
// Rectangular table exports. Cells outside the domain of K_n^l are omitted
// by default, printed as "?" under Mark, and a hard error under Error.

#include <optional>
#include <string>
#include <vector>

#include "morsekit/ktable.hpp"

namespace morsekit {

struct TableSelection {
  long nmin = 0;
  long nmax = 0;
  long lmin = 0;
  long lmax = 0;
};

enum class UnknownPolicy { Omit, Mark, Error };

// header n,l,K; one row per cell, sorted by (l, n), both ascending. Values
// are exact decimal strings whatever their size.
std::string export_table_csv(KTable& table, const TableSelection& sel,
                             UnknownPolicy policy);

// {"entries": [{"n": ..., "l": ..., "K": "<decimal>"}]}, same order
std::string export_table_json(KTable& table, const TableSelection& sel,
                              UnknownPolicy policy);

struct TableCell {
  long n = 0;
  long l = 0;
  std::optional<Integer> value;  // empty when the cell was exported as "?"
};

// Inverse of export_table_json. Throws on anything not matching the schema.
std::vector<TableCell> import_table_json(const std::string& text);

}  // namespace morsekit
