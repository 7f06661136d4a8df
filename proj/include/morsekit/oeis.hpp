#pragma once
// OEIS cross-checks. Sequences come from the network (search API, JSON) or
// from local fixture files with the same entry shape. A computed list is
// accepted when it appears as a contiguous run inside the published terms,
// which absorbs offset disagreements.

#include <string>
#include <vector>

#include "morsekit/numbers.hpp"

namespace morsekit {

struct OeisSequence {
  std::string id;
  std::string name;
  std::vector<Integer> terms;
};

struct OeisOptions {
  bool offline = false;            // never touch the network
  std::string base_url;            // default https://oeis.org
  std::string fixture_dir;         // <dir>/<id>.json
  int timeout_seconds = 10;
};

std::string oeis_id(int number);  // 111 -> "A000111"

// Accepts either one entry object or a search envelope {"results": [...]};
// needs a "data" field with comma-separated terms.
OeisSequence parse_oeis_entry(const std::string& json_text,
                              const std::string& id);

OeisSequence load_oeis_fixture(const std::string& id, const std::string& dir);

// network only; throws std::runtime_error on transport or format failure
OeisSequence fetch_oeis(const std::string& id, const OeisOptions& opt);

// fetch unless offline, falling back to the fixture directory
OeisSequence resolve_oeis(const std::string& id, const OeisOptions& opt);

bool contains_run(const std::vector<Integer>& haystack,
                  const std::vector<Integer>& needle);

// Search by terms instead of by id: the ids of every entry whose published
// terms contain the given list as a contiguous run. Online this queries the
// search endpoint with the comma-joined terms; offline (or after a failed
// fetch) it scans the fixture directory. At least 6 terms required.
std::vector<std::string> oeis_lookup(const std::vector<Integer>& terms,
                                     const OeisOptions& opt);

}  // namespace morsekit
