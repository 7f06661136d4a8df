#include "morsekit/oeis.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace morsekit {

std::string oeis_id(int number) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "A%06d", number);
  return buf;
}

OeisSequence parse_oeis_entry(const std::string& json_text,
                              const std::string& id) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(id + ": response is not JSON: " + e.what());
  }
  nlohmann::json entry = doc;
  if (doc.is_object() && doc.contains("results")) {
    const auto& results = doc["results"];
    if (!results.is_array() || results.empty())
      throw std::runtime_error(id + ": empty search result");
    entry = results[0];
  }
  if (!entry.is_object() || !entry.contains("data") ||
      !entry["data"].is_string())
    throw std::runtime_error(id + ": entry has no data field");

  OeisSequence seq;
  seq.id = id;
  if (entry.contains("name") && entry["name"].is_string())
    seq.name = entry["name"].get<std::string>();

  std::istringstream data(entry["data"].get<std::string>());
  std::string token;
  while (std::getline(data, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    try {
      seq.terms.emplace_back(token.substr(a, b - a + 1));
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(id + ": malformed term '" + token + "'");
    }
  }
  if (seq.terms.empty()) throw std::runtime_error(id + ": no terms parsed");
  return seq;
}

OeisSequence load_oeis_fixture(const std::string& id, const std::string& dir) {
  const std::string path = dir + "/" + id + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error(id + ": no fixture at " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_oeis_entry(body.str(), id);
}

OeisSequence fetch_oeis(const std::string& id, const OeisOptions& opt) {
  const std::string base =
      opt.base_url.empty() ? "https://oeis.org" : opt.base_url;
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base.rfind("https://", 0) == 0)
    throw std::runtime_error(id + ": built without TLS, cannot fetch " + base);
#endif
  httplib::Client client(base);
  client.set_connection_timeout(opt.timeout_seconds, 0);
  client.set_read_timeout(opt.timeout_seconds, 0);
  client.set_follow_location(true);
  const std::string path = "/search?q=id:" + id + "&fmt=json";
  auto res = client.Get(path);
  if (!res)
    throw std::runtime_error(id + ": request to " + base + " failed: " +
                             httplib::to_string(res.error()));
  if (res->status != 200)
    throw std::runtime_error(id + ": " + base + path + " returned status " +
                             std::to_string(res->status));
  return parse_oeis_entry(res->body, id);
}

OeisSequence resolve_oeis(const std::string& id, const OeisOptions& opt) {
  if (opt.offline) return load_oeis_fixture(id, opt.fixture_dir);
  std::string fetch_error;
  try {
    return fetch_oeis(id, opt);
  } catch (const std::exception& e) {
    fetch_error = e.what();
  }
  try {
    return load_oeis_fixture(id, opt.fixture_dir);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) +
                             " (after fetch failure: " + fetch_error + ")");
  }
}

bool contains_run(const std::vector<Integer>& haystack,
                  const std::vector<Integer>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (size_t start = 0; start + needle.size() <= haystack.size(); ++start) {
    bool all = true;
    for (size_t i = 0; i < needle.size() && all; ++i)
      all = haystack[start + i] == needle[i];
    if (all) return true;
  }
  return false;
}

namespace {

std::string join_terms(const std::vector<Integer>& terms) {
  std::string q;
  for (const auto& t : terms) {
    if (!q.empty()) q += ",";
    q += t.get_str();
  }
  return q;
}

std::vector<std::string> lookup_online(const std::vector<Integer>& terms,
                                       const OeisOptions& opt) {
  const std::string base =
      opt.base_url.empty() ? "https://oeis.org" : opt.base_url;
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (base.rfind("https://", 0) == 0)
    throw std::runtime_error("oeis_lookup: built without TLS, cannot fetch " +
                             base);
#endif
  httplib::Client client(base);
  client.set_connection_timeout(opt.timeout_seconds, 0);
  client.set_read_timeout(opt.timeout_seconds, 0);
  client.set_follow_location(true);
  const std::string path = "/search?q=" + join_terms(terms) + "&fmt=json";
  auto res = client.Get(path);
  if (!res)
    throw std::runtime_error("oeis_lookup: request to " + base + " failed: " +
                             httplib::to_string(res.error()));
  if (res->status != 200)
    throw std::runtime_error("oeis_lookup: " + base + " returned status " +
                             std::to_string(res->status));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("oeis_lookup: response is not "
                                         "JSON: ") +
                             e.what());
  }
  const nlohmann::json* entries = &doc;
  if (doc.is_object() && doc.contains("results")) entries = &doc["results"];
  if (!entries->is_array())
    throw std::runtime_error("oeis_lookup: unexpected response shape");
  std::vector<std::string> ids;
  for (const auto& e : *entries)
    if (e.is_object() && e.contains("number") &&
        e["number"].is_number_integer())
      ids.push_back(oeis_id(e["number"].get<int>()));
  return ids;
}

std::vector<std::string> lookup_fixtures(const std::vector<Integer>& terms,
                                         const std::string& dir) {
  if (dir.empty())
    throw std::runtime_error("oeis_lookup: no fixture directory configured");
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("oeis_lookup: no fixture directory at " + dir);
  std::vector<std::string> ids;
  for (const auto& file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() != ".json") continue;
    const std::string id = file.path().stem().string();
    const OeisSequence seq = load_oeis_fixture(id, dir);
    if (contains_run(seq.terms, terms)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::vector<std::string> oeis_lookup(const std::vector<Integer>& terms,
                                     const OeisOptions& opt) {
  if (terms.size() < 6)
    throw std::invalid_argument("oeis_lookup: need at least 6 terms");
  if (opt.offline) return lookup_fixtures(terms, opt.fixture_dir);
  std::string fetch_error;
  try {
    return lookup_online(terms, opt);
  } catch (const std::exception& e) {
    fetch_error = e.what();
  }
  try {
    return lookup_fixtures(terms, opt.fixture_dir);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) +
                             " (after fetch failure: " + fetch_error + ")");
  }
}

}  // namespace morsekit
