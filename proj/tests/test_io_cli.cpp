#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "morsekit/cli.hpp"
#include "morsekit/euler.hpp"
#include "morsekit/ktable.hpp"
#include "morsekit/oeis.hpp"
#include "morsekit/table_io.hpp"

using namespace morsekit;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("csv export of a single cell") {
  KTable table;
  CHECK(export_table_csv(table, {3, 3, 2, 2}, UnknownPolicy::Omit) ==
        "n,l,K\n3,2,36\n");
}

TEST_CASE("unknown-cell policies") {
  KTable table;
  const TableSelection gappy{-3, -3, 2, 3};  // (-3,2) undefined, (-3,3)=2
  CHECK(export_table_csv(table, gappy, UnknownPolicy::Omit) ==
        "n,l,K\n-3,3,2\n");
  CHECK(export_table_csv(table, gappy, UnknownPolicy::Mark) ==
        "n,l,K\n-3,2,?\n-3,3,2\n");
  CHECK_THROWS_AS(export_table_csv(table, gappy, UnknownPolicy::Error),
                  DomainError);
  CHECK_THROWS_AS(export_table_csv(table, {1, 0, 0, 0}, UnknownPolicy::Omit),
                  std::invalid_argument);  // empty range
}

TEST_CASE("json export round-trips through a parser") {
  KTable table;
  const std::string text =
      export_table_json(table, {1, 2, 2, 3}, UnknownPolicy::Omit);
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc.contains("entries"));
  REQUIRE(doc["entries"].size() == 4);
  CHECK(doc["entries"][0]["n"] == 1);
  CHECK(doc["entries"][0]["l"] == 2);
  CHECK(doc["entries"][0]["K"] == "2");
  CHECK(doc["entries"][3]["K"] == "48");  // K_2^3

  const std::string marked =
      export_table_json(table, {-3, -3, 2, 2}, UnknownPolicy::Mark);
  CHECK(nlohmann::json::parse(marked)["entries"][0]["K"] == "?");
}

TEST_CASE("json export/import round trip") {
  KTable table;
  const TableSelection sel{-3, 2, 0, 4};
  const auto cells =
      import_table_json(export_table_json(table, sel, UnknownPolicy::Mark));
  REQUIRE(cells.size() == 30);  // Mark emits every cell of the rectangle
  std::size_t i = 0;
  for (long l = sel.lmin; l <= sel.lmax; ++l)
    for (long n = sel.nmin; n <= sel.nmax; ++n, ++i) {
      CHECK(cells[i].n == n);  // pins the (l, n) row order too
      CHECK(cells[i].l == l);
      if (KTable::in_domain(n, l)) {
        REQUIRE(cells[i].value.has_value());
        CHECK(*cells[i].value == table.at(n, l));
      } else {
        CHECK(!cells[i].value.has_value());
      }
    }

  const auto sparse =
      import_table_json(export_table_json(table, sel, UnknownPolicy::Omit));
  CHECK(sparse.size() == 23);  // the in-domain cells of the rectangle
  for (const auto& cell : sparse) {
    REQUIRE(cell.value.has_value());
    CHECK(*cell.value == table.at(cell.n, cell.l));
  }

  CHECK_THROWS_AS(import_table_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(import_table_json(R"({"entries": [{"n": 1}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      import_table_json(R"({"entries": [{"n": 1, "l": 2, "K": 3}]})"),
      std::invalid_argument);  // K must be a decimal string
  CHECK_THROWS(import_table_json("not json"));
}

TEST_CASE("sequence lookup by terms against fixtures") {
  OeisOptions opt;
  opt.offline = true;
  opt.fixture_dir = MORSEKIT_FIXTURE_DIR;

  const EulerList zig = boustrophedon(11);
  const std::vector<Integer> terms(zig.begin(), zig.end());
  const auto ids = oeis_lookup(terms, opt);
  CHECK(std::find(ids.begin(), ids.end(), "A000111") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "A000165") == ids.end());

  const std::vector<Integer> five(terms.begin(), terms.begin() + 5);
  CHECK_THROWS_AS(oeis_lookup(five, opt), std::invalid_argument);

  OeisOptions bad = opt;
  bad.fixture_dir = "no_such_dir_here";
  CHECK_THROWS_AS(oeis_lookup(terms, bad), std::runtime_error);
}

TEST_CASE("cli: table subcommand") {
  auto res = run_cli({"table", "--nmin", "3", "--nmax", "3", "--lmin", "2",
                      "--lmax", "2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("3,2,36") != std::string::npos);

  auto gappy = run_cli({"table", "--nmin=-3", "--nmax=-3", "--lmin=2",
                        "--lmax=3", "--strict"});
  CHECK(gappy.code == 2);
  CHECK(gappy.err.find("error:") != std::string::npos);

  auto marked = run_cli({"table", "--nmin=-3", "--nmax=-3", "--lmin=2",
                         "--lmax=3", "--with-unknown"});
  CHECK(marked.code == 0);
  CHECK(marked.out.find("-3,2,?") != std::string::npos);

  CHECK(run_cli({"table", "--format", "yaml"}).code == 2);
  CHECK(run_cli({"table", "--strict", "--with-unknown"}).code == 2);

  // space-separated negative bound must parse
  auto wide = run_cli({"table", "--nmin", "-5", "--nmax", "6", "--lmax", "5",
                       "--format", "csv"});
  CHECK(wide.code == 0);
  CHECK(wide.out.find("3,2,36") != std::string::npos);
}

TEST_CASE("cli: verify subcommand") {
  auto res = run_cli({"verify", "divisibility"});
  CHECK(res.code == 0);
  CHECK(res.out.find("ok") != std::string::npos);
  CHECK(res.out.find("0 failed") != std::string::npos);
  CHECK(run_cli({"verify", "no-such-group"}).code == 2);

  auto deep = run_cli({"verify", "genfun", "--order", "20"});
  CHECK(deep.code == 0);
  CHECK(deep.out.find("order 20") != std::string::npos);
  CHECK(run_cli({"verify", "genfun", "--order", "7"}).code == 2);
}

TEST_CASE("cli: oracle subcommand") {
  auto res = run_cli({"oracle", "--n", "3", "--l", "2", "--compare"});
  CHECK(res.code == 0);
  CHECK(res.out.find("36 = 36") != std::string::npos);

  auto serial = run_cli({"oracle", "--n", "3", "--l", "2", "--serial"});
  CHECK(serial.code == 0);
  CHECK(serial.out.find("36") != std::string::npos);

  auto budget = run_cli({"oracle", "--n", "3", "--l", "7"});
  CHECK(budget.code == 2);
  CHECK(budget.err.find("error:") != std::string::npos);

  CHECK(run_cli({"oracle", "--n", "3"}).code == 2);  // --l required
}

TEST_CASE("cli: fiber subcommand writes svg") {
  const std::string path = "fiber_cli_test.svg";
  std::filesystem::remove(path);
  auto res = run_cli({"fiber", "--n", "2", "--svg", path});
  CHECK(res.code == 0);
  CHECK(res.out.find("total regions = 8; table value = 8") !=
        std::string::npos);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().find("<svg") != std::string::npos);
  in.close();
  std::filesystem::remove(path);

  CHECK(run_cli({"fiber", "--n", "7"}).code == 2);  // out of range
  CHECK(run_cli({"fiber", "--n", "3", "--snake", "1,1"}).code == 2);
}

TEST_CASE("cli: usage errors and help") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("table") != std::string::npos);
}

TEST_CASE("cli: oeis against fixtures") {
  setenv("MORSEKIT_OFFLINE", "1", 1);
  auto res = run_cli({"oeis", "--terms", "12", "--fixtures",
                      MORSEKIT_FIXTURE_DIR});
  CHECK(res.code == 0);
  CHECK(res.out.find("A000111 ok") != std::string::npos);
  CHECK(res.out.find("A000165 ok") != std::string::npos);

  auto missing = run_cli({"oeis", "--fixtures", "no_such_dir_here"});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("FAIL") != std::string::npos);
  unsetenv("MORSEKIT_OFFLINE");
}

TEST_CASE("cli: table cache round-trip") {
  const std::string dir = "cache_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  setenv("MORSEKIT_CACHE_DIR", dir.c_str(), 1);

  auto first = run_cli({"table", "--nmax", "6"});
  CHECK(first.code == 0);
  CHECK(std::filesystem::exists(dir + "/ktable.json"));

  auto second = run_cli({"table", "--nmax", "6"});  // exercises the load path
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(second.err.find("warning") == std::string::npos);

  unsetenv("MORSEKIT_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
