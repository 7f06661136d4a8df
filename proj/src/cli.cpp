#include "morsekit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "morsekit/euler.hpp"
#include "morsekit/fiber.hpp"
#include "morsekit/ktable.hpp"
#include "morsekit/oeis.hpp"
#include "morsekit/svg.hpp"
#include "morsekit/table_io.hpp"
#include "morsekit/verify.hpp"

namespace morsekit::cli {

namespace {

std::string cache_file() {
  const char* dir = std::getenv("MORSEKIT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/ktable.json";
}

bool env_offline() {
  const char* v = std::getenv("MORSEKIT_OFFLINE");
  return v && std::string(v) == "1";
}

std::vector<int> parse_ranks(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
  return out;
}

int cmd_table(std::ostream& out, std::ostream& err, long nmin, long nmax,
              long lmin, long lmax, const std::string& format,
              bool with_unknown, bool strict, const std::string& out_path) {
  const UnknownPolicy policy = strict ? UnknownPolicy::Error
                               : with_unknown ? UnknownPolicy::Mark
                                              : UnknownPolicy::Omit;
  KTable table;
  const std::string cache = cache_file();
  if (!cache.empty()) {
    try {
      table.load(cache);
    } catch (const std::exception& e) {
      err << "warning: ignoring cache: " << e.what() << "\n";
    }
  }
  const TableSelection sel{nmin, nmax, lmin, lmax};
  const std::string text = format == "json"
                               ? export_table_json(table, sel, policy)
                               : export_table_csv(table, sel, policy);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  if (!cache.empty()) {
    try {
      table.save(cache);
    } catch (const std::exception& e) {
      err << "warning: cache not saved: " << e.what() << "\n";
    }
  }
  return 0;
}

int cmd_verify(std::ostream& out, const std::string& group,
               std::size_t order) {
  const auto results = run_verification(group, order);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "ok   " : "FAIL ") << std::left << std::setw(32)
        << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
        << "s) " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_oracle(std::ostream& out, std::ostream& err, int n, int l,
               bool use_serial, bool compare) {
  const Integer count =
      use_serial ? serial::count_types(n, l) : count_types(n, l);
  if (!compare) {
    out << count.get_str() << "\n";
    return 0;
  }
  KTable table;
  const Integer expected = table.at(n, l);
  out << count.get_str() << " = " << expected.get_str() << "\n";
  if (count == expected) return 0;
  err << "enumerated count disagrees with the table at n=" << n << " l=" << l
      << "\n";
  return 1;
}

int cmd_fiber(std::ostream& out, std::ostream& err, int n,
              const std::string& snake_csv, const std::string& svg_path,
              int resolution, std::uint64_t seed, double margin) {
  const auto snakes = enumerate_snakes(n);

  auto one_arrangement = [&](const SnakePattern& snake, std::uint64_t s) {
    return build_arrangement(snake, s, margin);
  };
  auto describe = [&](const SnakePattern& snake) {
    std::string d = "(";
    for (size_t i = 0; i < snake.ranks.size(); ++i) {
      if (i) d += ",";
      d += std::to_string(snake.ranks[i]);
    }
    return d + ")";
  };
  auto write_svg = [&](const FiberArrangement& arr) {
    std::ofstream f(svg_path);
    if (!f) {
      err << "cannot write " << svg_path << "\n";
      return false;
    }
    f << render_arrangement_svg(arr);
    out << "svg written to " << svg_path << "\n";
    return true;
  };

  if (!snake_csv.empty()) {
    SnakePattern snake{n, parse_ranks(snake_csv)};
    bool known = false;
    for (const auto& s : snakes) known = known || s == snake;
    if (!known) {
      err << "not a snake of degree " << n << ": " << snake_csv << "\n";
      return 2;
    }
    const auto arr = one_arrangement(snake, seed);
    const auto rc = stable_region_count(arr, resolution);
    out << "snake " << describe(snake) << ": " << arr.net.size()
        << " net positions, " << rc.regions << " regions (resolution "
        << rc.resolution << ")\n";
    if (!svg_path.empty() && !write_svg(arr)) return 2;
    return 0;
  }

  long long total = 0;
  for (size_t i = 0; i < snakes.size(); ++i) {
    const auto arr = one_arrangement(snakes[i], seed + i);
    const auto rc = stable_region_count(arr, resolution);
    out << "snake " << describe(snakes[i]) << ": " << arr.net.size()
        << " net positions, " << rc.regions << " regions (resolution "
        << rc.resolution << ")\n";
    total += rc.regions;
    if (i == 0 && !svg_path.empty() && !write_svg(arr)) return 2;
  }
  KTable table;
  const Integer expected = table.at(n, 2);
  out << "total regions = " << total << "; table value = "
      << expected.get_str() << "\n";
  if (Integer(static_cast<long>(total)) != expected) {
    err << "region total disagrees with the table at n=" << n << "\n";
    return 1;
  }
  return 0;
}

int cmd_oeis(std::ostream& out, int terms, const std::string& fixture_dir) {
  OeisOptions opt;
  opt.offline = env_offline();
  opt.fixture_dir = fixture_dir;
  if (const char* base = std::getenv("OEIS_BASE_URL"))
    if (*base) opt.base_url = base;

  struct Item {
    std::string id;
    std::string what;
    std::vector<Integer> computed;
  };
  std::vector<Item> items;
  {
    Item zigzag;
    zigzag.id = oeis_id(111);
    zigzag.what = "zigzag numbers K_m";
    const auto a = boustrophedon(terms - 1);
    zigzag.computed.assign(a.begin(), a.end());
    items.push_back(std::move(zigzag));

    Item row2;
    row2.id = oeis_id(165);
    row2.what = "row K_2^l = 2^l l!";
    KTable table;
    for (int l = 0; l < terms; ++l) row2.computed.push_back(table.at(2, l));
    items.push_back(std::move(row2));
  }

  int failures = 0;
  for (const auto& item : items) {
    try {
      const OeisSequence seq = resolve_oeis(item.id, opt);
      if (!contains_run(seq.terms, item.computed)) {
        out << item.id << " FAIL: computed " << item.what
            << " not a contiguous run of the published terms\n";
        ++failures;
        continue;
      }
      const auto ids = oeis_lookup(item.computed, opt);
      if (std::find(ids.begin(), ids.end(), item.id) == ids.end()) {
        out << item.id << " FAIL: a search by the computed terms of "
            << item.what << " does not return it\n";
        ++failures;
        continue;
      }
      out << item.id << " ok: " << terms << " terms of " << item.what
          << " found in \"" << seq.name << "\"; terms search returns "
          << item.id << "\n";
    } catch (const std::exception& e) {
      out << item.id << " FAIL: " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact tables, checks, and pictures for the numbers K_n^l"};
  app.name("morsekit");
  app.require_subcommand(1);

  auto* table_cmd =
      app.add_subcommand("table", "print a rectangle of K_n^l values");
  long nmin = 1, nmax = 12, lmin = 0, lmax = 6;
  std::string format = "csv", out_path;
  bool with_unknown = false, strict = false;
  table_cmd->add_option("--nmin", nmin, "lowest n (default 1)");
  table_cmd->add_option("--nmax", nmax, "highest n (default 12)");
  table_cmd->add_option("--lmin", lmin, "lowest l (default 0)");
  table_cmd->add_option("--lmax", lmax, "highest l (default 6)");
  table_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* unknown_opt = table_cmd->add_flag(
      "--with-unknown", with_unknown,
      "print ? for cells outside the domain instead of omitting them");
  table_cmd
      ->add_flag("--strict", strict,
                 "fail on any cell outside the domain")
      ->excludes(unknown_opt);
  table_cmd->add_option("-o,--output", out_path, "write to a file");

  auto* verify_cmd =
      app.add_subcommand("verify", "re-derive and cross-check the tables");
  std::string group = "all";
  std::size_t order = 16;
  {
    std::vector<std::string> allowed = verification_groups();
    allowed.push_back("all");
    verify_cmd
        ->add_option("group", group,
                     "check group (default all)")
        ->check(CLI::IsMember(allowed));
    verify_cmd
        ->add_option("--order", order,
                     "series order for the generating-function checks")
        ->check(CLI::Range(8, 40));
  }

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "count topological types by direct enumeration");
  int on = 1, ol = 0;
  bool use_serial = false, compare = false;
  oracle_cmd->add_option("--n", on, "degree n")->required();
  oracle_cmd->add_option("--l", ol, "boundary points l")->required();
  oracle_cmd->add_flag("--serial", use_serial,
                       "use the permutation-filter reference");
  oracle_cmd->add_flag("--compare", compare,
                       "also compute K_n^l and compare");

  auto* fiber_cmd = app.add_subcommand(
      "fiber", "count plane regions for two boundary points");
  int fn = 3, resolution = 64;
  std::string snake_csv, svg_path;
  std::uint64_t seed = 12345;
  double margin = 0.5;
  fiber_cmd->add_option("--n", fn, "degree n (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  fiber_cmd->add_option("--snake", snake_csv,
                        "rank list like 1,3,2; default: all snakes");
  fiber_cmd->add_option("--svg", svg_path,
                        "write a picture (first snake unless --snake)");
  fiber_cmd->add_option("--resolution", resolution,
                        "starting grid resolution (default 64)")
      ->check(CLI::Range(8, 4096));
  fiber_cmd->add_option("--seed", seed, "realization seed (default 12345)");
  fiber_cmd->add_option("--margin", margin,
                        "box padding relative to the net spread");

  auto* oeis_cmd = app.add_subcommand(
      "oeis", "compare computed sequences against their OEIS entries");
  int terms = 16;
  std::string fixture_dir = "fixtures/oeis";
  oeis_cmd->add_option("--terms", terms, "computed terms, at least 6")
      ->check(CLI::Range(6, 200));
  oeis_cmd->add_option("--fixtures", fixture_dir,
                       "fixture directory (default fixtures/oeis)");

  std::vector<const char*> argv;
  argv.push_back("morsekit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed())
      return cmd_table(out, err, nmin, nmax, lmin, lmax, format, with_unknown,
                       strict, out_path);
    if (verify_cmd->parsed()) return cmd_verify(out, group, order);
    if (oracle_cmd->parsed())
      return cmd_oracle(out, err, on, ol, use_serial, compare);
    if (fiber_cmd->parsed())
      return cmd_fiber(out, err, fn, snake_csv, svg_path, resolution, seed,
                       margin);
    if (oeis_cmd->parsed()) return cmd_oeis(out, terms, fixture_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace morsekit::cli
