#include "doctest.h"

#include <random>
#include <sstream>

#include "hecke/table.hpp"

using hecke::Range;

TEST_CASE("Range::parse") {
  CHECK(Range::parse("3..5") == Range{3, 5});
  CHECK(Range::parse("7") == Range{7, 7});
  CHECK(Range::parse("-2..2") == Range{-2, 2});
  CHECK_THROWS_AS(Range::parse("5..3"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("a..3"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("3.."), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse(""), std::invalid_argument);
}

TEST_CASE("build_sweep skips infeasible cells and keeps lexicographic order") {
  const auto sweep = hecke::build_sweep(Range{1, 1}, Range{3, 5}, Range{2, 7});
  // (N, p) with p prime and p not dividing N.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (const auto& row : sweep.table.rows) cells.emplace_back(row.params.N(), row.params.p());
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {
      {3, 2}, {3, 5}, {3, 7}, {4, 3}, {4, 5}, {4, 7}, {5, 2}, {5, 3}, {5, 7}};
  CHECK(cells == expected);
  CHECK(sweep.skipped == 18 - expected.size());
  CHECK(sweep.table.rows.front().total == 6);
}

TEST_CASE("empty effective grid") {
  const auto sweep = hecke::build_sweep(Range{1, 1}, Range{3, 3}, Range{3, 3});
  CHECK(sweep.table.rows.empty());
  CHECK(sweep.skipped == 1);
  std::ostringstream os;
  hecke::write_csv(os, sweep.table);
  CHECK(os.str() == std::string(hecke::kCsvHeader) + "\n");
}

TEST_CASE("sweep output does not depend on the number of worker threads") {
  const auto serial = hecke::build_sweep(Range{1, 3}, Range{3, 12}, Range{2, 13}, 1);
  const auto parallel = hecke::build_sweep(Range{1, 3}, Range{3, 12}, Range{2, 13}, 5);
  CHECK(serial.table == parallel.table);
  CHECK(serial.skipped == parallel.skipped);
}

TEST_CASE("CSV and JSON-lines round-trip and agree cell for cell") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const std::int64_t g_hi = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    const std::int64_t n_lo = std::uniform_int_distribution<std::int64_t>(3, 30)(rng);
    const auto sweep = hecke::build_sweep(Range{1, g_hi}, Range{n_lo, n_lo + 6}, Range{2, 23});
    std::ostringstream csv, jsonl;
    hecke::write_csv(csv, sweep.table);
    hecke::write_jsonl(jsonl, sweep.table);
    std::istringstream csv_in(csv.str()), jsonl_in(jsonl.str());
    const auto from_csv = hecke::read_csv(csv_in);
    const auto from_json = hecke::read_jsonl(jsonl_in);
    CHECK(from_csv == sweep.table);
    CHECK(from_json == sweep.table);
  }
}

TEST_CASE("serialized numbers are plain decimal strings") {
  const auto row = hecke::hecke_bound({6, 29, 97});
  const std::string json = hecke::breakdown_json(row, -1);
  CHECK(json.find("\"total\":\"" + hecke::to_decimal(row.total) + "\"") != std::string::npos);
  CHECK(json.find("\"g\":\"6\"") != std::string::npos);
  for (const auto& cell : hecke::breakdown_cells(row)) {
    CHECK(cell.find_first_not_of("0123456789/") == std::string::npos);
  }
}

TEST_CASE("reading rejects rows that break the breakdown invariants") {
  std::istringstream bad_total(std::string(hecke::kCsvHeader) + "\n1,3,2,1/24,48,1,2,3,7\n");
  CHECK_THROWS_AS(hecke::read_csv(bad_total), std::invalid_argument);
  std::istringstream bad_sigma(std::string(hecke::kCsvHeader) + "\n1,3,2,1/24,48,1,3,3,9\n");
  CHECK_THROWS_AS(hecke::read_csv(bad_sigma), std::invalid_argument);
  std::istringstream bad_header("g,N,p\n");
  CHECK_THROWS_AS(hecke::read_csv(bad_header), std::invalid_argument);
  std::istringstream bad_params(std::string(hecke::kCsvHeader) + "\n1,4,2,1/24,96,1,4,3,12\n");
  CHECK_THROWS_AS(hecke::read_csv(bad_params), hecke::HypothesisError);
}
