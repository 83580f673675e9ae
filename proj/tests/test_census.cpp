#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oracle.hpp"
#include "pmz/census.hpp"

using namespace pmz;

namespace {
std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("pmz_test_") + name)).string();
}
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("factorial and unrank") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == 2432902008176640000ull);
  CHECK_THROWS_AS(factorial(21), DomainError);
  CHECK(unrank(3, 0) == parse("123"));
  CHECK(unrank(3, 5) == parse("321"));
  const auto all = oracle::all_perms(5);
  for (std::uint64_t r = 0; r < all.size(); ++r) REQUIRE(unrank(5, r) == Permutation(all[r]));
}

TEST_CASE("adjacency counts") {
  // a_n and b_n for n = 1..7 from the brute-force scan in oracle.hpp.
  const std::uint64_t a[] = {1, 1, 3, 11, 53, 309, 2119};
  const std::uint64_t b[] = {1, 0, 0, 2, 14, 90, 646};
  for (int n = 1; n <= 7; ++n) {
    const auto scan = oracle::adjacency_scan(n);
    REQUIRE(scan.a == a[n - 1]);
    REQUIRE(scan.b == b[n - 1]);
    const AdjacencyCounts lib = count_adjacency_classes(n);
    const AdjacencyCounts rec = adjacency_counts_recurrence(n);
    CHECK(lib == AdjacencyCounts{scan.a, scan.b, scan.s});
    CHECK(rec == lib);
    CHECK(lib.s == factorial(n) - 2 * lib.a + lib.b);
  }
  CHECK(count_adjacency_classes(3) == AdjacencyCounts{3, 0, 0});
  CHECK(count_adjacency_classes(4) == AdjacencyCounts{11, 2, 4});
  CHECK(count_adjacency_classes(1) == AdjacencyCounts{1, 1, 0});
  for (int n = 8; n <= 10; ++n) CHECK(count_adjacency_classes(n, 2) == adjacency_counts_recurrence(n));
  CHECK_THROWS_AS(count_adjacency_classes(kAdjacencyScanCap + 1), DomainError);
  CHECK_THROWS_AS(adjacency_counts_recurrence(21), DomainError);
  const AdjacencyCounts twenty = adjacency_counts_recurrence(20);
  CHECK(twenty.s == factorial(20) - 2 * twenty.a + twenty.b);
}

TEST_CASE("opposing-adjacency share rises toward (1 - 1/e)^2") {
  const double limit = std::pow(1 - std::exp(-1.0), 2);
  double prev = 0;
  for (int n = 1; n <= 20; ++n) {
    const auto c = adjacency_counts_recurrence(n);
    const double share = static_cast<double>(c.s) / static_cast<double>(factorial(n));
    CHECK(share >= prev);
    CHECK(share < limit);
    prev = share;
  }
  CHECK(prev > 0.36);  // 0.36205 at n = 20; the approach is slow
}

TEST_CASE("density rendering") {
  CensusRow r;
  r.total = 6;
  r.zero_count = 2;
  CHECK(r.density() == "0.3333");
  r.total = 24;
  r.zero_count = 10;
  CHECK(r.density() == "0.4167");
  r.total = 20000;
  r.zero_count = 1;
  CHECK(r.density() == "0.0001");  // 0.00005 rounds half up
  r.zero_count = 0;
  CHECK(r.density() == "0.0000");
  r.total = 3;
  r.zero_count = 3;
  CHECK(r.density() == "1.0000");
}

TEST_CASE("small censuses") {
  const char* expected[] = {"0.0000", "0.0000", "0.3333", "0.4167", "0.4833", "0.5361"};
  for (int n = 1; n <= 6; ++n) {
    const CensusRow row = zero_density(n);
    CHECK(row.density() == expected[n - 1]);
    CHECK(row.total == factorial(n));
    CHECK(row.s_n == adjacency_counts_recurrence(n).s);
    CHECK(row.certified_count <= row.zero_count);
    CHECK(row.s_n <= row.zero_count);
  }
  CHECK(zero_density(3).zero_count == 2);
  CHECK_THROWS_AS(zero_density(0), DomainError);
  CHECK_THROWS_AS(zero_density(10), DomainError);
  CHECK_THROWS_AS(zero_density(13, CensusOptions{.long_run = true}), DomainError);
}

TEST_CASE("census options do not change the row") {
  const CensusRow base = zero_density(7);
  CHECK(zero_density(7, CensusOptions{.pruned = true}) == base);
  CHECK(zero_density(7, CensusOptions{.workers = 3}) == base);
  CHECK(zero_density(6, CensusOptions{.symmetry_reduction = false}) == zero_density(6));
}

TEST_CASE("audit file") {
  const std::string path = temp_path("audit.tsv");
  CensusOptions o;
  o.audit_path = path;
  o.workers = 2;
  zero_density(4, o);
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 24);
  CHECK(lines.front() == "1234\t0");
  CHECK(lines[10] == "2413\t-3");
  CHECK(lines.back() == "4321\t0");
  std::filesystem::remove(path);
}

TEST_CASE("checkpoint and resume") {
  const std::string path = temp_path("ckpt.txt");
  std::filesystem::remove(path);
  CensusOptions o;
  o.checkpoint_path = path;
  const CensusRow full = zero_density(6, o);
  CHECK(full == zero_density(6));

  // keep the header and the first ten chunks, plus a torn line
  std::istringstream in(slurp(path));
  std::string line, kept;
  for (int i = 0; i < 12 && std::getline(in, line); ++i) kept += line + '\n';
  kept += "chunk 11 3";
  std::ofstream(path, std::ios::trunc) << kept;
  CHECK(zero_density(6, o) == full);
  CHECK(zero_density(6, o) == full);  // fully complete file

  CensusOptions other = o;
  other.pruned = true;
  CHECK_THROWS_AS(zero_density(6, other), DomainError);
  CensusOptions audit = o;
  audit.audit_path = temp_path("never.tsv");
  CHECK_THROWS_AS(zero_density(6, audit), DomainError);
  std::ofstream(path, std::ios::trunc) << "something else\n";
  CHECK_THROWS_AS(zero_density(6, o), DomainError);
  std::filesystem::remove(path);
}

TEST_CASE("tables") {
  std::vector<CensusRow> rows;
  for (int n = 1; n <= 6; ++n) rows.push_back(zero_density(n));
  CHECK(emit_table(rows, TableFormat::kText) ==
        "n d_n\n1 0.0000\n2 0.0000\n3 0.3333\n4 0.4167\n5 0.4833\n6 0.5361\n");
  CHECK(emit_table({}, TableFormat::kCsv) ==
        "n,total,zeros,density,certified,a_n,b_n,s_n,simple,simple_nonzero\n");
  const std::vector<CensusRow> four{rows[3]};
  const auto j = nlohmann::json::parse(emit_table(four, TableFormat::kJson));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"a_n", "b_n", "certified_count", "density", "n", "s_n",
                                         "simple_count", "simple_nonzero_count", "total", "zero_count"});
  CHECK(j[0]["density"] == "0.4167");
  CHECK(j[0]["zero_count"] == 10);
  CHECK(j[0]["s_n"] == 4);
  CHECK(parse_table_format("csv") == TableFormat::kCsv);
  CHECK_THROWS_AS(parse_table_format("xml"), DomainError);
}

TEST_CASE("density bound report") {
  std::vector<CensusRow> rows{zero_density(1), zero_density(4)};
  const std::string text = density_bound_report(rows);
  CHECK(text.find("1 0.0000 0.3996") != std::string::npos);
  CHECK(text.find("4 0.1667 0.3996") != std::string::npos);
  CHECK(text.find("VIOLATION") == std::string::npos);
  CensusRow bad = zero_density(4);
  bad.zero_count = 1;
  const std::vector<CensusRow> bad_rows{bad};
  CHECK(density_bound_report(bad_rows).find("VIOLATION") != std::string::npos);
}
