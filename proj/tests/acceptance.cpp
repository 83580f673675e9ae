// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if
// any gating criterion (1-7) fails; criterion 8 is reported only.
//
// PMZ_ACCEPT_N9=1 adds the optional n = 9 census row to criteria 1 and 4.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pmz/census.hpp"
#include "pmz/mobius.hpp"
#include "pmz/verify.hpp"
#include "pmz/zero_rules.hpp"

using namespace pmz;

namespace {

// Pinned limits.
constexpr double kCensusUpTo7Seconds = 60;
constexpr double kCensus8Seconds = 15 * 60;
constexpr double kVerifySeconds = 10 * 60;
constexpr double kStretchSeconds = 4 * 3600;
constexpr std::size_t kStretchElementCap = 50'000'000;
const double kShareLimit = std::pow(1 - std::exp(-1.0), 2);  // 0.39958...

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<CensusRow> g_rows;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome table_densities() {
  const char* expected[] = {"0.0000", "0.0000", "0.3333", "0.4167", "0.4833", "0.5361", "0.5742", "0.5942"};
  std::ostringstream d;
  bool ok = true;
  const auto start = Clock::now();
  double small = 0;
  for (int n = 1; n <= 8; ++n) {
    g_rows.push_back(zero_density(n));
    if (n == 7) small = since(start);
    ok &= g_rows.back().density() == expected[n - 1];
    d << g_rows.back().density() << (n < 8 ? " " : "");
  }
  const double eight = since(start) - small;
  ok &= small < kCensusUpTo7Seconds && eight < kCensus8Seconds;
  d << "; n<=7 " << small << "s, n=8 " << eight << "s";
  if (const char* v = std::getenv("PMZ_ACCEPT_N9"); v && std::string(v) == "1") {
    CensusOptions o;
    g_rows.push_back(zero_density(9, o));
    ok &= g_rows.back().density() == "0.6019";
    d << "; n=9 " << g_rows.back().density();
  }
  return {ok, d.str()};
}

Outcome opposing_zero() {
  MobiusCache cache;
  std::uint64_t checked = 0, failures = 0;
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation p = unrank(n, r);
      if (!has_opposing_adjacencies(p)) continue;
      ++checked;
      failures += principal_mobius(p, cache) != 0;
    }
  }
  return {failures == 0 && checked > 0,
          std::to_string(checked) + " permutations, " + std::to_string(failures) + " failures"};
}

Outcome adjacency() {
  const std::uint64_t a[] = {1, 1, 3, 11, 53, 309, 2119};
  const std::uint64_t b[] = {1, 0, 0, 2, 14, 90, 646};
  bool ok = true;
  for (int n = 1; n <= 10; ++n) {
    const AdjacencyCounts scan = count_adjacency_classes(n);
    const AdjacencyCounts rec = adjacency_counts_recurrence(n);
    ok &= scan == rec;
    ok &= scan.s == factorial(n) - 2 * scan.a + scan.b;
    if (n <= 7) ok &= scan.a == a[n - 1] && scan.b == b[n - 1];
  }
  for (int n = 11; n <= 20; ++n) {
    const AdjacencyCounts rec = adjacency_counts_recurrence(n);
    ok &= rec.s == factorial(n) - 2 * rec.a + rec.b;
  }
  return {ok, "scan = recurrence for n <= 10, identity for n <= 20"};
}

Outcome lower_bound() {
  bool ok = !g_rows.empty();
  for (const CensusRow& row : g_rows) ok &= row.zero_count >= row.s_n;
  double prev = -1;
  std::ostringstream d;
  for (int n = 1; n <= 10; ++n) {
    const AdjacencyCounts c = count_adjacency_classes(n);
    const double share = static_cast<double>(c.s) / static_cast<double>(factorial(n));
    ok &= share >= prev && share < kShareLimit;
    prev = share;
  }
  d << "d_n >= s_n/n! for n <= " << g_rows.size() << "; s_10/10! = " << prev << " < " << kShareLimit;
  return {ok, d.str()};
}

Outcome spot_values() {
  MobiusCache cache;
  bool ok = principal_mobius(parse("123"), cache) == 0;
  Permutation sum = parse("21");
  for (int k = 1; k <= 4; ++k) {
    ok &= principal_mobius(sum, cache) == -1;
    const PermutationPoset pp = interval_poset(parse("1"), sum);
    ok &= mobius_poset(pp.poset, 0, pp.elements.size() - 1) == -1;
    sum = direct_sum(sum, parse("21"));
  }
  ok &= principal_mobius(parse("2413"), cache) == -3;
  ok &= principal_mobius(parse("32417685"), cache) != 0;
  ok &= principal_mobius(parse("214635"), cache) == 0;
  for (const char* alpha : {"235614", "254613", "465213"}) {
    const std::vector<std::size_t> pos{2};
    const std::vector<Permutation> parts{parse(alpha)};
    ok &= principal_mobius(inflate_at(parse("24153"), pos, parts), cache) != 0;
  }
  return {ok, "mu(1,2413) = " + std::to_string(principal_mobius(parse("2413"), cache)) +
                  ", mu(1,32417685) = " + std::to_string(principal_mobius(parse("32417685"), cache))};
}

Outcome soundness() {
  MobiusCache plain(false);
  MobiusCache pruned(false);
  std::uint64_t certified = 0, unsound = 0, disagree = 0, total = 0;
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation p = unrank(n, r);
      const std::int64_t mu = principal_mobius(p, plain, false);
      disagree += principal_mobius(p, pruned, true) != mu;
      ++total;
      if (certify_zero(p)) {
        ++certified;
        unsound += mu != 0;
      }
    }
  }
  return {unsound == 0 && disagree == 0,
          std::to_string(certified) + " certificates, " + std::to_string(unsound) + " unsound; " +
              std::to_string(disagree) + " pruned/unpruned disagreements over " + std::to_string(total)};
}

Outcome verify_suite() {
  SuiteOptions o;
  o.n_max = 7;
  const auto start = Clock::now();
  const SuiteReport r = run_theorem_suites(o);
  const double secs = since(start);
  std::ostringstream d;
  int passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    if (!c.passed) d << "FAILED " << c.name << ": " << c.detail << "; ";
  }
  d << passed << "/" << r.checks.size() << " checks in " << secs << "s";
  return {r.all_passed() && secs < kVerifySeconds, d.str()};
}

Outcome stretch() {
  const Permutation w = long_nonannihilator_witness();
  const auto start = Clock::now();
  try {
    MobiusCache cache;
    const std::int64_t mu = principal_mobius(w, cache, true, kStretchElementCap);
    const double secs = since(start);
    std::ostringstream d;
    d << "mu(1, " << w.spaced() << ") = " << mu << " in " << secs << "s";
    return {mu == 1 && secs < kStretchSeconds, d.str()};
  } catch (const BudgetExceeded& e) {
    return {false, std::string("budget exceeded: ") + e.what()};
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool gating;
  };
  const std::vector<Criterion> criteria{
      {1, "zero densities n = 1..8", table_densities, true},
      {2, "opposing adjacencies give zero, |pi| <= 8", opposing_zero, true},
      {3, "adjacency counts", adjacency, true},
      {4, "opposing-adjacency lower bound", lower_bound, true},
      {5, "spot mu values", spot_values, true},
      {6, "rule soundness and pruning, |pi| <= 8", soundness, true},
      {7, "verify suite, n_max = 7", verify_suite, true},
      {8, "stretch: length-22 principal value", stretch, false},
  };
  std::cout.precision(4);
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name
              << (c.gating ? "" : " (not gating)") << ": " << o.detail << std::endl;
    if (c.gating) all &= o.pass;
  }
  return all ? 0 : 1;
}
