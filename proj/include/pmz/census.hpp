#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pmz/mobius.hpp"
#include "pmz/permutation.hpp"

namespace pmz {

/// Largest n accepted by the adjacency scan.
inline constexpr int kAdjacencyScanCap = 13;
/// Largest n the zero census runs without `long_run`.
inline constexpr int kCensusDeskCap = 9;

std::uint64_t factorial(int n);

/// The n-th (0-based) permutation of length n in lexicographic order.
Permutation unrank(int n, std::uint64_t rank);

struct AdjacencyCounts {
  std::uint64_t a = 0;  ///< no up-adjacency
  std::uint64_t b = 0;  ///< adjacency-free
  std::uint64_t s = 0;  ///< opposing adjacencies
  friend bool operator==(const AdjacencyCounts&, const AdjacencyCounts&) = default;
};

/// Exhaustive scan of S_n (parallel over rank ranges).
AdjacencyCounts count_adjacency_classes(int n, unsigned workers = 1);
/// Same counts from the A000255 / A002464 recurrences; valid for n <= 20.
AdjacencyCounts adjacency_counts_recurrence(int n);

struct CensusRow {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t zero_count = 0;
  std::uint64_t certified_count = 0;
  std::uint64_t a_n = 0;
  std::uint64_t b_n = 0;
  std::uint64_t s_n = 0;
  std::uint64_t simple_count = 0;
  std::uint64_t simple_nonzero_count = 0;

  /// zero_count / total to four decimals, rounded half up.
  std::string density() const;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  bool pruned = false;
  unsigned workers = 1;
  bool symmetry_reduction = true;
  bool long_run = false;
  /// Per-permutation "<perm>\t<mu>" lines in lexicographic order.
  std::string audit_path;
  /// Completed chunks are appended here and skipped on restart.
  std::string checkpoint_path;
  /// When set, worker caches are merged into it at join.
  MobiusCache* cache = nullptr;
};

/// mu(1, pi) for every pi in S_n, aggregated.
CensusRow zero_density(int n, const CensusOptions& options = {});

/// Number of rank chunks the census splits S_n into.
std::size_t census_chunk_count(int n);

/// s_n / n! against (1 - 1/e)^2 per row, flagging any d_n < s_n / n!.
std::string density_bound_report(std::span<const CensusRow> rows);

enum class TableFormat { kCsv, kJson, kText };
TableFormat parse_table_format(const std::string& name);

std::string emit_table(std::span<const CensusRow> rows, TableFormat format);

}  // namespace pmz
