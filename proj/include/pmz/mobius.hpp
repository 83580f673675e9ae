#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pmz/containment.hpp"
#include "pmz/permutation.hpp"

namespace pmz {

/// Raised when a Möbius sum leaves the int64 range.
class MobiusOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Memo table for Möbius values. Not thread safe: give each worker its own
/// cache and merge() them afterwards.
///
/// Principal values mu(1, pi) are stored under the least of the eight
/// symmetric images of pi when `symmetry_keys` is set. Every insert under an
/// existing key must agree with the stored value, otherwise
/// std::logic_error is thrown.
class MobiusCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::size_t entries = 0;
  };

  explicit MobiusCache(bool symmetry_keys = true) : symmetry_keys_(symmetry_keys) {}

  std::optional<std::int64_t> find(const Permutation& bottom, const Permutation& top);
  void store(const Permutation& bottom, const Permutation& top, std::int64_t value);

  std::optional<std::int64_t> find_principal(const Permutation& top);
  void store_principal(const Permutation& top, std::int64_t value);

  void merge(const MobiusCache& other);
  void clear();

  Stats stats() const;
  bool symmetry_keys() const { return symmetry_keys_; }

 private:
  std::string principal_key(const Permutation& top) const;
  static std::string pair_key(const Permutation& bottom, const Permutation& top);
  static void insert_checked(std::unordered_map<std::string, std::int64_t>& table,
                             std::string key, std::int64_t value);

  bool symmetry_keys_;
  std::unordered_map<std::string, std::int64_t> principal_;
  std::unordered_map<std::string, std::int64_t> general_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

/// mu(bottom, top). The interval is materialised once and filled shortest
/// first. With `pruned` and bottom = 1, elements carrying a zero certificate
/// contribute 0 without evaluation.
std::int64_t mobius(const Permutation& bottom, const Permutation& top, MobiusCache& cache,
                    bool pruned = false, std::size_t cap = default_element_cap());

std::int64_t mobius(const Permutation& bottom, const Permutation& top, bool pruned = false);

std::int64_t principal_mobius(const Permutation& perm, MobiusCache& cache, bool pruned = false,
                              std::size_t cap = default_element_cap());
std::int64_t principal_mobius(const Permutation& perm, bool pruned = false);

/// A finite poset over element ids 0..n-1, stored as strict down-set bitsets.
class FinitePoset {
 public:
  using Bits = boost::dynamic_bitset<>;

  /// Builds the order from a strict-order predicate; validates
  /// irreflexivity and transitivity when n <= 10^4.
  FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
              std::vector<std::string> labels = {});

  /// Transitive closure of the given cover pairs (lower, upper).
  static FinitePoset from_covers(std::size_t n,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                 std::vector<std::string> labels = {});

  std::size_t size() const { return below_.size(); }
  bool less(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }

  /// Closed interval [x, y] as a bitset.
  Bits closed_interval(std::size_t x, std::size_t y) const;

  /// Sub-poset on the kept ids, in the given order.
  FinitePoset induced(const std::vector<std::size_t>& keep) const;
  /// Removes one element; ids above it shift down by one.
  FinitePoset without(std::size_t element) const;

  const std::string& label(std::size_t id) const { return labels_[id]; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Cover pairs (lower, upper) of the order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  FinitePoset() = default;
  void validate() const;

  std::vector<Bits> below_;  ///< below_[b] = {a : a < b}
  std::vector<std::string> labels_;
};

/// mu_P(x, y) by the defining recursion; 0 when x is not below y.
std::int64_t mobius_poset(const FinitePoset& poset, std::size_t x, std::size_t y);

/// The interval [bottom, top] as an abstract poset ordered by containment,
/// labelled with str() of each permutation.
struct PermutationPoset {
  std::vector<Permutation> elements;
  FinitePoset poset;

  std::size_t index_of(const Permutation& perm) const;
};

PermutationPoset interval_poset(const Permutation& bottom, const Permutation& top);

}  // namespace pmz
