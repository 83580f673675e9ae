#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmz {

/// Longest permutation any operation accepts.
inline constexpr std::size_t kMaxLength = 64;

/// Raised for malformed permutations and invalid structural arguments.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of 1..n in one-line notation. n = 0 is the empty
/// permutation.
///
/// Values are stored one per byte, so the byte string doubles as the packed
/// hash key used by the caches and orders permutations of equal length
/// lexicographically.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> values);
  explicit Permutation(std::span<const int> values);

  /// Wraps an already validated byte string; no checks.
  static Permutation from_bytes_unchecked(std::string bytes) {
    Permutation p;
    p.bytes_ = std::move(bytes);
    return p;
  }

  std::size_t size() const { return bytes_.size(); }
  bool empty() const { return bytes_.empty(); }

  /// 1-based value at 1-based position.
  int at(std::size_t pos) const { return static_cast<unsigned char>(bytes_[pos - 1]); }
  /// 0-based access.
  int operator[](std::size_t idx) const { return static_cast<unsigned char>(bytes_[idx]); }

  std::vector<int> values() const;
  const std::string& key() const { return bytes_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Shorter permutations first, then lexicographic.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bytes_ < b.bytes_;
  }

  /// Compact digits for n <= 9, space separated otherwise. The empty
  /// permutation renders as "".
  std::string str() const;
  /// Always space separated.
  std::string spaced() const;

 private:
  std::string bytes_;
};

Permutation identity(std::size_t n);

/// Parses whitespace/comma separated values, or a compact digit string.
Permutation parse(std::string_view text);

/// The permutation order-isomorphic to `seq`.
Permutation pattern_of(std::span<const int> seq);
inline Permutation pattern_of(std::initializer_list<int> seq) {
  return pattern_of(std::span<const int>(seq.begin(), seq.size()));
}

/// Pattern of `perm` restricted to the given 0-based positions (increasing).
Permutation restrict_to(const Permutation& perm, std::span<const std::size_t> positions);

/// Removes the entry at 0-based index and standardises.
Permutation delete_at(const Permutation& perm, std::size_t idx);

enum class SumKind { kDirect, kSkew };

Permutation compose(const Permutation& lhs, const Permutation& rhs, SumKind kind);
inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  return compose(a, b, SumKind::kDirect);
}
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  return compose(a, b, SumKind::kSkew);
}

/// Inflation of `base` where each point is replaced by an interval copy of
/// the corresponding part; an empty part deletes the point.
Permutation inflate(const Permutation& base, std::span<const Permutation> parts);

/// Inflation at the given 1-based positions, every other point inflated by 1.
Permutation inflate_at(const Permutation& base, std::span<const std::size_t> positions,
                       std::span<const Permutation> parts);

struct Adjacencies {
  std::vector<std::size_t> ups;    ///< 1-based i with perm(i+1) = perm(i) + 1
  std::vector<std::size_t> downs;  ///< 1-based i with perm(i+1) = perm(i) - 1

  bool opposing() const { return !ups.empty() && !downs.empty(); }
  bool free() const { return ups.empty() && downs.empty(); }
};

Adjacencies adjacencies(const Permutation& perm);
bool has_opposing_adjacencies(const Permutation& perm);

/// Inclusive 1-based window of a host permutation whose values form a
/// contiguous range.
struct IntervalCopy {
  std::size_t start = 0;
  std::size_t end = 0;
  Permutation pattern;

  std::size_t length() const { return end - start + 1; }
  bool overlaps(const IntervalCopy& other) const {
    return start <= other.end && other.start <= end;
  }
  friend bool operator==(const IntervalCopy&, const IntervalCopy&) = default;
};

/// True iff positions [start, end] (1-based, inclusive) hold contiguous values.
bool is_interval(const Permutation& perm, std::size_t start, std::size_t end);

std::vector<IntervalCopy> interval_copies(const Permutation& perm, const Permutation& pattern);

struct SumSplit {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t split = 0;
  friend bool operator==(const SumSplit&, const SumSplit&) = default;
};

/// Lexicographically least interval window [start, end] of length >= 3 with
/// an interior split point such that the window is alpha + 1 + beta (direct
/// sum, alpha and beta nonempty).
std::optional<SumSplit> find_sum_split_interval(const Permutation& perm);

/// True iff [start,end] is an interval and `split` separates it as a direct sum.
bool is_sum_split(const Permutation& perm, const SumSplit& s);

bool is_simple(const Permutation& perm);

}  // namespace pmz

template <>
struct std::hash<pmz::Permutation> {
  std::size_t operator()(const pmz::Permutation& p) const noexcept {
    return std::hash<std::string>{}(p.key());
  }
};
