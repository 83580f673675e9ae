#pragma once
// Slow, independent reference implementations used only by the tests.
// Nothing here calls into the library except for the Permutation type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "pmz/permutation.hpp"

template <>
struct doctest::StringMaker<pmz::Permutation> {
  static doctest::String convert(const pmz::Permutation& p) { return p.spaced().c_str(); }
};

namespace oracle {

using Seq = std::vector<int>;

inline Seq standardise(const Seq& s) {
  Seq sorted = s;
  std::sort(sorted.begin(), sorted.end());
  Seq out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin()) + 1;
  }
  return out;
}

// Number of index subsets of `host` whose pattern is `pat`.
inline std::uint64_t count_occurrences(const Seq& pat, const Seq& host) {
  const std::size_t k = pat.size();
  const std::size_t n = host.size();
  if (k > n) return 0;
  if (k == 0) return 1;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Seq sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(host[i]);
    }
    if (standardise(sub) == pat) ++count;
  }
  return count;
}

inline bool contains(const Seq& pat, const Seq& host) { return count_occurrences(pat, host) > 0; }

inline std::vector<Seq> all_perms(int n) {
  std::vector<Seq> out;
  Seq v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// mu(bottom, top) straight from the definition, over all permutations of
// the intermediate lengths.
class Mobius {
 public:
  std::int64_t operator()(const Seq& bottom, const Seq& top) {
    if (bottom == top) return 1;
    if (!contains(bottom, top)) return 0;
    const auto key = std::make_pair(bottom, top);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t sum = 0;
    for (int len = static_cast<int>(bottom.size()); len < static_cast<int>(top.size()); ++len) {
      for (const Seq& tau : all_perms(len)) {
        if (contains(bottom, tau) && contains(tau, top)) sum += (*this)(bottom, tau);
      }
    }
    memo_[key] = -sum;
    return -sum;
  }

 private:
  std::map<std::pair<Seq, Seq>, std::int64_t> memo_;
};

inline Seq seq(const pmz::Permutation& p) { return p.values(); }

// a_n, b_n, s_n by scanning every permutation.
struct Adjacency {
  std::uint64_t a = 0, b = 0, s = 0;
};

inline Adjacency adjacency_scan(int n) {
  Adjacency r;
  for (const Seq& p : all_perms(n)) {
    bool up = false, down = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i + 1] == p[i] + 1) up = true;
      if (p[i + 1] == p[i] - 1) down = true;
    }
    if (!up) ++r.a;
    if (!up && !down) ++r.b;
    if (up && down) ++r.s;
  }
  return r;
}

}  // namespace oracle
