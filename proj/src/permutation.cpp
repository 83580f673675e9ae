#include "pmz/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace pmz {

namespace {

void check_bijection(std::span<const int> values) {
  if (values.size() > kMaxLength) {
    throw DomainError("permutation longer than " + std::to_string(kMaxLength));
  }
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size()) {
      throw DomainError("value " + std::to_string(v) + " out of range 1.." +
                        std::to_string(values.size()));
    }
    if (seen[v]) throw DomainError("not a bijection: value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

std::string to_bytes(std::span<const int> values) {
  std::string bytes(values.size(), '\0');
  for (std::size_t i = 0; i < values.size(); ++i) bytes[i] = static_cast<char>(values[i]);
  return bytes;
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::span<const int>(values.begin(), values.size())) {}

Permutation::Permutation(std::span<const int> values) {
  check_bijection(values);
  bytes_ = to_bytes(values);
}

std::vector<int> Permutation::values() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = (*this)[i];
  return out;
}

std::string Permutation::str() const {
  if (size() > 9) return spaced();
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(static_cast<char>('0' + (*this)[i]));
  return out;
}

std::string Permutation::spaced() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string((*this)[i]);
  }
  return out;
}

Permutation identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation parse(std::string_view text) {
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  while (!text.empty() && is_sep(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_sep(text.back())) text.remove_suffix(1);
  if (text.empty()) return {};

  std::vector<int> values;
  if (std::none_of(text.begin(), text.end(), is_sep)) {
    // Compact notation: one digit per value.
    if (text.size() > 9) {
      throw DomainError("compact notation is only accepted for length <= 9: '" +
                        std::string(text) + "'");
    }
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw DomainError("unexpected character '" + std::string(1, c) + "'");
      }
      values.push_back(c - '0');
    }
    return Permutation(values);
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    if (end == pos) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw DomainError("bad token '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    values.push_back(v);
    if (values.size() > kMaxLength) {
      throw DomainError("permutation longer than " + std::to_string(kMaxLength));
    }
    pos = end;
  }
  return Permutation(values);
}

Permutation pattern_of(std::span<const int> seq) {
  if (seq.size() > kMaxLength) throw DomainError("sequence too long");
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::string bytes(seq.size(), '\0');
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]]) {
      throw DomainError("pattern_of: duplicate entry " + std::to_string(seq[order[rank]]));
    }
    bytes[order[rank]] = static_cast<char>(rank + 1);
  }
  return Permutation::from_bytes_unchecked(std::move(bytes));
}

Permutation restrict_to(const Permutation& perm, std::span<const std::size_t> positions) {
  std::vector<int> seq;
  seq.reserve(positions.size());
  for (std::size_t p : positions) seq.push_back(perm[p]);
  return pattern_of(seq);
}

Permutation delete_at(const Permutation& perm, std::size_t idx) {
  const std::string& src = perm.key();
  const char removed = src[idx];
  std::string out;
  out.reserve(src.size() - 1);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i == idx) continue;
    char c = src[i];
    out.push_back(c > removed ? static_cast<char>(c - 1) : c);
  }
  return Permutation::from_bytes_unchecked(std::move(out));
}

Permutation compose(const Permutation& lhs, const Permutation& rhs, SumKind kind) {
  if (lhs.size() + rhs.size() > kMaxLength) throw DomainError("sum exceeds length cap");
  std::vector<int> out;
  out.reserve(lhs.size() + rhs.size());
  const int lift_lhs = kind == SumKind::kDirect ? 0 : static_cast<int>(rhs.size());
  const int lift_rhs = kind == SumKind::kDirect ? static_cast<int>(lhs.size()) : 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) out.push_back(lhs[i] + lift_lhs);
  for (std::size_t i = 0; i < rhs.size(); ++i) out.push_back(rhs[i] + lift_rhs);
  return Permutation::from_bytes_unchecked(to_bytes(out));
}

Permutation inflate(const Permutation& base, std::span<const Permutation> parts) {
  if (parts.size() != base.size()) {
    throw DomainError("inflate: " + std::to_string(parts.size()) + " parts for length " +
                      std::to_string(base.size()));
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  if (total == 0) throw DomainError("inflate: all parts are empty");
  if (total > kMaxLength) throw DomainError("inflate: result exceeds length cap");

  // offset[v] = number of values contributed by blocks of base value < v
  std::vector<int> offset(base.size() + 2, 0);
  for (std::size_t i = 0; i < base.size(); ++i) offset[base[i] + 1] = static_cast<int>(parts[i].size());
  for (std::size_t v = 1; v < offset.size(); ++v) offset[v] += offset[v - 1];

  std::vector<int> out;
  out.reserve(total);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const int lift = offset[base[i]];
    for (std::size_t k = 0; k < parts[i].size(); ++k) out.push_back(parts[i][k] + lift);
  }
  return Permutation::from_bytes_unchecked(to_bytes(out));
}

Permutation inflate_at(const Permutation& base, std::span<const std::size_t> positions,
                       std::span<const Permutation> parts) {
  if (positions.size() != parts.size()) throw DomainError("inflate_at: positions/parts mismatch");
  std::vector<Permutation> all(base.size(), Permutation{1});
  std::vector<bool> used(base.size() + 1, false);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const std::size_t pos = positions[k];
    if (pos < 1 || pos > base.size()) {
      throw DomainError("inflate_at: position " + std::to_string(pos) + " out of range");
    }
    if (used[pos]) throw DomainError("inflate_at: duplicate position " + std::to_string(pos));
    used[pos] = true;
    all[pos - 1] = parts[k];
  }
  return inflate(base, all);
}

Adjacencies adjacencies(const Permutation& perm) {
  Adjacencies adj;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i + 1] == perm[i] + 1) adj.ups.push_back(i + 1);
    if (perm[i + 1] == perm[i] - 1) adj.downs.push_back(i + 1);
  }
  return adj;
}

bool has_opposing_adjacencies(const Permutation& perm) {
  bool up = false;
  bool down = false;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    up |= perm[i + 1] == perm[i] + 1;
    down |= perm[i + 1] == perm[i] - 1;
  }
  return up && down;
}

bool is_interval(const Permutation& perm, std::size_t start, std::size_t end) {
  if (start < 1 || end > perm.size() || start > end) return false;
  int lo = perm.at(start);
  int hi = lo;
  for (std::size_t p = start + 1; p <= end; ++p) {
    lo = std::min(lo, perm.at(p));
    hi = std::max(hi, perm.at(p));
  }
  return static_cast<std::size_t>(hi - lo) == end - start;
}

std::vector<IntervalCopy> interval_copies(const Permutation& perm, const Permutation& pattern) {
  if (pattern.empty()) throw DomainError("interval_copies: empty pattern");
  std::vector<IntervalCopy> out;
  const std::size_t len = pattern.size();
  if (len > perm.size()) return out;
  for (std::size_t start = 1; start + len - 1 <= perm.size(); ++start) {
    const std::size_t end = start + len - 1;
    if (!is_interval(perm, start, end)) continue;
    int lo = perm.at(start);
    for (std::size_t p = start; p <= end; ++p) lo = std::min(lo, perm.at(p));
    bool match = true;
    for (std::size_t k = 0; k < len && match; ++k) match = perm.at(start + k) - lo + 1 == pattern[k];
    if (match) out.push_back({start, end, pattern});
  }
  return out;
}

bool is_sum_split(const Permutation& perm, const SumSplit& s) {
  if (s.start < 1 || s.end > perm.size() || s.end < s.start + 2) return false;
  if (s.split <= s.start || s.split >= s.end) return false;
  if (!is_interval(perm, s.start, s.end)) return false;
  const int pivot = perm.at(s.split);
  for (std::size_t p = s.start; p < s.split; ++p) {
    if (perm.at(p) > pivot) return false;
  }
  for (std::size_t p = s.split + 1; p <= s.end; ++p) {
    if (perm.at(p) < pivot) return false;
  }
  return true;
}

std::optional<SumSplit> find_sum_split_interval(const Permutation& perm) {
  const std::size_t n = perm.size();
  for (std::size_t start = 1; start + 2 <= n; ++start) {
    int lo = perm.at(start);
    int hi = lo;
    for (std::size_t end = start + 1; end <= n; ++end) {
      lo = std::min(lo, perm.at(end));
      hi = std::max(hi, perm.at(end));
      if (end < start + 2 || static_cast<std::size_t>(hi - lo) != end - start) continue;
      // The split value must be exactly lo + (split - start).
      int prefix_max = perm.at(start);
      for (std::size_t split = start + 1; split < end; ++split) {
        if (perm.at(split) == lo + static_cast<int>(split - start) &&
            prefix_max < perm.at(split)) {
          return SumSplit{start, end, split};
        }
        prefix_max = std::max(prefix_max, perm.at(split));
      }
    }
  }
  return std::nullopt;
}

bool is_simple(const Permutation& perm) {
  const std::size_t n = perm.size();
  for (std::size_t start = 1; start <= n; ++start) {
    int lo = perm.at(start);
    int hi = lo;
    for (std::size_t end = start + 1; end <= n; ++end) {
      lo = std::min(lo, perm.at(end));
      hi = std::max(hi, perm.at(end));
      const std::size_t len = end - start + 1;
      if (len < n && static_cast<std::size_t>(hi - lo) == end - start) return false;
    }
  }
  return true;
}

}  // namespace pmz
