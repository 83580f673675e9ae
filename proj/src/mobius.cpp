#include "pmz/mobius.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pmz/symmetry.hpp"
#include "pmz/zero_rules.hpp"

namespace pmz {

// ---------------------------------------------------------------- cache

std::string MobiusCache::principal_key(const Permutation& top) const {
  return symmetry_keys_ ? symmetry_canonical(top).key() : top.key();
}

std::string MobiusCache::pair_key(const Permutation& bottom, const Permutation& top) {
  std::string key = bottom.key();
  key.push_back('\0');
  key += top.key();
  return key;
}

void MobiusCache::insert_checked(std::unordered_map<std::string, std::int64_t>& table,
                                 std::string key, std::int64_t value) {
  auto [it, inserted] = table.try_emplace(std::move(key), value);
  if (!inserted && it->second != value) {
    throw std::logic_error("Möbius cache: conflicting values for one key");
  }
}

std::optional<std::int64_t> MobiusCache::find(const Permutation& bottom, const Permutation& top) {
  if (bottom.size() == 1) return find_principal(top);
  auto it = general_.find(pair_key(bottom, top));
  if (it == general_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MobiusCache::store(const Permutation& bottom, const Permutation& top, std::int64_t value) {
  if (bottom.size() == 1) {
    store_principal(top, value);
    return;
  }
  insert_checked(general_, pair_key(bottom, top), value);
}

std::optional<std::int64_t> MobiusCache::find_principal(const Permutation& top) {
  auto it = principal_.find(principal_key(top));
  if (it == principal_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MobiusCache::store_principal(const Permutation& top, std::int64_t value) {
  insert_checked(principal_, principal_key(top), value);
}

void MobiusCache::merge(const MobiusCache& other) {
  if (other.symmetry_keys_ != symmetry_keys_) {
    throw std::logic_error("Möbius cache: merging caches with different key schemes");
  }
  for (const auto& [k, v] : other.principal_) insert_checked(principal_, k, v);
  for (const auto& [k, v] : other.general_) insert_checked(general_, k, v);
}

void MobiusCache::clear() {
  principal_.clear();
  general_.clear();
  hits_ = misses_ = 0;
}

MobiusCache::Stats MobiusCache::stats() const {
  return {hits_, misses_, principal_.size() + general_.size()};
}

// ---------------------------------------------------------------- evaluator

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw MobiusOverflow("Möbius sum overflows int64");
  return out;
}

// Bottom-up evaluation over one materialised interval.
class IntervalEvaluator {
 public:
  IntervalEvaluator(const Permutation& bottom, const LayeredInterval& interval, MobiusCache& cache,
                    bool pruned)
      : bottom_(bottom), cache_(cache), pruned_(pruned && bottom.size() == 1) {
    elements_ = interval.flatten();
    index_.reserve(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
    children_.resize(elements_.size());
    expanded_.assign(elements_.size(), false);
    stamp_.assign(elements_.size(), 0);
    value_.assign(elements_.size(), 0);
  }

  std::int64_t run() {
    for (std::size_t k = 0; k < elements_.size(); ++k) value_[k] = evaluate(k);
    return value_.back();
  }

 private:
  std::int64_t evaluate(std::size_t k) {
    const Permutation& tau = elements_[k];
    if (tau == bottom_) return 1;
    if (auto hit = cache_.find(bottom_, tau)) return *hit;
    std::int64_t mu = 0;
    if (pruned_ && certify_zero(tau)) {
      mu = 0;
    } else {
      mu = -strict_down_sum(k);
    }
    cache_.store(bottom_, tau, mu);
    return mu;
  }

  const std::vector<std::size_t>& children(std::size_t k) {
    if (!expanded_[k]) {
      for (const Permutation& child : single_deletions(elements_[k])) {
        auto it = index_.find(child);
        if (it != index_.end()) children_[k].push_back(it->second);
      }
      expanded_[k] = true;
    }
    return children_[k];
  }

  // Sum of value_ over [bottom, tau) by DFS through single deletions.
  std::int64_t strict_down_sum(std::size_t k) {
    ++epoch_;
    stack_.clear();
    stamp_[k] = epoch_;
    stack_.push_back(k);
    std::int64_t sum = 0;
    while (!stack_.empty()) {
      const std::size_t cur = stack_.back();
      stack_.pop_back();
      if (cur != k) sum = checked_add(sum, value_[cur]);
      for (std::size_t child : children(cur)) {
        if (stamp_[child] != epoch_) {
          stamp_[child] = epoch_;
          stack_.push_back(child);
        }
      }
    }
    return sum;
  }

  const Permutation& bottom_;
  MobiusCache& cache_;
  bool pruned_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<bool> expanded_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::int64_t> value_;
  std::vector<std::size_t> stack_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

std::int64_t mobius(const Permutation& bottom, const Permutation& top, MobiusCache& cache,
                    bool pruned, std::size_t cap) {
  if (bottom.empty()) throw DomainError("mobius: lower bound must be nonempty");
  if (top.empty() || !contains(bottom, top)) return 0;
  if (bottom == top) return 1;
  if (auto hit = cache.find(bottom, top)) return *hit;
  const LayeredInterval interval = layered_interval(bottom, top, cap);
  return IntervalEvaluator(bottom, interval, cache, pruned).run();
}

std::int64_t mobius(const Permutation& bottom, const Permutation& top, bool pruned) {
  MobiusCache cache;
  return mobius(bottom, top, cache, pruned);
}

std::int64_t principal_mobius(const Permutation& perm, MobiusCache& cache, bool pruned,
                              std::size_t cap) {
  if (perm.empty()) throw DomainError("principal_mobius: empty permutation");
  return mobius(Permutation{1}, perm, cache, pruned, cap);
}

std::int64_t principal_mobius(const Permutation& perm, bool pruned) {
  MobiusCache cache;
  return principal_mobius(perm, cache, pruned);
}

// ---------------------------------------------------------------- generic posets

FinitePoset::FinitePoset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less,
                         std::vector<std::string> labels)
    : below_(n, Bits(n)), labels_(std::move(labels)) {
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if (less(a, b)) below_[b].set(a);
    }
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < n; ++k) labels_.push_back(std::to_string(k));
  }
  if (labels_.size() != n) throw DomainError("FinitePoset: label count mismatch");
  if (n <= 10'000) validate();
}

FinitePoset FinitePoset::from_covers(std::size_t n,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                     std::vector<std::string> labels) {
  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw DomainError("FinitePoset: cover out of range");
    up[lo].push_back(hi);
  }
  // reach[a] = elements strictly above a
  std::vector<Bits> reach(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> stack(up[a].begin(), up[a].end());
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      if (reach[a].test(cur)) continue;
      reach[a].set(cur);
      stack.insert(stack.end(), up[cur].begin(), up[cur].end());
    }
  }
  return FinitePoset(n, [&](std::size_t a, std::size_t b) { return reach[a].test(b); },
                     std::move(labels));
}

void FinitePoset::validate() const {
  const std::size_t n = size();
  for (std::size_t b = 0; b < n; ++b) {
    if (below_[b].test(b)) throw DomainError("FinitePoset: order is not irreflexive");
    for (std::size_t a = below_[b].find_first(); a != Bits::npos; a = below_[b].find_next(a)) {
      if (!below_[a].is_subset_of(below_[b])) {
        throw DomainError("FinitePoset: order is not transitive");
      }
    }
  }
}

FinitePoset::Bits FinitePoset::closed_interval(std::size_t x, std::size_t y) const {
  Bits out(size());
  if (!leq(x, y)) return out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (leq(x, v) && leq(v, y)) out.set(v);
  }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& keep) const {
  FinitePoset out;
  out.below_.assign(keep.size(), Bits(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (less(keep[i], keep[j])) out.below_[j].set(i);
    }
    out.labels_.push_back(labels_[keep[j]]);
  }
  return out;
}

FinitePoset FinitePoset::without(std::size_t element) const {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < size(); ++k) {
    if (k != element) keep.push_back(k);
  }
  return induced(keep);
}

std::optional<std::size_t> FinitePoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b) {
    for (std::size_t a = below_[b].find_first(); a != Bits::npos; a = below_[b].find_next(a)) {
      // a is covered by b unless some c sits strictly between them.
      Bits between = below_[b];
      Bits above_a(size());
      for (std::size_t c = 0; c < size(); ++c) {
        if (less(a, c)) above_a.set(c);
      }
      if (!(between & above_a).any()) out.emplace_back(a, b);
    }
  }
  return out;
}

std::int64_t mobius_poset(const FinitePoset& poset, std::size_t x, std::size_t y) {
  if (x >= poset.size() || y >= poset.size()) throw DomainError("mobius_poset: id out of range");
  if (!poset.leq(x, y)) return 0;
  const FinitePoset::Bits span = poset.closed_interval(x, y);
  std::vector<std::size_t> order;
  for (std::size_t v = span.find_first(); v != FinitePoset::Bits::npos; v = span.find_next(v)) {
    order.push_back(v);
  }
  // Any linear extension works; count of elements below is one.
  std::vector<std::size_t> rank(poset.size(), 0);
  for (std::size_t v : order) {
    for (std::size_t u : order) rank[v] += poset.less(u, v) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  std::vector<std::int64_t> mu(poset.size(), 0);
  for (std::size_t v : order) {
    if (v == x) {
      mu[v] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t u : order) {
      if (u != v && poset.leq(x, u) && poset.less(u, v)) sum = checked_add(sum, mu[u]);
    }
    mu[v] = -sum;
  }
  return mu[y];
}

std::size_t PermutationPoset::index_of(const Permutation& perm) const {
  auto it = std::find(elements.begin(), elements.end(), perm);
  if (it == elements.end()) throw DomainError("permutation " + perm.str() + " not in poset");
  return static_cast<std::size_t>(it - elements.begin());
}

PermutationPoset interval_poset(const Permutation& bottom, const Permutation& top) {
  std::vector<Permutation> elements = interval_set(bottom, top);
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(e.str());
  FinitePoset poset(
      elements.size(),
      [&](std::size_t a, std::size_t b) {
        return elements[a].size() < elements[b].size() && contains(elements[a], elements[b]);
      },
      std::move(labels));
  return {std::move(elements), std::move(poset)};
}

}  // namespace pmz
