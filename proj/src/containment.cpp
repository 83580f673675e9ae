#include "pmz/containment.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace pmz {

Embedding::Embedding(Permutation target, std::vector<std::size_t> image)
    : target_(std::move(target)), image_(std::move(image)) {
  if (image_.empty()) throw DomainError("embedding image must be nonempty");
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] < 1 || image_[k] > target_.size()) {
      throw DomainError("embedding position " + std::to_string(image_[k]) + " out of range");
    }
    if (k > 0 && image_[k] <= image_[k - 1]) {
      throw DomainError("embedding image must be strictly increasing");
    }
  }
}

bool Embedding::contains_index(std::size_t pos) const {
  return std::binary_search(image_.begin(), image_.end(), pos);
}

Permutation Embedding::source() const {
  std::vector<int> seq;
  seq.reserve(image_.size());
  for (std::size_t p : image_) seq.push_back(target_.at(p));
  return pattern_of(seq);
}

Embedding i_switch(const Embedding& f, std::size_t pos) {
  if (pos < 1 || pos > f.target().size()) {
    throw DomainError("i_switch: position " + std::to_string(pos) + " out of range");
  }
  std::vector<std::size_t> image = f.image();
  auto it = std::lower_bound(image.begin(), image.end(), pos);
  if (it != image.end() && *it == pos) {
    if (image.size() == 1) throw DomainError("i_switch would empty the image");
    image.erase(it);
  } else {
    image.insert(it, pos);
  }
  return Embedding(f.target(), std::move(image));
}

namespace {

// Backtracking matcher. For each pattern index m, `below[m]` / `above[m]` is
// the earlier pattern index whose value is the nearest below / above
// pattern[m] (or -1); checking those two neighbours keeps the partial map
// order-isomorphic.
class Matcher {
 public:
  Matcher(const Permutation& pattern, const Permutation& host)
      : pattern_(pattern), host_(host), below_(pattern.size(), -1), above_(pattern.size(), -1),
        image_(pattern.size()) {
    for (std::size_t m = 0; m < pattern.size(); ++m) {
      for (std::size_t l = 0; l < m; ++l) {
        if (pattern[l] < pattern[m] && (below_[m] < 0 || pattern[l] > pattern[below_[m]])) {
          below_[m] = static_cast<int>(l);
        }
        if (pattern[l] > pattern[m] && (above_[m] < 0 || pattern[l] < pattern[above_[m]])) {
          above_[m] = static_cast<int>(l);
        }
      }
    }
  }

  // Calls visit(image) for each embedding in lexicographic order; stops
  // when visit returns false. Returns false iff stopped early.
  template <typename Visit>
  bool run(Visit&& visit) {
    if (pattern_.size() > host_.size()) return true;
    return step(0, 0, visit);
  }

  const std::vector<std::size_t>& image() const { return image_; }

 private:
  template <typename Visit>
  bool step(std::size_t m, std::size_t from, Visit& visit) {
    if (m == pattern_.size()) return visit(image_);
    const std::size_t last = host_.size() - (pattern_.size() - m);
    for (std::size_t p = from; p <= last; ++p) {
      const int v = host_[p];
      if (below_[m] >= 0 && host_[image_[below_[m]]] > v) continue;
      if (above_[m] >= 0 && host_[image_[above_[m]]] < v) continue;
      image_[m] = p;
      if (!step(m + 1, p + 1, visit)) return false;
    }
    return true;
  }

  const Permutation& pattern_;
  const Permutation& host_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<std::size_t> image_;
};

}  // namespace

std::vector<Embedding> embeddings(const Permutation& pattern, const Permutation& host) {
  if (pattern.empty()) throw DomainError("embeddings: empty pattern");
  std::vector<Embedding> out;
  Matcher matcher(pattern, host);
  matcher.run([&](const std::vector<std::size_t>& image) {
    std::vector<std::size_t> one_based(image.size());
    for (std::size_t k = 0; k < image.size(); ++k) one_based[k] = image[k] + 1;
    out.emplace_back(host, std::move(one_based));
    return true;
  });
  return out;
}

std::size_t count_embeddings(const Permutation& pattern, const Permutation& host) {
  if (pattern.empty()) throw DomainError("count_embeddings: empty pattern");
  std::size_t count = 0;
  Matcher matcher(pattern, host);
  matcher.run([&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.empty()) return true;
  if (pattern.size() > host.size()) return false;
  if (pattern.size() == host.size()) return pattern == host;
  Matcher matcher(pattern, host);
  return !matcher.run([](const std::vector<std::size_t>&) { return false; });
}

std::size_t default_element_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("PMZ_DOWNSET_CAP")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (const std::exception&) {
      }
    }
    return std::size_t{50'000'000};
  }();
  return cap;
}

std::size_t LayeredInterval::size() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

std::vector<Permutation> LayeredInterval::flatten() const {
  std::vector<Permutation> out;
  out.reserve(size());
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Permutation> single_deletions(const Permutation& perm) {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    // Deleting either point of an adjacency gives the same pattern.
    if (i > 0 && std::abs(perm[i] - perm[i - 1]) == 1) continue;
    out.push_back(delete_at(perm, i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LayeredInterval layered_interval(const Permutation& bottom_in, const Permutation& top,
                                 std::size_t cap) {
  const Permutation bottom = bottom_in.empty() ? Permutation{1} : bottom_in;
  LayeredInterval result{bottom, top, {}};
  if (top.empty() || !contains(bottom, top)) return result;

  std::vector<std::vector<Permutation>> down;  // longest first
  down.push_back({top});
  std::size_t total = 1;
  const bool trivial_bottom = bottom.size() == 1;
  while (down.back().front().size() > bottom.size()) {
    std::unordered_set<Permutation> next;
    for (const Permutation& perm : down.back()) {
      for (Permutation& child : single_deletions(perm)) {
        if (next.contains(child)) continue;
        if (!trivial_bottom && !contains(bottom, child)) continue;
        next.insert(std::move(child));
        if (total + next.size() > cap) {
          throw BudgetExceeded("interval [" + bottom.str() + ", " + top.str() +
                               "] exceeds element cap " + std::to_string(cap));
        }
      }
    }
    total += next.size();
    std::vector<Permutation> level(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    down.push_back(std::move(level));
  }
  result.levels.assign(std::make_move_iterator(down.rbegin()), std::make_move_iterator(down.rend()));
  return result;
}

std::vector<Permutation> down_set(const Permutation& perm, std::size_t cap) {
  if (perm.empty()) throw DomainError("down_set: empty permutation");
  return layered_interval(Permutation{1}, perm, cap).flatten();
}

std::vector<Permutation> interval_set(const Permutation& bottom, const Permutation& top,
                                      std::size_t cap) {
  return layered_interval(bottom, top, cap).flatten();
}

}  // namespace pmz
