#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "pmz/permutation.hpp"

namespace pmz {

/// An increasing index map of a source pattern into a target permutation,
/// identified by its image.
class Embedding {
 public:
  /// `image` holds 1-based, strictly increasing, nonempty positions of `target`.
  Embedding(Permutation target, std::vector<std::size_t> image);

  const Permutation& target() const { return target_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t size() const { return image_.size(); }
  bool even() const { return image_.size() % 2 == 0; }
  bool contains_index(std::size_t pos) const;

  /// Pattern of the target restricted to the image.
  Permutation source() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  Permutation target_;
  std::vector<std::size_t> image_;
};

/// Toggles membership of position `pos` (1-based) in the image.
Embedding i_switch(const Embedding& f, std::size_t pos);

/// All embeddings of `pattern` into `host`, ordered lexicographically by image.
std::vector<Embedding> embeddings(const Permutation& pattern, const Permutation& host);

/// Number of embeddings, without materialising them.
std::size_t count_embeddings(const Permutation& pattern, const Permutation& host);

/// Pattern containment; stops at the first witness.
bool contains(const Permutation& pattern, const Permutation& host);

/// Thrown when a down-set or interval enumeration exceeds its element cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element cap for down-set enumeration. Reads PMZ_DOWNSET_CAP once, falling
/// back to 50 million.
std::size_t default_element_cap();

/// The interval [pattern, host] grouped by length. `levels[k]` holds the
/// elements of length |pattern| + k, sorted; the last level is {host}.
struct LayeredInterval {
  Permutation bottom;
  Permutation top;
  std::vector<std::vector<Permutation>> levels;

  std::size_t size() const;
  bool empty() const { return levels.empty(); }
  /// All elements, shortest first.
  std::vector<Permutation> flatten() const;
};

/// [bottom, top] computed by iterated single-point deletion from `top`,
/// keeping only elements that still contain `bottom`. Empty when bottom is
/// not contained in top. An empty `bottom` is treated as 1.
LayeredInterval layered_interval(const Permutation& bottom, const Permutation& top,
                                 std::size_t cap = default_element_cap());

/// Every nonempty pattern contained in `perm`, sorted shortest first.
std::vector<Permutation> down_set(const Permutation& perm, std::size_t cap = default_element_cap());

/// {tau : bottom <= tau <= top}, sorted shortest first.
std::vector<Permutation> interval_set(const Permutation& bottom, const Permutation& top,
                                      std::size_t cap = default_element_cap());

/// Distinct single-point deletions of `perm`.
std::vector<Permutation> single_deletions(const Permutation& perm);

}  // namespace pmz
