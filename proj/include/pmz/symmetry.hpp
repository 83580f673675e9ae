#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pmz/permutation.hpp"

namespace pmz {

/// One of the eight symmetries of the permutation poset, generated by
/// reverse, complement and inverse. The label letters are applied left to
/// right: "ir" inverts first, then reverses.
class SymmetryOp {
 public:
  constexpr SymmetryOp() = default;

  static constexpr SymmetryOp from_bits(bool inv, bool rev, bool comp) {
    SymmetryOp g;
    g.bits_ = static_cast<std::uint8_t>((inv ? 4 : 0) | (rev ? 2 : 0) | (comp ? 1 : 0));
    return g;
  }
  static SymmetryOp from_label(std::string_view label);

  constexpr bool inverts() const { return bits_ & 4; }
  constexpr bool reverses() const { return bits_ & 2; }
  constexpr bool complements() const { return bits_ & 1; }
  constexpr int index() const { return bits_; }

  std::string label() const;

  Permutation apply(const Permutation& perm) const;

  /// The symmetry equal to applying `first`, then `second`.
  static SymmetryOp then(SymmetryOp first, SymmetryOp second);
  SymmetryOp inverse() const;

  friend constexpr bool operator==(SymmetryOp, SymmetryOp) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// id, c, r, rc, i, ic, ir, irc.
const std::array<SymmetryOp, 8>& all_symmetries();

inline Permutation apply_symmetry(SymmetryOp g, const Permutation& perm) { return g.apply(perm); }

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);
Permutation inverse(const Permutation& perm);

/// Lexicographically least of the eight symmetric images.
Permutation symmetry_canonical(const Permutation& perm);

/// Number of distinct symmetric images.
std::size_t orbit_size(const Permutation& perm);

}  // namespace pmz
