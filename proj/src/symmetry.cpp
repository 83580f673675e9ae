#include "pmz/symmetry.hpp"

#include <algorithm>

namespace pmz {

namespace {

// Distinguishes all eight symmetries: its orbit has size 8.
const Permutation& probe() {
  static const Permutation p{2, 5, 1, 3, 4};
  return p;
}

}  // namespace

Permutation reverse(const Permutation& perm) {
  std::string bytes(perm.key().rbegin(), perm.key().rend());
  return Permutation::from_bytes_unchecked(std::move(bytes));
}

Permutation complement(const Permutation& perm) {
  std::string bytes = perm.key();
  const char top = static_cast<char>(perm.size() + 1);
  for (char& c : bytes) c = static_cast<char>(top - c);
  return Permutation::from_bytes_unchecked(std::move(bytes));
}

Permutation inverse(const Permutation& perm) {
  std::string bytes(perm.size(), '\0');
  for (std::size_t i = 0; i < perm.size(); ++i) bytes[perm[i] - 1] = static_cast<char>(i + 1);
  return Permutation::from_bytes_unchecked(std::move(bytes));
}

SymmetryOp SymmetryOp::from_label(std::string_view label) {
  if (label == "id") return {};
  bool inv = false;
  bool rev = false;
  bool comp = false;
  char prev = 0;
  for (char c : label) {
    // Letters must appear in canonical order i, r, c and at most once.
    if ((c == 'i' && prev != 0) || (c == 'r' && (prev == 'r' || prev == 'c')) ||
        (c == 'c' && prev == 'c')) {
      throw DomainError("bad symmetry label '" + std::string(label) + "'");
    }
    switch (c) {
      case 'i': inv = true; break;
      case 'r': rev = true; break;
      case 'c': comp = true; break;
      default: throw DomainError("bad symmetry label '" + std::string(label) + "'");
    }
    prev = c;
  }
  if (label.empty()) throw DomainError("empty symmetry label");
  return from_bits(inv, rev, comp);
}

std::string SymmetryOp::label() const {
  if (bits_ == 0) return "id";
  std::string out;
  if (inverts()) out += 'i';
  if (reverses()) out += 'r';
  if (complements()) out += 'c';
  return out;
}

Permutation SymmetryOp::apply(const Permutation& perm) const {
  Permutation out = inverts() ? pmz::inverse(perm) : perm;
  if (reverses()) out = reverse(out);
  if (complements()) out = complement(out);
  return out;
}

SymmetryOp SymmetryOp::then(SymmetryOp first, SymmetryOp second) {
  const Permutation target = second.apply(first.apply(probe()));
  for (SymmetryOp g : all_symmetries()) {
    if (g.apply(probe()) == target) return g;
  }
  throw std::logic_error("symmetry group not closed");
}

SymmetryOp SymmetryOp::inverse() const {
  for (SymmetryOp g : all_symmetries()) {
    if (then(*this, g) == SymmetryOp{}) return g;
  }
  throw std::logic_error("symmetry without inverse");
}

const std::array<SymmetryOp, 8>& all_symmetries() {
  static const std::array<SymmetryOp, 8> ops = [] {
    std::array<SymmetryOp, 8> a{};
    for (int b = 0; b < 8; ++b) a[b] = SymmetryOp::from_bits(b & 4, b & 2, b & 1);
    return a;
  }();
  return ops;
}

Permutation symmetry_canonical(const Permutation& perm) {
  const Permutation inv = inverse(perm);
  Permutation best = perm;
  for (const Permutation* base : {&perm, &inv}) {
    Permutation r = reverse(*base);
    Permutation c = complement(*base);
    Permutation rc = complement(r);
    for (const Permutation* cand : std::array<const Permutation*, 4>{base, &r, &c, &rc}) {
      if (cand->key() < best.key()) best = *cand;
    }
  }
  return best;
}

std::size_t orbit_size(const Permutation& perm) {
  std::array<Permutation, 8> images;
  std::size_t k = 0;
  for (SymmetryOp g : all_symmetries()) images[k++] = g.apply(perm);
  std::sort(images.begin(), images.end());
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

}  // namespace pmz
