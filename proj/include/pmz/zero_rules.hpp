#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pmz/permutation.hpp"
#include "pmz/symmetry.hpp"

namespace pmz {

/// An up-adjacency at up, up+1 and a down-adjacency at down, down+1.
struct OpposingAdjacencies {
  std::size_t up = 0;
  std::size_t down = 0;
  friend bool operator==(const OpposingAdjacencies&, const OpposingAdjacencies&) = default;
};

/// An interval copy of alpha + 1 + beta (direct) or of its complement
/// alpha - 1 - beta (skew), which together cover all eight symmetric images.
struct SumAnnihilator {
  SumKind kind = SumKind::kDirect;
  SumSplit split;
  friend bool operator==(const SumAnnihilator&, const SumAnnihilator&) = default;
};

/// An interval copy of symmetry(base) starting at `start`.
struct BaseAnnihilator {
  Permutation base;
  SymmetryOp symmetry;
  std::size_t start = 0;
  friend bool operator==(const BaseAnnihilator&, const BaseAnnihilator&) = default;
};

/// Disjoint interval copies of symmetry(first) and symmetry(second).
struct AnnihilatorPair {
  Permutation first;
  Permutation second;
  SymmetryOp symmetry;
  std::size_t first_start = 0;
  std::size_t second_start = 0;
  friend bool operator==(const AnnihilatorPair&, const AnnihilatorPair&) = default;
};

using ZeroCertificate =
    std::variant<OpposingAdjacencies, SumAnnihilator, BaseAnnihilator, AnnihilatorPair>;

/// Annihilators and annihilator pairs consulted by certify_zero.
struct ZeroRuleSet {
  std::vector<Permutation> bases;
  std::vector<std::pair<Permutation, Permutation>> pairs;

  /// The proven rules only.
  static const ZeroRuleSet& standard();
  /// Standard rules plus conjectured pairs; not sound by proof, for
  /// experiments only.
  static ZeroRuleSet with_conjectured();
};

/// First certificate in precedence order: opposing adjacencies, sum split
/// (direct then skew), base annihilators, annihilator pairs. Symmetric
/// rules try the eight symmetries in all_symmetries() order.
std::optional<ZeroCertificate> certify_zero(const Permutation& perm,
                                            const ZeroRuleSet& rules = ZeroRuleSet::standard());

/// Structural re-check of a witness; no Möbius evaluation.
bool verify_certificate(const Permutation& perm, const ZeroCertificate& cert,
                        const ZeroRuleSet& rules = ZeroRuleSet::standard());

/// True iff `host` has an interval copy of alpha + 1 + beta and `bottom` has
/// no interval copy of any alpha' + beta' with 1 <= alpha' <= alpha and
/// 1 <= beta' <= beta. A true return certifies mu(bottom, host) = 0.
bool sigma_sum_rule(const Permutation& bottom, const Permutation& alpha, const Permutation& beta,
                    const Permutation& host);

/// Rule tag, e.g. "opposing-adjacencies".
std::string rule_name(const ZeroCertificate& cert);
/// Witness text, e.g. "up=2 down=6".
std::string witness_text(const ZeroCertificate& cert);
/// "<rule> <witness>".
std::string describe(const ZeroCertificate& cert);

/// "<perm>\t<rule>\t<witness>", the audit line format.
std::string certificate_line(const Permutation& perm, const ZeroCertificate& cert);
/// Inverse of certificate_line; throws DomainError on malformed input.
std::pair<Permutation, ZeroCertificate> parse_certificate_line(std::string_view line);

}  // namespace pmz
