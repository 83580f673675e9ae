#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmz/mobius.hpp"
#include "pmz/permutation.hpp"
#include "pmz/zero_rules.hpp"

namespace pmz {

/// A check was called on inputs that violate its preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The claimed core of a tipped interval does not have the required shape.
class CoreViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Core of a narrow-tipped ([x,y) = [x,z]) or diamond-tipped
/// ([x,y) = [x,z] u [x,z'], [x,z] n [x,z'] = [x,w]) interval.
struct TippedCore {
  enum class Kind { kNarrow, kDiamond };
  Kind kind = Kind::kNarrow;
  std::size_t z = 0;
  std::size_t z_prime = 0;  ///< diamond only
  std::size_t w = 0;        ///< diamond only

  static TippedCore narrow(std::size_t z) { return {Kind::kNarrow, z, 0, 0}; }
  static TippedCore diamond(std::size_t z, std::size_t z_prime, std::size_t w) {
    return {Kind::kDiamond, z, z_prime, w};
  }
};

/// Throws CoreViolation if `core` is not a valid core of [x, y].
void validate_core(const FinitePoset& poset, std::size_t x, std::size_t y, const TippedCore& core);

/// Validates the core, then reports whether mu_P(x, y) = 0.
bool check_fac_nd(const FinitePoset& poset, std::size_t x, std::size_t y, const TippedCore& core);

/// Requires mu_P(x, deleted) = 0 (PreconditionError otherwise). True iff
/// deleting `deleted` leaves mu(x, z) unchanged for every remaining z.
bool check_fac_del(const FinitePoset& poset, std::size_t x, std::size_t deleted);

/// Draws a random rational F on [bottom, top] with F(top) = 1 and checks the
/// inversion identity
///   mu(bottom, top) = F(bottom) - sum_{lambda in [bottom,top)} mu(bottom,lambda)
///                                  * sum_{tau in [lambda,top]} F(tau)
/// exactly. `top_value` overrides F(top) for negative controls.
bool check_pro_form(const Permutation& bottom, const Permutation& top, std::uint64_t seed,
                    MobiusCache& cache, std::optional<long> top_value = std::nullopt);

/// Normal embeddings whose image contains every position except possibly
/// `up` and `down` (an up-adjacency at up, up+1 and a down-adjacency at
/// down, down+1). True iff for every lambda in [1, perm) with
/// mu(1, lambda) != 0 the odd and even normal embeddings with source above
/// lambda are equinumerous, and no normal embedding has source 1.
bool check_eq_cancel_thm1(const Permutation& perm, std::size_t up, std::size_t down,
                          MobiusCache& cache);

/// A randomly generated poset with a planted tipped interval [x, y].
struct PlantedPoset {
  FinitePoset poset;
  std::size_t x = 0;
  std::size_t y = 0;
  TippedCore core;
};

PlantedPoset planted_narrow(std::uint64_t seed);
PlantedPoset planted_diamond(std::uint64_t seed);
/// A planted narrow-tipped element with further random elements above it,
/// so deleting it changes the shape of the poset.
PlantedPoset planted_deletable_zero(std::uint64_t seed);

/// [1, top] with every interior element satisfying `drop` removed.
PermutationPoset reduced_interval(const Permutation& top,
                                  const std::function<bool(const Permutation&)>& drop);

/// Opposing adjacencies or a direct/skew sum-split interval.
bool basic_rule_zero(const Permutation& perm);

/// A diamond core (z, z', w) of [x, y] if one exists; z precedes z' by id.
std::optional<TippedCore> find_diamond_core(const FinitePoset& poset, std::size_t x, std::size_t y);

/// The length-22 permutation 582741936 inflated at 2, 4, 5 by
/// (13524, 214635, 21435).
Permutation long_nonannihilator_witness();

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;

  bool all_passed() const;
  std::string text() const;
  std::string json() const;
};

using Certifier = std::function<std::optional<ZeroCertificate>(const Permutation&)>;

struct SuiteOptions {
  int n_max = 7;
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
  /// Run only the check with this name (empty: all).
  std::string only;
  /// Used by the soundness check; defaults to certify_zero.
  Certifier certifier;
};

/// Names of every check run_theorem_suites knows.
std::vector<std::string> suite_names();

/// Runs the structural and theorem checks; failures are report content.
SuiteReport run_theorem_suites(const SuiteOptions& options);

}  // namespace pmz
