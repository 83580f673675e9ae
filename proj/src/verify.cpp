#include "pmz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "pmz/census.hpp"
#include "pmz/containment.hpp"
#include "pmz/symmetry.hpp"

namespace pmz {

using Bits = FinitePoset::Bits;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- tipped cores

namespace {

// [x, y) as a bitset.
Bits half_open(const FinitePoset& p, std::size_t x, std::size_t y) {
  Bits b = p.closed_interval(x, y);
  if (b.any()) b.reset(y);
  return b;
}

std::string id_name(const FinitePoset& p, std::size_t id) { return p.label(id); }

}  // namespace

void validate_core(const FinitePoset& poset, std::size_t x, std::size_t y, const TippedCore& core) {
  const std::size_t n = poset.size();
  auto in_range = [&](std::size_t id) {
    if (id >= n) throw CoreViolation("core element id out of range");
  };
  in_range(x);
  in_range(y);
  in_range(core.z);
  if (!poset.less(x, y)) throw CoreViolation("x must lie strictly below y");
  const Bits lower = half_open(poset, x, y);
  if (core.z == x) throw CoreViolation("core element z equals x");
  if (core.kind == TippedCore::Kind::kNarrow) {
    if (lower != poset.closed_interval(x, core.z)) {
      throw CoreViolation("[x,y) differs from [x,z] for z = " + id_name(poset, core.z));
    }
    return;
  }
  in_range(core.z_prime);
  in_range(core.w);
  if (core.z_prime == x || core.w == x) throw CoreViolation("diamond core element equals x");
  const Bits left = poset.closed_interval(x, core.z);
  const Bits right = poset.closed_interval(x, core.z_prime);
  if (lower != (left | right)) throw CoreViolation("[x,y) is not [x,z] u [x,z']");
  if ((left & right) != poset.closed_interval(x, core.w)) {
    throw CoreViolation("[x,z] n [x,z'] is not [x,w]");
  }
}

bool check_fac_nd(const FinitePoset& poset, std::size_t x, std::size_t y, const TippedCore& core) {
  validate_core(poset, x, y, core);
  return mobius_poset(poset, x, y) == 0;
}

bool check_fac_del(const FinitePoset& poset, std::size_t x, std::size_t deleted) {
  if (deleted == x) throw PreconditionError("cannot delete the lower bound");
  if (mobius_poset(poset, x, deleted) != 0) {
    throw PreconditionError("mu(x, y) != 0 for the deleted element " + poset.label(deleted));
  }
  const FinitePoset reduced = poset.without(deleted);
  for (std::size_t z = 0; z < poset.size(); ++z) {
    if (z == deleted) continue;
    const std::size_t zr = z < deleted ? z : z - 1;
    const std::size_t xr = x < deleted ? x : x - 1;
    if (mobius_poset(reduced, xr, zr) != mobius_poset(poset, x, z)) return false;
  }
  return true;
}

std::optional<TippedCore> find_diamond_core(const FinitePoset& poset, std::size_t x, std::size_t y) {
  if (!poset.less(x, y)) return std::nullopt;
  const Bits lower = half_open(poset, x, y);
  std::vector<std::size_t> members;
  for (std::size_t v = lower.find_first(); v != Bits::npos; v = lower.find_next(v)) {
    if (v != x) members.push_back(v);
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Bits left = poset.closed_interval(x, members[a]);
      const Bits right = poset.closed_interval(x, members[b]);
      if ((left | right) != lower) continue;
      const Bits meet = left & right;
      for (std::size_t w : members) {
        if (poset.closed_interval(x, w) == meet) return TippedCore::diamond(members[a], members[b], w);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- planted posets

namespace {

using Covers = std::vector<std::pair<std::size_t, std::size_t>>;

// Adds `count` fresh ids starting at `first`, with random covers among them
// (lower id below higher) at probability `p`.
void random_block(std::mt19937_64& rng, std::size_t first, std::size_t count, double p,
                  Covers& covers) {
  std::bernoulli_distribution edge(p);
  for (std::size_t i = first; i < first + count; ++i) {
    for (std::size_t j = i + 1; j < first + count; ++j) {
      if (edge(rng)) covers.emplace_back(i, j);
    }
  }
}

}  // namespace

PlantedPoset planted_narrow(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t base = 3 + rng() % 6;
  const std::size_t noise = rng() % 4;
  // ids: 0 = x, 1..base = B, then noise, then z, y
  const std::size_t z = 1 + base + noise;
  const std::size_t y = z + 1;
  Covers covers;
  for (std::size_t v = 1; v < z; ++v) covers.emplace_back(0, v);
  random_block(rng, 1, base + noise, 0.35, covers);
  std::bernoulli_distribution pick(0.5);
  covers.emplace_back(1, z);
  for (std::size_t v = 2; v <= base; ++v) {
    if (pick(rng)) covers.emplace_back(v, z);
  }
  covers.emplace_back(z, y);
  return {FinitePoset::from_covers(y + 1, covers), 0, y, TippedCore::narrow(z)};
}

PlantedPoset planted_diamond(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t base = 1 + rng() % 4;
  const std::size_t left = 1 + rng() % 4;
  const std::size_t right = 1 + rng() % 4;
  // ids: 0 = x, B, w, L, R, z, z', y
  const std::size_t w = 1 + base;
  const std::size_t l0 = w + 1;
  const std::size_t r0 = l0 + left;
  const std::size_t z = r0 + right;
  const std::size_t zp = z + 1;
  const std::size_t y = zp + 1;
  Covers covers;
  for (std::size_t v = 1; v < y; ++v) covers.emplace_back(0, v);
  random_block(rng, 1, base, 0.4, covers);
  for (std::size_t v = 1; v <= base; ++v) covers.emplace_back(v, w);
  random_block(rng, l0, left, 0.4, covers);
  random_block(rng, r0, right, 0.4, covers);
  std::bernoulli_distribution pick(0.5);
  for (std::size_t v = l0; v < r0; ++v) {
    covers.emplace_back(v, z);
    if (pick(rng)) covers.emplace_back(1 + rng() % base, v);
  }
  for (std::size_t v = r0; v < z; ++v) {
    covers.emplace_back(v, zp);
    if (pick(rng)) covers.emplace_back(1 + rng() % base, v);
  }
  covers.emplace_back(w, z);
  covers.emplace_back(w, zp);
  covers.emplace_back(z, y);
  covers.emplace_back(zp, y);
  return {FinitePoset::from_covers(y + 1, covers), 0, y, TippedCore::diamond(z, zp, w)};
}

PlantedPoset planted_deletable_zero(std::uint64_t seed) {
  PlantedPoset inner = seed % 2 ? planted_narrow(seed) : planted_diamond(seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n0 = inner.poset.size();
  const std::size_t extra = 2 + rng() % 4;
  Covers covers = inner.poset.covers();
  std::bernoulli_distribution pick(0.4);
  for (std::size_t v = n0; v < n0 + extra; ++v) {
    covers.emplace_back(0, v);
    covers.emplace_back(inner.y, v);  // every extra element sits above the zero
    for (std::size_t u = 1; u < v; ++u) {
      if (u != inner.y && pick(rng)) covers.emplace_back(u, v);
    }
  }
  return {FinitePoset::from_covers(n0 + extra, covers), 0, inner.y, inner.core};
}

// ---------------------------------------------------------------- inversion identity

bool check_pro_form(const Permutation& bottom, const Permutation& top, std::uint64_t seed,
                    MobiusCache& cache, std::optional<long> top_value) {
  if (!contains(bottom, top)) throw PreconditionError("check_pro_form needs bottom <= top");
  if (top.size() > 7) throw PreconditionError("check_pro_form is limited to |top| <= 7");
  const std::vector<Permutation> elems = interval_set(bottom, top);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> f(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) f[k] = Rational(num(rng), den(rng));
  f.back() = Rational(top_value.value_or(1));  // elems.back() == top

  Rational rhs = f.front();  // elems.front() == bottom
  for (std::size_t l = 0; l + 1 < elems.size(); ++l) {
    const std::int64_t mu = mobius(bottom, elems[l], cache);
    if (mu == 0) continue;
    Rational upper_sum = 0;
    for (std::size_t t = l; t < elems.size(); ++t) {
      if (contains(elems[l], elems[t])) upper_sum += f[t];
    }
    rhs -= Rational(mu) * upper_sum;
  }
  return rhs == Rational(mobius(bottom, top, cache));
}

// ---------------------------------------------------------------- normal embeddings

bool check_eq_cancel_thm1(const Permutation& perm, std::size_t up, std::size_t down,
                          MobiusCache& cache) {
  const std::size_t n = perm.size();
  if (n > 9) throw PreconditionError("check_eq_cancel_thm1 is limited to length <= 9");
  const auto adj = adjacencies(perm);
  if (std::find(adj.ups.begin(), adj.ups.end(), up) == adj.ups.end()) {
    throw PreconditionError("no up-adjacency at position " + std::to_string(up));
  }
  if (std::find(adj.downs.begin(), adj.downs.end(), down) == adj.downs.end()) {
    throw PreconditionError("no down-adjacency at position " + std::to_string(down));
  }

  // The four normal embeddings: all positions, optionally minus up and/or down.
  std::vector<Embedding> normal;
  for (int mask = 0; mask < 4; ++mask) {
    std::vector<std::size_t> image;
    for (std::size_t p = 1; p <= n; ++p) {
      if ((mask & 1) && p == up) continue;
      if ((mask & 2) && p == down) continue;
      image.push_back(p);
    }
    normal.emplace_back(perm, std::move(image));
  }
  std::vector<Permutation> sources;
  for (const Embedding& e : normal) {
    sources.push_back(e.source());
    if (sources.back().size() == 1) return false;
  }

  for (const Permutation& lambda : down_set(perm)) {
    if (lambda == perm || principal_mobius(lambda, cache) == 0) continue;
    std::size_t odd = 0;
    std::size_t even = 0;
    for (std::size_t k = 0; k < normal.size(); ++k) {
      if (!contains(lambda, sources[k])) continue;
      (normal[k].even() ? even : odd) += 1;
    }
    if (odd != even) return false;
  }
  return true;
}

// ---------------------------------------------------------------- reduced intervals

bool basic_rule_zero(const Permutation& perm) {
  return has_opposing_adjacencies(perm) || find_sum_split_interval(perm) ||
         find_sum_split_interval(complement(perm));
}

PermutationPoset reduced_interval(const Permutation& top,
                                  const std::function<bool(const Permutation&)>& drop) {
  std::vector<Permutation> kept;
  for (const Permutation& p : down_set(top)) {
    if (p.size() == 1 || p == top || !drop(p)) kept.push_back(p);
  }
  std::vector<std::string> labels;
  for (const auto& p : kept) labels.push_back(p.str());
  FinitePoset poset(
      kept.size(),
      [&](std::size_t a, std::size_t b) {
        return kept[a].size() < kept[b].size() && contains(kept[a], kept[b]);
      },
      std::move(labels));
  return {std::move(kept), std::move(poset)};
}

Permutation long_nonannihilator_witness() {
  const Permutation base = parse("582741936");
  const std::vector<std::size_t> positions{2, 4, 5};
  const std::vector<Permutation> parts{parse("13524"), parse("214635"), parse("21435")};
  return inflate_at(base, positions, parts);
}

// ---------------------------------------------------------------- suites

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << "seed " << seed << '\n';
  for (const CheckOutcome& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(2)
        << c.seconds << "s)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

std::string SuiteReport::json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckOutcome& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  return j.dump(2) + "\n";
}

namespace {

std::vector<Permutation> all_of_length(int n) {
  std::vector<Permutation> out;
  if (n == 0) return out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> all_up_to(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k) {
    auto level = all_of_length(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Result of one check: empty string on success, else a failure description.
using CheckBody = std::function<std::string(const SuiteOptions&)>;

struct CheckSpec {
  std::string name;
  CheckBody body;
};

std::string fail(const std::string& what, const Permutation& p) { return what + " at " + p.str(); }

std::string check_oracle_agreement(const SuiteOptions& o) {
  MobiusCache cache;
  for (const Permutation& top : all_up_to(std::min(o.n_max, 6))) {
    const PermutationPoset pp = interval_poset(Permutation{1}, top);
    const std::size_t y = pp.elements.size() - 1;
    for (std::size_t x = 0; x < pp.elements.size(); ++x) {
      if (mobius(pp.elements[x], top, cache) != mobius_poset(pp.poset, x, y)) {
        return "mobius(" + pp.elements[x].str() + ", " + top.str() + ") disagrees with poset oracle";
      }
    }
  }
  return {};
}

std::string check_sum_to_zero(const SuiteOptions& o) {
  const int top_max = std::min(o.n_max, 7);
  for (const Permutation& bottom : all_up_to(top_max - 1)) {
    // Long lower bounds only against tops up to length 6.
    const int limit = bottom.size() <= 2 ? top_max : std::min(top_max, 6);
    MobiusCache cache;
    for (int len = static_cast<int>(bottom.size()) + 1; len <= limit; ++len) {
      for (const Permutation& top : all_of_length(len)) {
        if (!contains(bottom, top)) continue;
        std::int64_t sum = 0;
        for (const Permutation& tau : interval_set(bottom, top)) sum += mobius(bottom, tau, cache);
        if (sum != 0) {
          return "sum over [" + bottom.str() + ", " + top.str() + "] is " + std::to_string(sum);
        }
      }
    }
  }
  return {};
}

std::string check_symmetry_invariance(const SuiteOptions& o) {
  MobiusCache cache(false);
  for (const Permutation& p : all_up_to(std::min(o.n_max, 7))) {
    const std::int64_t mu = principal_mobius(p, cache);
    for (SymmetryOp g : all_symmetries()) {
      if (principal_mobius(g.apply(p), cache) != mu) return fail("symmetry " + g.label() + " changes mu", p);
    }
  }
  return {};
}

std::string check_pruned_equals_unpruned(const SuiteOptions& o) {
  MobiusCache plain(false);
  MobiusCache pruned(false);
  auto same = [&](const Permutation& p) {
    return principal_mobius(p, plain, false) == principal_mobius(p, pruned, true);
  };
  for (const Permutation& p : all_up_to(std::min(o.n_max, 7))) {
    if (!same(p)) return fail("pruned and unpruned differ", p);
  }
  if (o.n_max >= 8) {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < 300; ++k) {
      const Permutation p = unrank(8, rng() % factorial(8));
      if (!same(p)) return fail("pruned and unpruned differ", p);
    }
  }
  return {};
}

std::string check_cache_soundness(const SuiteOptions& o) {
  MobiusCache warm;
  std::mt19937_64 rng(o.seed + 1);
  const int len = std::min(o.n_max, 7);
  std::vector<Permutation> sample;
  for (int k = 0; k < 100; ++k) sample.push_back(unrank(len, rng() % factorial(len)));
  std::vector<std::int64_t> first;
  for (const auto& p : sample) first.push_back(principal_mobius(p, warm));
  for (std::size_t k = 0; k < sample.size(); ++k) {
    MobiusCache cold;
    if (principal_mobius(sample[k], cold) != first[k]) return fail("cache changed value", sample[k]);
    if (principal_mobius(sample[k], warm) != first[k]) return fail("cache hit changed value", sample[k]);
  }
  return {};
}

std::string check_opposing_zero(const SuiteOptions& o) {
  MobiusCache cache;
  for (int len = 4; len <= o.n_max; ++len) {
    for (const Permutation& p : all_of_length(len)) {
      if (!has_opposing_adjacencies(p)) continue;
      if (principal_mobius(p, cache) != 0) return fail("opposing adjacencies but mu != 0", p);
    }
  }
  return {};
}

std::string check_soundness(const SuiteOptions& o) {
  MobiusCache cache;
  const Certifier certify =
      o.certifier ? o.certifier : Certifier([](const Permutation& p) { return certify_zero(p); });
  for (int len = 1; len <= o.n_max; ++len) {
    for (const Permutation& p : all_of_length(len)) {
      auto cert = certify(p);
      if (!cert) continue;
      if (!o.certifier && !verify_certificate(p, *cert)) {
        return fail("certificate does not re-verify", p);
      }
      const std::int64_t mu = principal_mobius(p, cache);
      if (mu != 0) {
        return fail("certificate " + describe(*cert) + " issued with mu = " + std::to_string(mu), p);
      }
    }
  }
  return {};
}

std::string check_sum_annihilators(const SuiteOptions&) {
  MobiusCache cache;
  const auto small = all_up_to(3);
  const auto hosts = all_up_to(4);
  for (const Permutation& a : small) {
    for (const Permutation& b : small) {
      if (a.size() + b.size() > 4) continue;
      const Permutation phi = direct_sum(direct_sum(a, Permutation{1}), b);
      for (const Permutation& tau : hosts) {
        for (std::size_t i = 1; i <= tau.size(); ++i) {
          const std::vector<std::size_t> pos{i};
          const std::vector<Permutation> parts{phi};
          const Permutation p = inflate_at(tau, pos, parts);
          if (principal_mobius(p, cache) != 0) return fail("alpha+1+beta inflation is not a zero", p);
        }
      }
    }
  }
  return {};
}

std::string check_pairs(const SuiteOptions&) {
  MobiusCache cache;
  const auto& pairs = ZeroRuleSet::standard().pairs;
  for (const auto& [phi, psi] : pairs) {
    if (phi.size() == 2) continue;  // (12, 21) is the opposing-adjacency check
    for (const Permutation& tau : all_up_to(3)) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        for (std::size_t j = 1; j <= tau.size(); ++j) {
          if (i == j) continue;
          const std::vector<std::size_t> pos{i, j};
          const std::vector<Permutation> parts{phi, psi};
          const Permutation p = inflate_at(tau, pos, parts);
          if (principal_mobius(p, cache, true) != 0) {
            return fail("pair (" + phi.str() + ", " + psi.str() + ") inflation is not a zero", p);
          }
        }
      }
    }
  }
  return {};
}

std::string check_base_annihilators(const SuiteOptions&) {
  MobiusCache cache;
  for (const Permutation& base : ZeroRuleSet::standard().bases) {
    for (const Permutation& tau : all_up_to(3)) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        const std::vector<std::size_t> pos{i};
        const std::vector<Permutation> parts{base};
        const Permutation p = inflate_at(tau, pos, parts);
        if (principal_mobius(p, cache) != 0) return fail(base.str() + " inflation is not a zero", p);
      }
    }
  }
  return {};
}

std::string check_non_annihilators(const SuiteOptions&) {
  MobiusCache cache;
  if (principal_mobius(parse("214635"), cache) != 0) return "mu(1, 214635) != 0";
  if (principal_mobius(parse("32417685"), cache) == 0) return "mu(1, 32417685) == 0";
  for (const char* alpha : {"235614", "254613", "465213"}) {
    const std::vector<std::size_t> pos{2};
    const std::vector<Permutation> parts{parse(alpha)};
    const Permutation p = inflate_at(parse("24153"), pos, parts);
    if (principal_mobius(p, cache) == 0) return fail("24153 inflated by " + std::string(alpha) + " is a zero", p);
  }
  return {};
}

std::string check_sigma_sum_rule(const SuiteOptions& o) {
  const std::vector<std::pair<Permutation, Permutation>> parts{
      {Permutation{1}, Permutation{1}},
      {Permutation{1}, Permutation{1, 2}},
      {Permutation{1}, Permutation{2, 1}},
      {Permutation{1, 2}, Permutation{1}},
      {Permutation{2, 1}, Permutation{1}},
  };
  std::vector<Permutation> hosts = all_up_to(std::min(o.n_max, 6));
  if (o.n_max >= 7) {
    std::mt19937_64 rng(o.seed + 2);
    for (int k = 0; k < 150; ++k) hosts.push_back(unrank(7, rng() % factorial(7)));
  }
  std::size_t fired = 0;
  for (const Permutation& sigma : all_up_to(3)) {
    MobiusCache cache;
    for (const auto& [a, b] : parts) {
      for (const Permutation& host : hosts) {
        if (!sigma_sum_rule(sigma, a, b, host)) continue;
        ++fired;
        if (mobius(sigma, host, cache) != 0) {
          return "sigma_sum_rule(" + sigma.str() + ", " + a.str() + ", " + b.str() + ", " + host.str() +
                 ") fired with nonzero mu";
        }
      }
    }
  }
  if (fired == 0) return "sigma_sum_rule never fired";
  return {};
}

std::string check_pro_form_suite(const SuiteOptions& o) {
  const std::vector<std::pair<const char*, const char*>> sample{
      {"1", "132"},    {"1", "2413"},    {"12", "2413"},   {"1", "21354"},   {"21", "31524"},
      {"1", "214653"}, {"132", "214653"}, {"1", "3624715"}, {"12", "1324657"}, {"213", "2416375"},
  };
  for (const auto& [s, t] : sample) {
    if (parse(t).size() > static_cast<std::size_t>(std::max(o.n_max, 6))) continue;
    MobiusCache cache;
    for (std::uint64_t k = 0; k < 50; ++k) {
      if (!check_pro_form(parse(s), parse(t), o.seed + k, cache)) {
        return std::string("inversion identity fails on [") + s + ", " + t + "] seed " +
               std::to_string(o.seed + k);
      }
    }
  }
  return {};
}

std::string check_eq_cancel_suite(const SuiteOptions& o) {
  MobiusCache cache;
  for (int len = 4; len <= std::min(o.n_max, 7); ++len) {
    for (const Permutation& p : all_of_length(len)) {
      const Adjacencies adj = adjacencies(p);
      if (!adj.opposing()) continue;
      for (std::size_t up : adj.ups) {
        for (std::size_t down : adj.downs) {
          if (!check_eq_cancel_thm1(p, up, down, cache)) {
            return fail("cancellation fails for up=" + std::to_string(up) + " down=" + std::to_string(down), p);
          }
        }
      }
    }
  }
  return {};
}

std::string check_i_switch(const SuiteOptions&) {
  for (const Permutation& p : all_up_to(5)) {
    const std::size_t n = p.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> image;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (1u << k)) image.push_back(k + 1);
      }
      const Embedding f(p, image);
      for (std::size_t i = 1; i <= n; ++i) {
        if (image.size() == 1 && image[0] == i) continue;
        const Embedding g = i_switch(f, i);
        if (g.even() == f.even()) return fail("i_switch kept parity", p);
        if (i_switch(g, i) != f) return fail("i_switch is not an involution", p);
      }
    }
  }
  return {};
}

std::string check_fac_nd_planted(const SuiteOptions& o) {
  for (std::uint64_t k = 0; k < 100; ++k) {
    for (const PlantedPoset& pp : {planted_narrow(o.seed + k), planted_diamond(o.seed + k)}) {
      if (!check_fac_nd(pp.poset, pp.x, pp.y, pp.core)) {
        return "tipped interval with nonzero mu, seed " + std::to_string(o.seed + k);
      }
    }
  }
  return {};
}

std::string check_fac_del_suite(const SuiteOptions& o) {
  const PermutationPoset pp = interval_poset(Permutation{1}, parse("21354"));
  if (!check_fac_del(pp.poset, 0, pp.index_of(parse("123")))) return "deleting 123 from [1, 21354] changed mu";
  for (std::uint64_t k = 0; k < 100; ++k) {
    const PlantedPoset planted = planted_deletable_zero(o.seed + k);
    if (!check_fac_del(planted.poset, planted.x, planted.y)) {
      return "deleting a zero changed mu, seed " + std::to_string(o.seed + k);
    }
  }
  return {};
}

std::string check_core_214653(const SuiteOptions&) {
  const PermutationPoset pp = reduced_interval(parse("214653"), basic_rule_zero);
  std::set<std::string> got;
  for (const auto& p : pp.elements) got.insert(p.str());
  const std::set<std::string> expected{"1",    "12",   "21",   "231",   "132",   "213",
                                       "2431", "1342", "2143", "13542", "214653"};
  if (got != expected) {
    std::string detail = "reduced element set differs:";
    for (const auto& s : got) detail += " " + s;
    return detail;
  }
  const std::size_t x = pp.index_of(Permutation{1});
  const std::size_t y = pp.index_of(parse("214653"));
  const TippedCore core = TippedCore::diamond(pp.index_of(parse("13542")), pp.index_of(parse("2143")),
                                              pp.index_of(parse("132")));
  try {
    if (!check_fac_nd(pp.poset, x, y, core)) return "diamond-tipped but mu != 0";
  } catch (const CoreViolation& e) {
    return std::string("core (13542, 2143, 132) rejected: ") + e.what();
  }
  return {};
}

std::string check_core_214635(const SuiteOptions&) {
  if (principal_mobius(parse("214635")) != 0) return "mu(1, 214635) != 0";
  const PermutationPoset pp = reduced_interval(parse("214635"), basic_rule_zero);
  const std::size_t x = pp.index_of(Permutation{1});
  const std::size_t y = pp.index_of(parse("214635"));
  const TippedCore core = TippedCore::diamond(pp.index_of(parse("13524")), pp.index_of(parse("21435")),
                                              pp.index_of(parse("1324")));
  try {
    if (!check_fac_nd(pp.poset, x, y, core)) return "diamond-tipped but mu != 0";
  } catch (const CoreViolation& e) {
    return std::string("core (13524, 21435, 1324) rejected: ") + e.what();
  }
  return {};
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs{
      {"oracle-agreement", check_oracle_agreement},
      {"sum-to-zero", check_sum_to_zero},
      {"symmetry-invariance", check_symmetry_invariance},
      {"pruned-equals-unpruned", check_pruned_equals_unpruned},
      {"cache-soundness", check_cache_soundness},
      {"opposing-zero-exhaustive", check_opposing_zero},
      {"soundness-exhaustive", check_soundness},
      {"sum-annihilators-sampled", check_sum_annihilators},
      {"annihilator-pairs-sampled", check_pairs},
      {"base-annihilators-sampled", check_base_annihilators},
      {"non-annihilators", check_non_annihilators},
      {"sigma-sum-rule-sampled", check_sigma_sum_rule},
      {"pro-form", check_pro_form_suite},
      {"eq-cancel-thm1", check_eq_cancel_suite},
      {"i-switch-involution", check_i_switch},
      {"fac-nd-planted", check_fac_nd_planted},
      {"fac-del", check_fac_del_suite},
      {"diamond-core-214653", check_core_214653},
      {"diamond-core-214635", check_core_214635},
  };
  return specs;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

SuiteReport run_theorem_suites(const SuiteOptions& options) {
  if (options.n_max < 1 || options.n_max > 8) throw DomainError("n_max must be in 1..8");
  std::vector<const CheckSpec*> selected;
  for (const auto& s : registry()) {
    if (options.only.empty() || s.name == options.only) selected.push_back(&s);
  }
  if (selected.empty()) throw DomainError("unknown suite '" + options.only + "'");

  SuiteReport report;
  report.seed = options.seed;
  report.checks.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < selected.size(); k = next++) {
      CheckOutcome& out = report.checks[k];
      out.name = selected[k]->name;
      const auto start = std::chrono::steady_clock::now();
      try {
        out.detail = selected[k]->body(options);
        out.passed = out.detail.empty();
      } catch (const std::exception& e) {
        out.passed = false;
        out.detail = std::string("exception: ") + e.what();
      }
      out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, selected.size()));
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return report;
}

}  // namespace pmz
