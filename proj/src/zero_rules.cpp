#include "pmz/zero_rules.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pmz/containment.hpp"

namespace pmz {

namespace {

bool copy_at(const Permutation& host, const Permutation& pattern, std::size_t start) {
  if (start < 1 || pattern.empty() || start + pattern.size() - 1 > host.size()) return false;
  const std::size_t end = start + pattern.size() - 1;
  if (!is_interval(host, start, end)) return false;
  int lo = host.at(start);
  for (std::size_t p = start; p <= end; ++p) lo = std::min(lo, host.at(p));
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (host.at(start + k) - lo + 1 != pattern[k]) return false;
  }
  return true;
}

std::vector<std::size_t> copy_starts(const Permutation& host, const Permutation& pattern) {
  std::vector<std::size_t> starts;
  for (const IntervalCopy& c : interval_copies(host, pattern)) starts.push_back(c.start);
  return starts;
}

bool registered_base(const ZeroRuleSet& rules, const Permutation& base) {
  return std::find(rules.bases.begin(), rules.bases.end(), base) != rules.bases.end();
}

bool registered_pair(const ZeroRuleSet& rules, const Permutation& a, const Permutation& b) {
  return std::find(rules.pairs.begin(), rules.pairs.end(), std::pair{a, b}) != rules.pairs.end();
}

std::optional<ZeroCertificate> find_pair(const Permutation& perm, const Permutation& first,
                                         const Permutation& second, SymmetryOp g) {
  const Permutation a = g.apply(first);
  const Permutation b = g.apply(second);
  if (a.size() + b.size() > perm.size()) return std::nullopt;
  const auto a_starts = copy_starts(perm, a);
  if (a_starts.empty()) return std::nullopt;
  const auto b_starts = copy_starts(perm, b);
  for (std::size_t sa : a_starts) {
    for (std::size_t sb : b_starts) {
      const bool disjoint = sa + a.size() <= sb || sb + b.size() <= sa;
      if (disjoint) return AnnihilatorPair{first, second, g, sa, sb};
    }
  }
  return std::nullopt;
}

}  // namespace

const ZeroRuleSet& ZeroRuleSet::standard() {
  static const ZeroRuleSet rules{
      {Permutation{2, 1, 5, 4, 6, 3}, Permutation{2, 3, 6, 1, 4, 5}, Permutation{2, 1, 4, 6, 5, 3}},
      {
          {Permutation{1, 2}, Permutation{2, 1}},
          {Permutation{2, 1, 3}, Permutation{2, 4, 3, 1}},
          {Permutation{2, 1, 4, 3}, Permutation{2, 4, 3, 1}},
          {Permutation{3, 1, 2}, Permutation{2, 3, 5, 1, 4}},
          {Permutation{2, 5, 1, 3, 4}, Permutation{2, 3, 5, 1, 4}},
      }};
  return rules;
}

ZeroRuleSet ZeroRuleSet::with_conjectured() {
  ZeroRuleSet rules = standard();
  rules.pairs.emplace_back(Permutation{3, 1, 2}, Permutation{2, 3, 5, 6, 1, 4});
  return rules;
}

std::optional<ZeroCertificate> certify_zero(const Permutation& perm, const ZeroRuleSet& rules) {
  const Adjacencies adj = adjacencies(perm);
  if (adj.opposing()) return OpposingAdjacencies{adj.ups.front(), adj.downs.front()};

  if (auto s = find_sum_split_interval(perm)) return SumAnnihilator{SumKind::kDirect, *s};
  if (auto s = find_sum_split_interval(complement(perm))) return SumAnnihilator{SumKind::kSkew, *s};

  for (const Permutation& base : rules.bases) {
    if (base.size() > perm.size()) continue;
    for (SymmetryOp g : all_symmetries()) {
      const auto starts = copy_starts(perm, g.apply(base));
      if (!starts.empty()) return BaseAnnihilator{base, g, starts.front()};
    }
  }

  for (const auto& [first, second] : rules.pairs) {
    for (SymmetryOp g : all_symmetries()) {
      if (auto cert = find_pair(perm, first, second, g)) return cert;
    }
  }
  return std::nullopt;
}

bool verify_certificate(const Permutation& perm, const ZeroCertificate& cert,
                        const ZeroRuleSet& rules) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, OpposingAdjacencies>) {
          const auto ok = [&](std::size_t i, int step) {
            return i >= 1 && i + 1 <= perm.size() && perm.at(i + 1) == perm.at(i) + step;
          };
          return ok(c.up, 1) && ok(c.down, -1);
        } else if constexpr (std::is_same_v<T, SumAnnihilator>) {
          return is_sum_split(c.kind == SumKind::kDirect ? perm : complement(perm), c.split);
        } else if constexpr (std::is_same_v<T, BaseAnnihilator>) {
          return registered_base(rules, c.base) && copy_at(perm, c.symmetry.apply(c.base), c.start);
        } else {
          if (!registered_pair(rules, c.first, c.second)) return false;
          const Permutation a = c.symmetry.apply(c.first);
          const Permutation b = c.symmetry.apply(c.second);
          const bool disjoint =
              c.first_start + a.size() <= c.second_start || c.second_start + b.size() <= c.first_start;
          return disjoint && copy_at(perm, a, c.first_start) && copy_at(perm, b, c.second_start);
        }
      },
      cert);
}

bool sigma_sum_rule(const Permutation& bottom, const Permutation& alpha, const Permutation& beta,
                    const Permutation& host) {
  if (alpha.empty() || beta.empty() || bottom.empty()) {
    throw DomainError("sigma_sum_rule: alpha, beta and sigma must be nonempty");
  }
  const Permutation phi = direct_sum(direct_sum(alpha, Permutation{1}), beta);
  if (phi.size() > host.size() || interval_copies(host, phi).empty()) return false;
  for (const Permutation& a : down_set(alpha)) {
    for (const Permutation& b : down_set(beta)) {
      const Permutation ab = direct_sum(a, b);
      if (ab.size() <= bottom.size() && !interval_copies(bottom, ab).empty()) return false;
    }
  }
  return true;
}

std::string rule_name(const ZeroCertificate& cert) {
  static constexpr const char* names[] = {"opposing-adjacencies", "sum-annihilator",
                                          "base-annihilator", "annihilator-pair"};
  return names[cert.index()];
}

std::string witness_text(const ZeroCertificate& cert) {
  std::ostringstream out;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, OpposingAdjacencies>) {
          out << "up=" << c.up << " down=" << c.down;
        } else if constexpr (std::is_same_v<T, SumAnnihilator>) {
          out << "kind=" << (c.kind == SumKind::kDirect ? "direct" : "skew") << " window="
              << c.split.start << ".." << c.split.end << " split=" << c.split.split;
        } else if constexpr (std::is_same_v<T, BaseAnnihilator>) {
          out << "base=" << c.base.str() << " sym=" << c.symmetry.label() << " window=" << c.start
              << ".." << c.start + c.base.size() - 1;
        } else {
          out << "pair=" << c.first.str() << ',' << c.second.str() << " sym=" << c.symmetry.label()
              << " windows=" << c.first_start << ".." << c.first_start + c.first.size() - 1 << ','
              << c.second_start << ".." << c.second_start + c.second.size() - 1;
        }
      },
      cert);
  return out.str();
}

std::string describe(const ZeroCertificate& cert) {
  return rule_name(cert) + " " + witness_text(cert);
}

std::string certificate_line(const Permutation& perm, const ZeroCertificate& cert) {
  return perm.str() + "\t" + rule_name(cert) + "\t" + witness_text(cert);
}

namespace {

std::size_t to_index(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("bad index '" + std::string(s) + "'");
  }
  return v;
}

// "a..b" -> (a, b)
std::pair<std::size_t, std::size_t> to_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) throw DomainError("bad window '" + std::string(s) + "'");
  return {to_index(s.substr(0, dots)), to_index(s.substr(dots + 2))};
}

// Parses "k1=v1 k2=v2 ..." into an ordered key lookup.
class Fields {
 public:
  explicit Fields(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) throw DomainError("bad witness field '" + token + "'");
      fields_.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
  }
  const std::string& get(std::string_view key) const {
    for (const auto& [k, v] : fields_) {
      if (k == key) return v;
    }
    throw DomainError("witness missing field '" + std::string(key) + "'");
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace

std::pair<Permutation, ZeroCertificate> parse_certificate_line(std::string_view line) {
  const auto t1 = line.find('\t');
  const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
  if (t2 == std::string_view::npos) throw DomainError("certificate line needs three tab fields");
  const Permutation perm = parse(line.substr(0, t1));
  const std::string_view rule = line.substr(t1 + 1, t2 - t1 - 1);
  const Fields f(line.substr(t2 + 1));

  if (rule == "opposing-adjacencies") {
    return {perm, OpposingAdjacencies{to_index(f.get("up")), to_index(f.get("down"))}};
  }
  if (rule == "sum-annihilator") {
    const std::string& kind = f.get("kind");
    if (kind != "direct" && kind != "skew") throw DomainError("bad sum kind '" + kind + "'");
    const auto [start, end] = to_range(f.get("window"));
    return {perm, SumAnnihilator{kind == "direct" ? SumKind::kDirect : SumKind::kSkew,
                                 SumSplit{start, end, to_index(f.get("split"))}}};
  }
  if (rule == "base-annihilator") {
    const auto [start, end] = to_range(f.get("window"));
    Permutation base = parse(f.get("base"));
    if (end + 1 != start + base.size()) throw DomainError("base window length mismatch");
    return {perm, BaseAnnihilator{std::move(base), SymmetryOp::from_label(f.get("sym")), start}};
  }
  if (rule == "annihilator-pair") {
    const std::string& pair = f.get("pair");
    const std::string& windows = f.get("windows");
    const auto pc = pair.find(',');
    const auto wc = windows.find(',');
    if (pc == std::string::npos || wc == std::string::npos) throw DomainError("bad pair witness");
    Permutation first = parse(pair.substr(0, pc));
    Permutation second = parse(pair.substr(pc + 1));
    const auto w1 = to_range(std::string_view(windows).substr(0, wc));
    const auto w2 = to_range(std::string_view(windows).substr(wc + 1));
    if (w1.second + 1 != w1.first + first.size() || w2.second + 1 != w2.first + second.size()) {
      throw DomainError("pair window length mismatch");
    }
    return {perm, AnnihilatorPair{std::move(first), std::move(second),
                                  SymmetryOp::from_label(f.get("sym")), w1.first, w2.first}};
  }
  throw DomainError("unknown rule '" + std::string(rule) + "'");
}

}  // namespace pmz
