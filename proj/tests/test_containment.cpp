#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "pmz/containment.hpp"
#include "pmz/symmetry.hpp"

using namespace pmz;

namespace {
std::set<std::string> strs(const std::vector<Permutation>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.str());
  return out;
}
}  // namespace

TEST_CASE("embeddings") {
  const auto e = embeddings(parse("3142"), parse("3624715"));
  REQUIRE(e.size() == 2);
  CHECK(e[0].image() == std::vector<std::size_t>{2, 3, 5, 7});
  CHECK(e[1].image() == std::vector<std::size_t>{2, 4, 5, 7});
  CHECK(embeddings(parse("1"), parse("2413")).size() == 4);
  bool found = false;
  for (const auto& f : embeddings(parse("132"), parse("41253"))) {
    found |= f.image() == std::vector<std::size_t>{2, 4, 5};
  }
  CHECK(found);
  CHECK_THROWS_AS(embeddings(Permutation{}, parse("12")), DomainError);
  CHECK(count_embeddings(parse("3142"), parse("3624715")) == 2);
}

TEST_CASE("contains") {
  CHECK(contains(parse("3142"), parse("3624715")));
  CHECK(contains(parse("2413"), parse("2413")));
  CHECK_FALSE(contains(parse("321"), parse("1234")));
  CHECK(contains(Permutation{}, parse("1")));
}

TEST_CASE("embedding basics") {
  const Embedding f(parse("41253"), {2, 4, 5});
  CHECK(f.source() == parse("132"));
  CHECK_FALSE(f.even());
  CHECK(f.contains_index(4));
  CHECK_FALSE(f.contains_index(3));
  CHECK_THROWS_AS(Embedding(parse("41253"), {}), DomainError);
  CHECK_THROWS_AS(Embedding(parse("41253"), {3, 2}), DomainError);
  CHECK_THROWS_AS(Embedding(parse("41253"), {6}), DomainError);
}

TEST_CASE("i_switch") {
  const Embedding f(parse("41253"), {2, 4, 5});
  const Embedding g = i_switch(f, 3);
  CHECK(g.image() == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(g.source() == parse("1243"));
  const Embedding h = i_switch(g, 5);
  CHECK(h.image() == std::vector<std::size_t>{2, 3, 4});
  CHECK(h.source() == parse("123"));
  CHECK(i_switch(i_switch(f, 1), 1) == f);
  CHECK_THROWS_AS(i_switch(Embedding(parse("21"), {1}), 1), DomainError);
}

TEST_CASE("down sets and intervals") {
  CHECK(strs(down_set(parse("2413"))) ==
        std::set<std::string>{"1", "12", "21", "132", "213", "231", "312", "2413"});
  CHECK(strs(down_set(parse("1"))) == std::set<std::string>{"1"});
  CHECK(strs(down_set(parse("123"))) == std::set<std::string>{"1", "12", "123"});
  CHECK(strs(interval_set(parse("12"), parse("2413"))) ==
        std::set<std::string>{"12", "132", "213", "231", "312", "2413"});
  CHECK(strs(interval_set(parse("2413"), parse("2413"))) == std::set<std::string>{"2413"});
  CHECK(interval_set(parse("21"), parse("12")).empty());
  const auto sorted = down_set(parse("3624715"));
  CHECK(std::is_sorted(sorted.begin(), sorted.end()));
  CHECK(strs(single_deletions(parse("1234"))) == std::set<std::string>{"123"});
}

TEST_CASE("element cap") {
  CHECK_THROWS_AS(down_set(parse("3624715"), 10), BudgetExceeded);
  CHECK_NOTHROW(down_set(parse("3624715"), 1000));
}

TEST_CASE("containment, embedding count and down-set agree with brute force for |pi| <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& host_seq : oracle::all_perms(n)) {
      const Permutation host(host_seq);
      const auto below = strs(down_set(host));
      for (int k = 1; k <= n; ++k) {
        for (const auto& pat_seq : oracle::all_perms(k)) {
          const Permutation pat(pat_seq);
          const auto count = oracle::count_occurrences(pat_seq, host_seq);
          REQUIRE(count_embeddings(pat, host) == count);
          REQUIRE(contains(pat, host) == (count > 0));
          REQUIRE(below.count(pat.str()) == (count > 0 ? 1u : 0u));
        }
      }
    }
  }
}

TEST_CASE("length 7 containment agrees with embedding counts and down-sets") {
  const auto hosts = oracle::all_perms(7);
  for (std::size_t h = 0; h < hosts.size(); h += 37) {
    const Permutation host(hosts[h]);
    const auto below = strs(down_set(host));
    for (int k = 1; k <= 7; ++k) {
      for (const auto& pat_seq : oracle::all_perms(k)) {
        const Permutation pat(pat_seq);
        const bool c = contains(pat, host);
        REQUIRE(c == (count_embeddings(pat, host) > 0));
        REQUIRE(c == (below.count(pat.str()) == 1));
      }
    }
  }
}

TEST_CASE("symmetries are containment automorphisms for |pi| <= 6") {
  std::vector<Permutation> small;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& s : oracle::all_perms(k)) small.emplace_back(s);
  }
  for (int n = 5; n <= 6; ++n) {
    for (const auto& s : oracle::all_perms(n)) {
      const Permutation host(s);
      for (const auto& pat : small) {
        const bool c = contains(pat, host);
        for (SymmetryOp g : all_symmetries()) REQUIRE(contains(g.apply(pat), g.apply(host)) == c);
      }
    }
  }
}

TEST_CASE("maximal elements below pi are single deletions") {
  for (const auto& s : oracle::all_perms(6)) {
    const Permutation p(s);
    const auto dels = strs(single_deletions(p));
    for (const auto& d : dels) CHECK(parse(d).size() == 5);
    std::set<std::string> maximal;
    for (const auto& t : down_set(p)) {
      if (t.size() == 5) maximal.insert(t.str());
    }
    REQUIRE(maximal == dels);
  }
}

TEST_CASE("inflating a point contains both the base and the part as an interval copy") {
  const std::vector<Permutation> alphas{parse("21"), parse("132"), parse("2413")};
  for (const auto& s : oracle::all_perms(4)) {
    const Permutation tau(s);
    for (const auto& alpha : alphas) {
      for (std::size_t i = 1; i <= tau.size(); ++i) {
        const std::vector<std::size_t> pos{i};
        const std::vector<Permutation> parts{alpha};
        const Permutation p = inflate_at(tau, pos, parts);
        CHECK(contains(tau, p));
        bool at_window = false;
        for (const auto& c : interval_copies(p, alpha)) at_window |= c.start == i;
        CHECK(at_window);
      }
    }
  }
}

TEST_CASE("layered interval") {
  const LayeredInterval li = layered_interval(parse("12"), parse("2413"));
  REQUIRE(li.levels.size() == 3);
  CHECK(li.levels[0] == std::vector<Permutation>{parse("12")});
  CHECK(li.levels[1].size() == 4);
  CHECK(li.levels[2] == std::vector<Permutation>{parse("2413")});
  CHECK(li.size() == 6);
  CHECK(layered_interval(parse("21"), parse("12")).empty());
}
