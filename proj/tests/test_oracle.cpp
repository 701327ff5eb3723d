#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/oracle.hpp"
#include "maxrep/seq.hpp"
#include "maxrep/square.hpp"
#include "test_util.hpp"

using namespace maxrep;
using testutil::seq;

namespace {
const char* kFixture = "abcabcaccabcac";
}

TEST_CASE("k-repetition check with leftmost witness") {
  Seq s0 = seq(kFixture);
  auto c = oracle::check_k_repeating(s0, seq("cabcac"), 2);
  REQUIRE(c.ok);
  REQUIRE(c.blocks.size() == 2);
  CHECK(c.blocks[0].indices == std::vector<Index>{3, 4, 5, 6, 7, 8});
  CHECK(c.blocks[1].indices == std::vector<Index>{9, 10, 11, 12, 13, 14});

  CHECK(oracle::check_k_repeating(s0, Seq(), 5).ok);
  auto bad = oracle::check_k_repeating(seq("aaaaa"), seq("aa"), 3);
  CHECK_FALSE(bad.ok);
  CHECK(bad.fail_copy == 3);
  CHECK(bad.fail_offset == 2);
}

TEST_CASE("repeat-then-match agrees with chained leftmost embeddings") {
  std::mt19937_64 rng(600);
  for (int it = 0; it < 400; ++it) {
    Seq s = testutil::random_seq(rng, 30, 3);
    Seq x = testutil::random_seq(rng, 6, 3);
    std::size_t k = 1 + rng() % 4;
    auto direct = oracle::check_k_repeating(s, x, k);
    auto chained = k_fold_leftmost_embedding(s, x, k);
    CHECK(direct.ok == chained.has_value());
    if (direct.ok && chained) {
      CHECK(direct.blocks.size() == chained->size());
      for (std::size_t b = 0; b < chained->size(); ++b) {
        CHECK(direct.blocks[b].indices == (*chained)[b].indices);
      }
    }
  }
}

TEST_CASE("maximality verdicts on worked candidates") {
  Seq s0 = seq(kFixture);
  // The stage-one square abcac*abcac is not maximal; prepending c to the
  // half repairs it, and the scan reports exactly that insertion.
  auto not_max = oracle::check_maximal_k_rep(s0, seq("abcac"), 2);
  CHECK(not_max.is_valid);
  CHECK_FALSE(not_max.is_maximal);
  REQUIRE(not_max.counterexample.has_value());
  CHECK(not_max.counterexample->first == 0);
  CHECK(not_max.counterexample->second == Symbol('c'));

  CHECK(oracle::check_maximal_k_rep(seq("aaaa"), seq("aa"), 2).is_maximal);

  auto tail = oracle::check_maximal_k_rep(seq("abcabcabc"), seq("ab"), 3);
  CHECK_FALSE(tail.is_maximal);
  REQUIRE(tail.counterexample.has_value());
  CHECK(tail.counterexample->first == 2);
  CHECK(tail.counterexample->second == Symbol('c'));

  CHECK_THROWS_AS(oracle::check_maximal_k_rep(seq("ab"), seq("abc"), 2),
                  NotKRepeating);
}

TEST_CASE("counterexamples extend to verified supersequences") {
  std::mt19937_64 rng(601);
  int found = 0;
  for (int it = 0; it < 200; ++it) {
    Seq s = testutil::random_seq(rng, 20, 2);
    std::size_t k = 2 + rng() % 2;
    Seq x = testutil::random_subsequence(rng, s, 30);
    if (!oracle::check_k_repeating(s, x, k).ok) continue;
    auto v = oracle::check_maximal_k_rep(s, x, k);
    CHECK(v.is_maximal == !v.counterexample.has_value());
    if (v.counterexample) {
      ++found;
      auto [gap, c] = *v.counterexample;
      std::vector<Symbol> ext = x.symbols();
      ext.insert(ext.begin() + static_cast<std::ptrdiff_t>(gap), c);
      CHECK(oracle::check_k_repeating(s, Seq(std::move(ext)), k).ok);
    }
  }
  CHECK(found > 40);
}

TEST_CASE("brute start enumeration fixtures") {
  Seq s0 = seq(kFixture);
  std::set<std::vector<Index>> expected{{1, 7}, {1, 10}, {4, 10}};
  CHECK(oracle::brute_sigma_starts(s0, 'a', 2, 2) == expected);
  CHECK(oracle::brute_sigma_starts(seq("aa"), 'a', 1, 2) ==
        std::set<std::vector<Index>>{{1, 2}});
  CHECK(oracle::brute_sigma_starts(seq("aba"), 'a', 2, 1) ==
        std::set<std::vector<Index>>{{1}});
}

TEST_CASE("exhaustive maximal sets") {
  auto abab = oracle::brute_all_maximal(seq("abab"), 2);
  REQUIRE(abab.size() == 1);
  CHECK(abab[0] == seq("ab"));

  auto abc = oracle::brute_all_maximal(seq("abc"), 2);
  REQUIRE(abc.size() == 1);
  CHECK(abc[0].empty());

  auto aabb = oracle::brute_all_maximal(seq("aabb"), 2);
  CHECK(oracle::contains_seq(aabb, seq("a")));
  CHECK(oracle::contains_seq(aabb, seq("b")));
  CHECK(aabb.size() == 2);

  CHECK_THROWS_AS(oracle::brute_all_maximal(seq("aaaaaaaaaaaaaaaa"), 2),
                  InstanceTooLarge);
  CHECK_THROWS_AS(oracle::brute_all_maximal(seq("aaaaaaaaaaaaa"), 3),
                  InstanceTooLarge);
}

TEST_CASE("exhaustive set members are a maximal antichain") {
  std::mt19937_64 rng(602);
  for (int it = 0; it < 60; ++it) {
    Seq s = testutil::random_seq(rng, 12, 3);
    std::size_t k = 2 + rng() % 2;
    auto ground = oracle::brute_all_maximal(s, k);
    CHECK(!ground.empty());
    for (const Seq& x : ground) {
      CHECK(oracle::check_maximal_k_rep(s, x, k).is_maximal);
      for (const Seq& y : ground) {
        if (&x == &y) continue;
        CHECK_FALSE(is_subsequence(x, y));
      }
    }
  }
}

TEST_CASE("single-insertion maximality equals supersequence-free membership") {
  // Downward closure of the k-repeating family is what justifies testing
  // only one-symbol insertions; compare against the full enumeration.
  std::mt19937_64 rng(603);
  for (int it = 0; it < 40; ++it) {
    Seq s = testutil::random_seq(rng, 10, 2);
    std::size_t k = 2 + rng() % 2;
    auto ground = oracle::brute_all_maximal(s, k);
    for (const Seq& x : oracle::all_distinct_subsequences(s)) {
      if (!oracle::check_k_repeating(s, x, k).ok) continue;
      bool single = oracle::check_maximal_k_rep(s, x, k).is_maximal;
      CHECK(single == oracle::contains_seq(ground, x));
    }
  }
}

TEST_CASE("constrained-MCS verdicts") {
  std::vector<Seq> hosts{seq("abcabc"), seq("accabcac")};
  CHECK(oracle::verify_mcs_output(hosts, seq("aa"), seq("abcac")).ok());

  std::vector<Seq> pair{seq("ab"), seq("ab")};
  auto v = oracle::verify_mcs_output(pair, Seq(), seq("a"));
  CHECK(v.valid());
  CHECK_FALSE(v.maximal);
  REQUIRE(v.counterexample.has_value());

  std::vector<Seq> crossed{seq("ab"), seq("ba")};
  auto bad = oracle::verify_mcs_output(crossed, Seq(), seq("ab"));
  CHECK_FALSE(bad.valid());
  CHECK(bad.failing_host == std::size_t{1});
}

TEST_CASE("longest-square lengths") {
  CHECK(oracle::lss_oracle(seq("aaaa")) == 4);
  CHECK(oracle::lss_oracle(seq("abc")) == 0);
  Seq s0 = seq(kFixture);
  std::size_t lss = oracle::lss_oracle(s0);
  CHECK(lss >= 12);
  CHECK(lss % 2 == 0);
  CHECK(lss <= static_cast<std::size_t>(s0.size()));
  CHECK(lss >= 2 * maximal_square_subsequence(s0).unit.symbols().size());
}

TEST_CASE("longest-square length equals the best exhaustive member") {
  std::mt19937_64 rng(604);
  for (int it = 0; it < 40; ++it) {
    Seq s = testutil::random_seq(rng, 14, 2);
    std::size_t best = 0;
    for (const Seq& x : oracle::brute_all_maximal(s, 2)) {
      best = std::max(best, 2 * x.symbols().size());
    }
    CHECK(oracle::lss_oracle(s) == best);
  }
}

TEST_CASE("extendability probes match the insertion oracle") {
  std::mt19937_64 rng(605);
  int squares = 0;
  for (int it = 0; it < 300; ++it) {
    Seq s = testutil::random_seq(rng, 16, 2);
    Seq y = testutil::random_subsequence(rng, s, 40);
    if (!oracle::check_k_repeating(s, y, 2).ok) continue;
    ++squares;
    bool maximal = oracle::check_maximal_k_rep(s, y, 2).is_maximal;
    bool extendable = oracle::right_extendable(s, y) ||
                      oracle::left_extendable(s, y) ||
                      oracle::inner_extendable(s, y);
    CHECK(maximal == !extendable);
  }
  CHECK(squares > 100);
}
