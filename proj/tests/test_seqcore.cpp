#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "maxrep/embedding.hpp"
#include "maxrep/errors.hpp"
#include "maxrep/occ_index.hpp"
#include "maxrep/seq.hpp"
#include "test_util.hpp"

using namespace maxrep;
using testutil::seq;

namespace {

const char* kFixture = "abcabcaccabcac";

// Scan oracles, deliberately index-by-index and slow.
std::optional<Index> next_pt_naive(const Seq& s, const Seq& x, Index i) {
  for (Index j = i; j <= s.size(); ++j) {
    if (is_subsequence(x, s.left_open(i, j))) return j;
  }
  return std::nullopt;
}

std::optional<Index> prev_pt_naive(const Seq& s, const Seq& x, Index i) {
  for (Index l = i; l >= 1; --l) {
    if (is_subsequence(x, s.right_open(l, i))) return l;
  }
  return std::nullopt;
}

void all_embeddings_rec(const Seq& pattern, const Seq& host, std::size_t t,
                        Index from, std::vector<Index>& cur,
                        std::vector<std::vector<Index>>& out) {
  if (t == pattern.symbols().size()) {
    out.push_back(cur);
    return;
  }
  for (Index i = from; i <= host.size(); ++i) {
    if (host.at(i) == pattern.symbols()[t]) {
      cur.push_back(i);
      all_embeddings_rec(pattern, host, t + 1, i + 1, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<std::vector<Index>> all_embeddings(const Seq& pattern,
                                               const Seq& host) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  all_embeddings_rec(pattern, host, 0, 1, cur, out);
  return out;
}

}  // namespace

TEST_CASE("interval views follow the closed/open conventions") {
  Seq s = seq("abcde");
  CHECK(s.closed(2, 4) == seq("bcd"));
  CHECK(s.right_open(2, 4) == seq("bc"));
  CHECK(s.left_open(2, 4) == seq("cd"));
  CHECK(s.open(2, 4) == seq("c"));
  CHECK(s.closed(4, 2).empty());   // crossing bounds give epsilon
  CHECK(s.open(3, 4).empty());
  CHECK(s.closed(1, 5) == s);
  CHECK(s.open(0, 6) == s);        // sentinel bounds
  CHECK(s.left_open(5, 5).empty());
}

TEST_CASE("utf8 and byte decoding") {
  CHECK(seq("abc").size() == 3);
  Seq uni = Seq::from_utf8("a\xc3\xa9z");  // 'a', e-acute, 'z'
  CHECK(uni.size() == 3);
  CHECK(uni.at(2) == 0xe9);
  CHECK(uni.to_utf8() == "a\xc3\xa9z");
  CHECK_THROWS_AS(Seq::from_utf8("\xff"), BadEncoding);
  CHECK_THROWS_AS(Seq::from_utf8("\xc3"), BadEncoding);     // truncated
  CHECK_THROWS_AS(Seq::from_utf8("\xc0\xaf"), BadEncoding); // overlong
  Seq bytes = Seq::from_bytes(std::string_view("\xff\x00\x61", 3));
  CHECK(bytes.size() == 3);
  CHECK(bytes.at(1) == 0xff);
  CHECK(bytes.at(2) == 0);
}

TEST_CASE("leftmost_embedding examples") {
  Seq s0 = seq(kFixture);
  auto e = leftmost_embedding(seq("abcac"), s0, 0);
  REQUIRE(e.has_value());
  CHECK(e->indices == std::vector<Index>{1, 2, 3, 4, 6});

  auto empty = leftmost_embedding(Seq(), s0, 0);
  REQUIRE(empty.has_value());
  CHECK(empty->indices.empty());

  auto shifted = leftmost_embedding(seq("abcac"), s0, 3);
  REQUIRE(shifted.has_value());
  CHECK(shifted->indices == std::vector<Index>{4, 5, 6, 7, 8});
}

TEST_CASE("rightmost_embedding examples") {
  Seq s0 = seq(kFixture);
  auto e = rightmost_embedding(seq("ab"), s0, 6);
  REQUIRE(e.has_value());
  CHECK(e->indices == std::vector<Index>{4, 5});

  auto empty = rightmost_embedding(Seq(), s0, 1);
  REQUIRE(empty.has_value());
  CHECK(empty->indices.empty());

  CHECK_FALSE(rightmost_embedding(seq("ccc"), seq("cc"), 3).has_value());
}

TEST_CASE("next_pt examples") {
  IndexedSeq s0(seq(kFixture));
  CHECK(next_pt(s0, seq("bc"), 1) == Index{3});
  CHECK_FALSE(next_pt(s0, seq("a"), 13).has_value());
  CHECK(next_pt(s0, Seq(), 7) == Index{7});
}

TEST_CASE("prev_pt examples") {
  IndexedSeq s0(seq(kFixture));
  CHECK(prev_pt(s0, seq("ab"), 5) == Index{1});
  CHECK(prev_pt(s0, Seq(), 9) == Index{9});
  // S0[1..7] = abcabca holds three a's, so a third 'a' still fits; the
  // window oracle agrees.
  CHECK(prev_pt(s0, seq("aaa"), 8) == Index{1});
  CHECK(prev_pt_naive(s0.seq, seq("aaa"), 8) == Index{1});
  CHECK_FALSE(prev_pt(s0, seq("aaaa"), 8).has_value());
}

TEST_CASE("occ_positions examples") {
  Seq s0 = seq(kFixture);
  CHECK(occ_positions(s0, 'a') == std::vector<Index>{1, 4, 7, 10, 13});
  CHECK(occ_positions(s0, 'z').empty());
  CHECK(occ_positions(seq("bab"), 'b') == std::vector<Index>{1, 3});
}

TEST_CASE("occurrence index: dense and binary paths agree") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 50; ++it) {
    Seq s = testutil::random_seq(rng, 40, 5);
    OccIndex dense(s, OccIndex::Policy::Dense);
    OccIndex binary(s, OccIndex::Policy::Binary);
    for (Symbol c : {Symbol('a'), Symbol('c'), Symbol('e'), Symbol('z')}) {
      for (Index i = 0; i <= s.size(); ++i) {
        CHECK(dense.next_after(c, i) == binary.next_after(c, i));
      }
      for (Index i = 1; i <= s.size() + 1; ++i) {
        CHECK(dense.prev_before(c, i) == binary.prev_before(c, i));
      }
    }
  }
}

TEST_CASE("embedding existence matches the naive subsequence test") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 300; ++it) {
    Seq host = testutil::random_seq(rng, 24, 3);
    Seq pattern = testutil::random_seq(rng, 8, 3);
    bool naive = is_subsequence(pattern, host);
    CHECK(leftmost_embedding(pattern, host, 0).has_value() == naive);
    CHECK(rightmost_embedding(pattern, host, host.size() + 1).has_value() ==
          naive);
  }
}

TEST_CASE("next_pt / prev_pt monotonicity and window consistency") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 200; ++it) {
    IndexedSeq s(testutil::random_seq(rng, 30, 3));
    Seq x = testutil::random_seq(rng, 5, 3);
    std::optional<Index> prev_result;
    for (Index i = 0; i <= s.seq.size(); ++i) {
      auto j = next_pt(s, x, i);
      CHECK(j == next_pt_naive(s.seq, x, i));
      if (j) {
        CHECK(is_subsequence(x, s.seq.left_open(i, *j)));
        if (!x.empty()) {
          CHECK_FALSE(is_subsequence(x, s.seq.left_open(i, *j - 1)));
        }
        if (prev_result) CHECK(*prev_result <= *j);
        prev_result = j;
      }
    }
    std::optional<Index> prev_l;
    for (Index i = 1; i <= s.seq.size() + 1; ++i) {
      auto l = prev_pt(s, x, i);
      CHECK(l == prev_pt_naive(s.seq, x, i));
      if (l) {
        CHECK(is_subsequence(x, s.seq.right_open(*l, i)));
        if (!x.empty()) {
          CHECK_FALSE(is_subsequence(x, s.seq.right_open(*l + 1, i)));
        }
        if (prev_l) CHECK(*prev_l <= *l);
        prev_l = l;
      }
    }
  }
}

TEST_CASE("leftmost embedding is pointwise minimal") {
  std::mt19937_64 rng(7);
  int nonempty = 0;
  for (int it = 0; it < 120; ++it) {
    Seq host = testutil::random_seq(rng, 12, 2);
    Seq pattern = testutil::random_seq(rng, 5, 2);
    auto lm = leftmost_embedding(pattern, host, 0);
    auto all = all_embeddings(pattern, host);
    CHECK(lm.has_value() == !all.empty());
    if (!lm || pattern.empty()) continue;
    ++nonempty;
    for (const auto& e : all) {
      for (std::size_t t = 0; t < e.size(); ++t) {
        CHECK(lm->indices[t] <= e[t]);
      }
    }
  }
  CHECK(nonempty > 20);  // the corpus actually exercised the property
}
