#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "maxrep/errors.hpp"
#include "maxrep/krep.hpp"
#include "maxrep/report.hpp"
#include "maxrep/seq.hpp"
#include "maxrep/square.hpp"
#include "test_util.hpp"

using namespace maxrep;
using testutil::seq;

TEST_CASE("mss reports carry the square and its half") {
  Seq s = seq("abcabcaccabcac");
  KRepResult res = maximal_square_subsequence(s);
  RunReport rep = make_report("mss", s, false, res, 1.25);
  CHECK(rep.result_length == rep.unit.size() * 2);
  CHECK(rep.result == rep.unit + rep.unit);
  CHECK(rep.input_length == 14);
  CHECK(rep.witness.size() == 2);
  CHECK(rep.verified);
  CHECK(recheck_witness(rep, s));
}

TEST_CASE("reports survive a JSON round trip and re-verification") {
  std::mt19937_64 rng(700);
  for (int it = 0; it < 60; ++it) {
    Seq s = testutil::random_seq(rng, 30, 3);
    std::size_t k = 2 + rng() % 3;
    KRepResult res = maximal_k_repeating(s, k);
    RunReport rep = make_report("krep", s, false, res, 0.0);
    RunReport back = report_from_json(report_to_json(rep));
    CHECK(back.command == rep.command);
    CHECK(back.k == rep.k);
    CHECK(back.result == rep.result);
    CHECK(back.unit == rep.unit);
    CHECK(back.witness == rep.witness);
    CHECK(back.sigma == rep.sigma);
    REQUIRE(back.input.has_value());
    Seq input = decode_symbols(*back.input, back.byte_mode);
    CHECK(input == s);
    CHECK(recheck_witness(back, input));
  }
}

TEST_CASE("tampered witnesses are rejected") {
  Seq s = seq("abcabc");
  KRepResult res = maximal_k_repeating(s, 2);
  RunReport rep = make_report("krep", s, false, res, 0.0);
  REQUIRE(!rep.witness.empty());
  REQUIRE(!rep.witness[0].empty());
  rep.witness[0][0] += 1;
  CHECK_FALSE(recheck_witness(rep, s));
}

TEST_CASE("byte-mode reports hex-encode symbols") {
  Seq s = Seq::from_bytes(std::string_view("\x00\x01\x00\x01", 4));
  KRepResult res = maximal_square_subsequence(s);
  RunReport rep = make_report("mss", s, true, res, 0.0);
  RunReport back = report_from_json(report_to_json(rep));
  CHECK(decode_symbols(*back.input, true) == s);
  CHECK(recheck_witness(back, s));
}

TEST_CASE("malformed report JSON is reported as an error") {
  CHECK_THROWS_AS(report_from_json("not json"), Error);
  CHECK_THROWS_AS(report_from_json("{\"schema\": 2}"), Error);
}
