#include <algorithm>

#include "doctest.h"
#include "fourmap/claims.hpp"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/serialize.hpp"

using namespace fourmap;

namespace {

ClaimConfig small_config(std::uint64_t seed = 0) {
  ClaimConfig c;
  c.seed = seed;
  c.corpus_size = 12;
  c.max_faces = 14;
  c.curve_max = 6;
  return c;
}

}  // namespace

TEST_CASE("claim ids round trip through their names") {
  for (auto id : kAllClaims) CHECK(parse_claim_id(to_string(id)) == id);
  CHECK_FALSE(parse_claim_id("nope"));
  CHECK_FALSE(parse_claim_id(""));
}

TEST_CASE("config validation") {
  ClaimConfig c;
  CHECK_NOTHROW(validate(c));
  c.corpus_size = 0;
  CHECK_THROWS_AS(validate(c), Error);
  c = {};
  c.min_faces = 31;
  CHECK_THROWS_AS(validate(c), Error);
  c = {};
  c.boxes_m = 40;
  CHECK_THROWS_AS(validate(c), Error);
  c = {};
  c.curve_max = 0;
  CHECK_THROWS_AS(run_claim(ClaimId::Conjecture6_1_n1, c), Error);
}

TEST_CASE("corpus plan is seeded and in range") {
  ClaimConfig c;
  auto a = corpus_plan(c);
  auto b = corpus_plan(c);
  REQUIRE(a.size() == 200);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].faces == b[i].faces);
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].faces >= 6);
    CHECK(a[i].faces <= 30);
  }
  c.seed = 1;
  auto other = corpus_plan(c);
  CHECK(other[0].seed != a[0].seed);
}

TEST_CASE("each claim reaches its expected verdict on a small corpus") {
  for (auto id : kAllClaims) {
    auto s = run_claim(id, small_config());
    CHECK(s.id == id);
    CHECK(s.verdict == expected_verdict(id));
    CHECK(s.replay_ok);
    CHECK(s.evidence.is_object());
  }
}

TEST_CASE("falsified claims carry a replayable counterexample") {
  auto flower = run_claim(ClaimId::Claim4_2, small_config());
  REQUIRE(flower.evidence.contains("counterexample"));
  auto map = map_from_json(flower.evidence["counterexample"]["map"]);
  CHECK(map == flower_counterexample().map);

  auto boxes = run_claim(ClaimId::Conjecture6_1_n3, small_config());
  REQUIRE(boxes.evidence.contains("counterexample"));
  CHECK(boxes.evidence["report"]["chi"] == 6);
  CHECK(boxes.evidence["complete"] == true);

  auto c = small_config();
  c.boxes_m = 5;
  auto five = run_claim(ClaimId::Conjecture6_1_n3, c);
  CHECK(five.verdict == ClaimVerdict::HoldsOnCorpus);
}

TEST_CASE("claims_ok") {
  ClaimStatus s;
  s.expected = ClaimVerdict::Verified;
  s.verdict = ClaimVerdict::Verified;
  CHECK(claims_ok({s}));
  s.verdict = ClaimVerdict::Falsified;
  CHECK_FALSE(claims_ok({s}));
  s.expected = ClaimVerdict::Falsified;
  CHECK(claims_ok({s}));
  s.replay_ok = false;
  CHECK_FALSE(claims_ok({s}));
  CHECK(claims_ok({}));
}

TEST_CASE("run_all is deterministic per seed") {
  for (std::uint64_t seed : {0ULL, 1ULL}) {
    auto a = run_all(seed);
    auto b = run_all(seed);
    REQUIRE(a.size() == std::size(kAllClaims));
    CHECK(claims_ok(a));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].id == kAllClaims[i]);
      CHECK(a[i].verdict == expected_verdict(a[i].id));
      CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
    }
  }
}
