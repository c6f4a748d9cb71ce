#include "doctest.h"
#include "valueset/corpus.hpp"
#include "valueset/errors.hpp"
#include "valueset/oracle.hpp"
#include "valueset/primes.hpp"

using namespace valueset;

namespace {

IntPoly P(std::string_view s) { return IntPoly::parse(s); }

}  // namespace

TEST_CASE("naive image and counts") {
  CHECK(oracle::naive_image_mod_m(P("x^2"), 105).size() == 24);
  CHECK(oracle::naive_image_mod_m(P("x"), 10).size() == 10);
  const std::int64_t one[] = {1}, zero[] = {0, 0};
  CHECK(oracle::naive_nk_mod_m(P("x^2"), 105, one) == 4);
  CHECK(oracle::naive_nk_mod_m(P("x^2"), 105, zero) == 24);
  CHECK_THROWS_AS(oracle::naive_image_mod_m(P("x"), 1'000'001), InvalidInput);
  CHECK_THROWS_AS(oracle::naive_nk_mod_m(P("x"), 0, one), InvalidInput);
}

TEST_CASE("resultant cross-check") {
  const auto quartic = oracle::resultant_cross_check(P("x^4-2x^2"), 7);
  CHECK(quartic.match);
  CHECK(quartic.expected == "{0,1,6}");
  CHECK(quartic.actual == "{0,1,6}");

  const auto square = oracle::resultant_cross_check(P("x^2"), 13);
  CHECK(square.match);
  CHECK(square.expected == "{0}");
  CHECK(square.actual == "{0}");

  // f' = 3x^2 + 1 has no roots in F_5; the critical points live in F_25.
  const auto cubic = oracle::resultant_cross_check(P("x^3+x"), 5);
  CHECK(cubic.match);
  CHECK(cubic.expected == "{}");
  CHECK(cubic.actual != "{}");

  CHECK_THROWS_AS(oracle::resultant_cross_check(P("x^2"), 211), InvalidInput);
  CHECK_THROWS_AS(oracle::resultant_cross_check(P("x^4"), 3), InvalidInput);

  for (const auto& e : kCorpus) {
    const IntPoly f = P(e.text);
    if (f.degree() < 2) continue;
    for (std::uint64_t p : primes_in_range(f.degree() + 1, 200)) {
      CAPTURE(e.text);
      CAPTURE(p);
      CHECK(oracle::resultant_cross_check(f, p).match);
    }
  }
}
