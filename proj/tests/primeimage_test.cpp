#include <algorithm>
#include <random>

#include "doctest.h"
#include "valueset/corpus.hpp"
#include "valueset/errors.hpp"
#include "valueset/oracle.hpp"
#include "valueset/primeimage.hpp"
#include "valueset/primes.hpp"

using namespace valueset;

namespace {

IntPoly P(std::string_view s) { return IntPoly::parse(s); }

std::vector<std::uint64_t> members(const ImageMask& m) {
  std::vector<std::uint64_t> out;
  m.bits().for_each_set([&](std::uint64_t t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST_CASE("compute_image examples") {
  const ImageMask id = compute_image(P("x"), 11);
  CHECK(id.count() == 11);
  CHECK(prime_stats(id, 1).s_p == 1);

  const ImageMask sq = compute_image(P("x^2"), 7);
  CHECK(members(sq) == std::vector<std::uint64_t>{0, 1, 2, 4});
  CHECK(prime_stats(sq, 2).s_p == mpq_class(7, 4));

  CHECK(members(compute_image(P("x^4-2x^2"), 5)) == std::vector<std::uint64_t>{0, 3, 4});
  CHECK(members(compute_image(P("7"), 5)) == std::vector<std::uint64_t>{2});

  CHECK_THROWS_AS(compute_image(P("x"), 15), InvalidInput);
  CHECK_THROWS_AS(compute_image(P("x"), 2147483659ULL), InvalidInput);
  CHECK_THROWS_AS(compute_image(P("x"), 1), InvalidInput);
}

TEST_CASE("Horner and finite-difference images are identical and match the oracle") {
  std::vector<IntPoly> polys;
  for (const auto& e : kCorpus) polys.push_back(P(e.text));
  polys.push_back(P("-987654321987654321x^5+3x^3-x+123456789123456789"));
  polys.push_back(P("x^9+x^8-7"));
  for (const auto& f : polys) {
    for (std::uint64_t p : primes_in_range(2, 1500)) {
      CAPTURE(f.to_string());
      CAPTURE(p);
      const ImageMask a = compute_image(f, p, ImageStrategy::horner);
      const ImageMask b = compute_image(f, p, ImageStrategy::finite_difference);
      REQUIRE(a == b);
      if (p < 300) CHECK(members(a) == oracle::naive_image_mod_m(f, p));
    }
  }
}

TEST_CASE("n_k_prime examples") {
  const ImageMask sq = compute_image(P("x^2"), 7);
  const std::int64_t one[] = {1}, zero[] = {0}, one_two[] = {1, 2};
  CHECK(n_k_prime(sq, one) == 2);
  CHECK(n_k_prime(sq, zero) == 4);
  CHECK(n_k_prime(sq, one_two) == 1);
}

TEST_CASE("correlation kernel agrees with the oracle") {
  std::mt19937_64 rng(7);
  for (const auto& e : kCorpus) {
    const IntPoly f = P(e.text);
    for (std::uint64_t p : {2ULL, 3ULL, 61ULL, 64ULL + 3, 127ULL, 131ULL, 257ULL, 1021ULL}) {
      if (!is_prime(p)) continue;
      const ImageMask mask = compute_image(f, p);
      const CorrelationKernel kernel(mask);
      std::uniform_int_distribution<std::int64_t> off(-3 * static_cast<std::int64_t>(p), 3 * static_cast<std::int64_t>(p));
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::int64_t> h(1 + trial % 3);
        for (auto& v : h) v = off(rng);
        CAPTURE(e.text);
        CAPTURE(p);
        CHECK(kernel.count(h) == oracle::naive_nk_mod_m(f, p, h));
      }
    }
  }
}

TEST_CASE("counting identities: sum over h, reflection symmetry") {
  for (const auto& e : kCorpus) {
    const IntPoly f = P(e.text);
    for (std::uint64_t p : {5, 13, 67, 499}) {
      const ImageMask mask = compute_image(f, p);
      const CorrelationKernel kernel(mask);
      const auto profile = kernel.pair_profile();
      std::uint64_t sum = 0;
      for (std::uint64_t h = 0; h < p; ++h) {
        sum += profile[h];
        CHECK(profile[h] == profile[(p - h) % p]);
      }
      CHECK(sum == mask.count() * mask.count());
    }
  }
}

TEST_CASE("epsilon_k") {
  const IntPoly sq = P("x^2");
  const std::int64_t one[] = {1}, zero[] = {0};
  CHECK(epsilon_k(sq, 7, one) == mpq_class(-1, 8));
  CHECK(epsilon_k(sq, 7, zero) == mpq_class(3, 4));

  // Zero average over a full set of residues.
  for (const auto& e : kCorpus) {
    const ImageMask mask = compute_image(P(e.text), 31);
    mpq_class total2 = 0, total3 = 0;
    for (std::int64_t h = 0; h < 31; ++h) {
      const std::int64_t off[] = {h};
      total2 += epsilon_k(mask, off);
      for (std::int64_t g = 0; g < 31; ++g) {
        const std::int64_t off3[] = {h, g};
        total3 += epsilon_k(mask, off3);
      }
    }
    CHECK(total2 == 0);
    CHECK(total3 == 0);
  }

  // epsilon_mass = sum |epsilon_2|
  const ImageMask mask = compute_image(sq, 7);
  mpq_class direct = 0;
  for (std::int64_t h = 0; h < 7; ++h) {
    const std::int64_t off[] = {h};
    direct += abs(epsilon_k(mask, off));
  }
  CHECK(epsilon_mass(mask) == direct);
  CHECK(direct == mpq_class(3, 2));
}

TEST_CASE("predicted_nk") {
  CHECK(predicted_nk(7, mpq_class(7, 4), 2) == mpq_class(16, 7));
  CHECK(predicted_nk(7, 1, 3) == 7);
  const mpq_class s(13, 5);
  CHECK(mpq_class(2, 3) * predicted_nk(13, s, 2) == mpq_class(50, 39));
}

TEST_CASE("Wan bound and prime stats") {
  // p - (p-1)/deg: 7 - 6/3 = 5
  CHECK(satisfies_wan_bound(5, 7, 3));
  CHECK_FALSE(satisfies_wan_bound(6, 7, 3));
  // 7 - 6/4 = 5.5
  CHECK(satisfies_wan_bound(5, 7, 4));
  CHECK_FALSE(satisfies_wan_bound(6, 7, 4));

  const PrimeStats cube7 = prime_stats(compute_image(P("x^3"), 7), 3);
  CHECK(cube7.omega_size == 3);
  CHECK_FALSE(cube7.is_permutation);
  CHECK(cube7.wan_ok);
  const PrimeStats cube5 = prime_stats(compute_image(P("x^3"), 5), 3);
  CHECK(cube5.is_permutation);
  CHECK(cube5.wan_ok);
}

TEST_CASE("anomaly_scan") {
  CHECK(anomaly_scan(P("x^2"), 101, 5).flagged.empty());
  CHECK(anomaly_scan(P("x"), 97, 5).flagged.empty());
  CHECK(anomaly_scan(P("x"), 97, 0).flagged.empty());
  CHECK_THROWS_AS(anomaly_scan(P("x^2"), 3, 5), InvalidInput);

  // At p = 13 the +-1 deflation is buried in the sqrt(p) noise.
  const AnomalyScan small = anomaly_scan(P("x^4-2x^2"), 13, 5);
  CHECK(small.flagged.empty());
  CHECK(small.rtilde.elements == std::vector<std::int64_t>{0, 1, 12});

  // 100003 = 3 mod 4: N_2(+-1) is inflated by 4/3 and clears c = 5.
  const IntPoly quartic = P("x^4-2x^2");
  const AnomalyScan big = anomaly_scan(quartic, 100003, 5);
  std::vector<std::uint64_t> hs;
  for (const auto& a : big.flagged) {
    hs.push_back(a.h);
    CHECK(a.in_rtilde);
  }
  CHECK(hs == std::vector<std::uint64_t>{1, 100002});
  const std::int64_t one[] = {1};
  CHECK(big.flagged.front().n2 == oracle::naive_nk_mod_m(quartic, 100003, one));
  CHECK(big.flagged.front().deviation_over_sqrt_p > 5);
}

TEST_CASE("measure_c0") {
  const std::uint64_t sample[] = {101, 103};
  const C0Measurement m = measure_c0(P("x^2"), sample);
  CHECK(m.value < 1);
  CHECK(m.primes_used.size() == 2);

  // Brute force: max_{p, h != 0} N_2(h, p) / |Omega_p|
  mpq_class best = 0;
  for (std::uint64_t p : sample) {
    const auto image = oracle::naive_image_mod_m(P("x^2"), p);
    for (std::int64_t h = 1; h < static_cast<std::int64_t>(p); ++h) {
      const std::int64_t off[] = {h};
      mpq_class v(oracle::naive_nk_mod_m(P("x^2"), p, off), image.size());
      v.canonicalize();
      best = std::max(best, v);
    }
  }
  CHECK(m.value == best);

  const std::uint64_t all_perm[] = {101, 103};
  CHECK_THROWS_AS(measure_c0(P("x"), all_perm), InvalidInput);

  std::vector<std::uint64_t> three_mod_four;
  for (auto p : primes_in_range(1000, 1400)) {
    if (p % 4 == 3) three_mod_four.push_back(p);
  }
  const C0Measurement q = measure_c0(P("x^4-2x^2"), three_mod_four, 3);
  CHECK(q.value < 1);
  CHECK(q.value == measure_c0(P("x^4-2x^2"), three_mod_four, 1).value);

  // x^3 permutes F_p for p = 2 mod 3.
  const std::uint64_t mixed[] = {5, 7, 11, 13};
  const C0Measurement c = measure_c0(P("x^3"), mixed);
  CHECK(c.permutation_primes_skipped == std::vector<std::uint64_t>{5, 11});
}
