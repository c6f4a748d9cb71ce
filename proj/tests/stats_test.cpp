#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "valueset/corpus.hpp"
#include "valueset/errors.hpp"
#include "valueset/oracle.hpp"
#include "valueset/stats.hpp"

using namespace valueset;

namespace {

IntPoly P(std::string_view s) { return IntPoly::parse(s); }

SquareFreeModulus Q(std::uint64_t q) { return SquareFreeModulus::from_integer(q); }

CorrelationWindow box(std::initializer_list<std::pair<mpq_class, mpq_class>> sides) {
  std::vector<Interval> iv;
  for (const auto& [a, b] : sides) iv.push_back({a, b});
  return CorrelationWindow(std::move(iv));
}

}  // namespace

TEST_CASE("spacings") {
  const SpacingSeries s = spacings(P("x^2"), Q(7));
  CHECK(s.raw_gaps() == std::vector<std::uint64_t>{1, 1, 2, 3});
  CHECK(s.normalized(0) == mpq_class(4, 7));
  CHECK(s.normalized(2) == mpq_class(8, 7));
  CHECK(s.normalized(3) == mpq_class(12, 7));
  mpq_class sum = 0;
  for (std::size_t i = 0; i < s.size(); ++i) sum += s.normalized(i);
  CHECK(sum == 4);

  CHECK_THROWS_AS(spacings(P("x"), Q(15)), Degenerate);
  CHECK_THROWS_AS(spacings(P("5"), Q(15)), Degenerate);

  const SpacingSeries s105 = spacings(P("x^2"), Q(105));
  CHECK(s105.size() == 24);
  CHECK(std::accumulate(s105.raw_gaps().begin(), s105.raw_gaps().end(), std::uint64_t{0}) == 105);
  CHECK_THROWS_AS(SpacingSeries(10, 2, {3, 3}), InvalidInput);
}

TEST_CASE("gap frequencies") {
  const SpacingSeries s = spacings(P("x^2"), Q(7));
  CHECK(gap_frequency(s, 1) == mpq_class(1, 2));
  CHECK(gap_frequency(s, 5) == 0);

  for (const auto& e : kCorpus) {
    const IntPoly f = P(e.text);
    if (f.degree() < 2) continue;
    const SpacingSeries series = spacings(f, Q(1155));
    mpq_class total = 0;
    const auto max_gap = *std::max_element(series.raw_gaps().begin(), series.raw_gaps().end());
    for (std::uint64_t h = 1; h <= max_gap; ++h) total += gap_frequency(series, h);
    CHECK(total == 1);
  }
}

TEST_CASE("KS distance to the exponential law") {
  const double one[] = {std::log(2.0)};
  CHECK(ks_exponential(one).statistic == doctest::Approx(0.5).epsilon(1e-15));
  // Exponential quantiles at (i - 1/2)/n for n = 2.
  const double two[] = {-std::log(0.75), -std::log(0.25)};
  CHECK(ks_exponential(two).statistic == doctest::Approx(0.25).epsilon(1e-15));
  CHECK_THROWS_AS(ks_exponential(std::span<const double>{}), InvalidInput);

  std::mt19937_64 rng(3);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> draws(20000);
  for (auto& d : draws) d = expo(rng);
  const double d0 = ks_exponential(draws).statistic;
  CHECK(d0 < 0.02);
  std::shuffle(draws.begin(), draws.end(), rng);
  CHECK(ks_exponential(draws).statistic == d0);
}

TEST_CASE("histograms and adjacent-gap correlation") {
  const double v[] = {0.0, 0.1, 0.12, 5.99, 6.0, 7.5, -1.0};
  const Histogram h = make_histogram(v);
  CHECK(h.counts.size() == 50);
  CHECK(h.edges.size() == 51);
  CHECK(h.edges.front() == 0.0);
  CHECK(h.edges.back() == 6.0);
  CHECK(h.counts[0] == 2);  // width 0.12: [0, 0.12)
  CHECK(h.counts[1] == 1);
  CHECK(h.counts[49] == 1);
  CHECK(h.overflow == 2);
  CHECK(h.underflow == 1);
  CHECK(h.total == 7);
  CHECK(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}) + h.overflow + h.underflow == h.total);
  CHECK(std::is_sorted(h.edges.begin(), h.edges.end()));

  const double alternating[] = {1, 3, 1, 3, 1, 3};
  CHECK(adjacent_correlation(alternating) == doctest::Approx(-1.0));
  const double flat[] = {2, 2, 2};
  CHECK(std::isnan(adjacent_correlation(flat)));
}

TEST_CASE("joint consecutive spacings") {
  const SpacingSeries s = spacings(P("x^2"), Q(7));
  const JointSpacings j = joint_consecutive(s, 2);
  REQUIRE(j.count == 4);
  const std::vector<std::pair<mpq_class, mpq_class>> expected = {
      {mpq_class(4, 7), mpq_class(4, 7)},
      {mpq_class(4, 7), mpq_class(8, 7)},
      {mpq_class(8, 7), mpq_class(12, 7)},
      {mpq_class(12, 7), mpq_class(4, 7)},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j.normalized(i, 0) == expected[i].first);
    CHECK(j.normalized(i, 1) == expected[i].second);
  }
  CHECK(j.marginals.size() == 2);
  CHECK(j.marginals[0].total == 4);

  const JointSpacings single = joint_consecutive(s, 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(single.tuple(i)[0] == s.raw_gaps()[i]);
  CHECK_THROWS_AS(joint_consecutive(s, 5), InvalidInput);
  CHECK_THROWS_AS(joint_consecutive(s, 0), InvalidInput);
}

TEST_CASE("correlation windows") {
  CHECK_THROWS_AS(box({{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(CorrelationWindow({}), InvalidInput);
  const CorrelationWindow w = box({{0, 1}, {mpq_class(-1, 2), 2}});
  CHECK(w.volume() == mpq_class(5, 2));
  const std::int64_t ok[] = {1, 2}, zero[] = {0, 2}, diag[] = {3, 3};
  CHECK_FALSE(w.excluded(ok));
  CHECK(w.excluded(zero));
  CHECK(w.excluded(diag));
}

TEST_CASE("R_k examples") {
  const CorrelationResult r = r_k_correlation(P("x^2"), Q(105), box({{0, 1}}));
  CHECK(r.value == mpq_class(7, 12));
  CHECK(r.volume == 1);
  CHECK(r.deviation == mpq_class(7, 12) - 1);
  CHECK(r.lattice_points == 4);
  CHECK(r.excluded_points == 1);

  // s_q = 35/8: [1/10, 1/5] scales to [0.4375, 0.875], no integers.
  const CorrelationResult empty = r_k_correlation(P("x^2"), Q(105), box({{mpq_class(1, 10), mpq_class(1, 5)}}));
  CHECK(empty.value == 0);
  CHECK(empty.lattice_points == 0);

  const CompositeImage big(P("x^2"), SquareFreeModulus::from_primes({3, 5, 7, 11, 13, 17, 19, 23}));
  CHECK_THROWS_AS(r_k_correlation(big, box({{0, 100000}}), 1000), ResourceCap);
}

TEST_CASE("R_2 equals the direct pair count over the enumerated image") {
  for (const auto& e : kCorpus) {
    const IntPoly f = P(e.text);
    for (std::uint64_t q : {105, 1155, 15015}) {
      const CompositeImage image(f, Q(q));
      const BitArray bits = enumerate_image(image);
      const mpq_class s = image.stats().s_q;
      for (int L : {1, 3}) {
        // pairs (t, t + h) with 1 <= h <= s L, t and t + h in Omega_q
        mpz_class limit;
        const mpq_class reach = s * L;
        mpz_fdiv_q(limit.get_mpz_t(), reach.get_num_mpz_t(), reach.get_den_mpz_t());
        std::uint64_t pairs = 0;
        bits.for_each_set([&](std::uint64_t t) {
          for (std::uint64_t h = 1; h <= limit.get_ui(); ++h) pairs += bits.test((t + h) % q);
        });
        const CorrelationResult r = r_k_correlation(image, box({{0, L}}));
        CAPTURE(e.text);
        CAPTURE(q);
        CHECK(r.value * mpq_class(bits.count()) == pairs);
      }
    }
  }
}

TEST_CASE("R_3 against the oracle and monotonicity") {
  const IntPoly f = P("x^3-3x");
  const auto modulus = Q(105);
  const CompositeImage image(f, modulus);
  const auto naive_image = oracle::naive_image_mod_m(f, 105);
  const mpq_class s = image.stats().s_q;

  const CorrelationWindow w = box({{mpq_class(-1, 2), 1}, {0, mpq_class(3, 2)}});
  const CorrelationResult r = r_k_correlation(image, w);
  mpz_class sum = 0;
  for (std::int64_t h1 = -200; h1 <= 200; ++h1) {
    for (std::int64_t h2 = -200; h2 <= 200; ++h2) {
      if (h1 == 0 || h2 == 0 || h1 == h2) continue;
      if (mpq_class(h1) < mpq_class(-1, 2) * s || mpq_class(h1) > s) continue;
      if (mpq_class(h2) < 0 || mpq_class(h2) > mpq_class(3, 2) * s) continue;
      const std::int64_t off[] = {h1, h2};
      sum += oracle::naive_nk_mod_m(f, 105, off);
    }
  }
  mpq_class expected(sum, naive_image.size());
  expected.canonicalize();
  CHECK(r.value == expected);

  const CorrelationWindow inner = box({{0, mpq_class(1, 2)}, {0, 1}});
  const CorrelationWindow outer = box({{mpq_class(-1, 2), 1}, {0, mpq_class(3, 2)}});
  CHECK(r_k_correlation(image, inner).value <= r_k_correlation(image, outer).value);
}

TEST_CASE("R_k does not depend on the worker count") {
  const CompositeImage image(P("x^2"), SquareFreeModulus::from_primes({3, 5, 7, 11, 13}));
  const CorrelationWindow w = box({{0, 1}, {0, 1}});
  CHECK(r_k_correlation(image, w, kDefaultLatticeCap, 1).value == r_k_correlation(image, w, kDefaultLatticeCap, 4).value);
}
