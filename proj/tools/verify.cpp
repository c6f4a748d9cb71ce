#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "valueset/calibration.hpp"
#include "valueset/corpus.hpp"
#include "valueset/errors.hpp"
#include "valueset/numeric.hpp"
#include "valueset/oracle.hpp"
#include "valueset/primes.hpp"
#include "valueset/stats.hpp"

namespace valueset::cli {

namespace {

namespace cal = calibration;

struct Check {
  std::string name;
  bool pass = false;
  Json measured;
  std::string detail;
};

// Portable across standard libraries, unlike std::uniform_int_distribution.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % n;
  }
  // `count` distinct entries of `pool`, in ascending order.
  std::vector<std::uint64_t> pick(std::vector<std::uint64_t> pool, std::size_t count) {
    count = std::min(count, pool.size());
    for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + below(pool.size() - i)]);
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<IntPoly> polys_or(const RunConfig& config, std::vector<std::string_view> fallback) {
  if (config.poly) return {IntPoly::parse(*config.poly)};
  std::vector<IntPoly> out;
  for (auto t : fallback) out.push_back(IntPoly::parse(t));
  return out;
}

std::vector<IntPoly> corpus_or(const RunConfig& config) {
  std::vector<std::string_view> all;
  for (const auto& e : kCorpus) all.push_back(e.text);
  return polys_or(config, all);
}

std::vector<std::uint64_t> primes_or(const RunConfig& config, std::uint64_t lo, std::uint64_t hi) {
  if (!config.primes.empty()) {
    for (auto p : config.primes) {
      if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    }
    return config.primes;
  }
  return primes_in_range(lo, hi);
}

// |x - target| <= c / sqrt(p), exactly: (x - target)^2 p <= c^2
bool within_scaled(const mpq_class& x, const mpq_class& target, double c, std::uint64_t p) {
  const mpq_class d = x - target;
  const mpq_class c_exact(c);
  return d * d * mpq_class(p) <= c_exact * c_exact;
}

std::vector<Check> suite_identities(const RunConfig& config) {
  std::vector<Check> checks;
  for (const IntPoly& f : corpus_or(config)) {
    const auto primes = primes_or(config, 2, 300);
    std::string failure;
    for (std::uint64_t p : primes) {
      const ImageMask mask = compute_image(f, p);
      const CorrelationKernel kernel(mask);
      const mpz_class omega(static_cast<unsigned long>(mask.count()));
      mpz_class sum2 = 0, sum3 = 0;
      for (auto n : kernel.pair_profile()) sum2 += static_cast<unsigned long>(n);
      for (std::uint64_t h = 0; h < p; ++h) {
        for (std::uint64_t g = 0; g < p; ++g) {
          const std::int64_t off[] = {static_cast<std::int64_t>(h), static_cast<std::int64_t>(g)};
          sum3 += static_cast<unsigned long>(kernel.count(off));
        }
      }
      if (sum2 != omega * omega || sum3 != omega * omega * omega) {
        failure = "p = " + std::to_string(p) + ": sum N_2 = " + sum2.get_str() + ", sum N_3 = " + sum3.get_str() +
                  ", |Omega_p| = " + omega.get_str();
        break;
      }
    }
    checks.push_back({"sum_h N_2 = |Omega|^2, sum_h N_3 = |Omega|^3 for " + f.to_string(), failure.empty(),
                      {{"poly", f.to_string()}, {"primes", primes.size()}},
                      failure.empty() ? std::to_string(primes.size()) + " primes" : failure});
  }
  return checks;
}

std::vector<Check> suite_wan(const RunConfig& config) {
  std::vector<Check> checks;
  for (const IntPoly& f : corpus_or(config)) {
    if (f.degree() < 1) continue;
    std::uint64_t checked = 0, violations = 0, first_bad = 0;
    for (std::uint64_t p : primes_or(config, 2, 10000)) {
      const PrimeStats s = prime_stats(compute_image(f, p), f.degree());
      if (s.is_permutation) continue;
      ++checked;
      if (!s.wan_ok) {
        if (violations++ == 0) first_bad = p;
      }
    }
    checks.push_back({"Wan bound for " + f.to_string(), violations == 0,
                      {{"poly", f.to_string()}, {"non_permutation_primes", checked}, {"violations", violations}},
                      std::to_string(checked) + " non-permutation primes, " + std::to_string(violations) +
                          " violations" + (violations ? " (first p = " + std::to_string(first_bad) + ")" : "")});
  }
  return checks;
}

std::vector<Check> suite_multiplicativity(const RunConfig& config) {
  std::vector<Check> checks;
  const SquareFreeModulus m = optional_modulus(config).value_or(SquareFreeModulus::from_integer(105));
  if (m.q() > oracle::kMaxModulus) throw InvalidInput("multiplicativity needs q <= 10^6 for the oracle");
  const std::uint64_t q = m.q().get_ui();
  for (const IntPoly& f : polys_or(config, {"x^2", "x^3+x", "x^4-2x^2"})) {
    const CompositeImage image(f, m, resolved_workers(config));
    Sampler rng(config.seed);
    std::uint64_t compared = 0, mismatches = 0;
    std::string first;
    const auto compare = [&](std::span<const std::int64_t> off) {
      ++compared;
      const mpz_class fast = image.n_k(off);
      const std::uint64_t slow = oracle::naive_nk_mod_m(f, q, off);
      if (fast != static_cast<unsigned long>(slow) && mismatches++ == 0) {
        std::ostringstream s;
        s << "h = (";
        for (std::size_t i = 0; i < off.size(); ++i) s << (i ? "," : "") << off[i];
        s << "): " << fast.get_str() << " vs " << slow;
        first = s.str();
      }
    };
    for (std::uint64_t h = 0; h < q; ++h) {
      const std::int64_t off[] = {static_cast<std::int64_t>(h)};
      compare(off);
    }
    for (int i = 0; i < 500; ++i) {
      const std::int64_t off[] = {static_cast<std::int64_t>(rng.below(q)), static_cast<std::int64_t>(rng.below(q))};
      compare(off);
    }
    checks.push_back({"n_k_composite = naive count mod " + m.q().get_str() + " for " + f.to_string(),
                      mismatches == 0,
                      {{"poly", f.to_string()}, {"q", q}, {"compared", compared}, {"mismatches", mismatches}},
                      mismatches ? first : std::to_string(compared) + " offset tuples (k = 2 all, k = 3 sampled)"});
  }
  return checks;
}

std::vector<Check> suite_davenport(const RunConfig& config) {
  std::vector<Check> checks;
  const std::vector<std::uint64_t> primes = config.primes.empty() ? std::vector<std::uint64_t>{100003} : config.primes;
  for (const IntPoly& f : polys_or(config, {"x^2"})) {
    for (std::uint64_t p : primes) {
      const SpacingSeries series = spacings(f, SquareFreeModulus::from_primes({p}));
      Json rows = Json::array();
      bool pass = true;
      double worst = 0;
      for (std::uint64_t h = 1; h <= 6; ++h) {
        const double freq = to_double(gap_frequency(series, h));
        const double err = std::abs(freq - std::ldexp(1.0, -static_cast<int>(h)));
        worst = std::max(worst, err);
        pass = pass && err <= cal::kDavenportTolerance;
        rows.push_back({{"h", h}, {"frequency", number(freq)}, {"error", number(err)}});
      }
      checks.push_back({"gap frequencies of " + f.to_string() + " mod " + std::to_string(p) + " near 2^-h", pass,
                        {{"p", p}, {"rows", rows}, {"tolerance", number(cal::kDavenportTolerance)}},
                        "max |freq - 2^-h| = " + std::to_string(worst)});
    }
  }
  return checks;
}

std::vector<Check> suite_anomaly(const RunConfig& config) {
  std::vector<Check> checks;
  const IntPoly f = config.poly ? IntPoly::parse(*config.poly) : IntPoly::parse("x^4-2x^2");
  const bool quartic = f == IntPoly::parse("x^4-2x^2");
  const double c = config.threshold.value_or(cal::kAnomalyThreshold);
  Sampler rng(config.seed);
  std::vector<std::uint64_t> primes = config.primes;
  if (primes.empty()) {
    std::vector<std::uint64_t> one, three;
    for (auto p : primes_in_range(10000, 100000)) (p % 4 == 1 ? one : three).push_back(p);
    primes = rng.pick(one, 20);
    const auto more = rng.pick(three, 20);
    primes.insert(primes.end(), more.begin(), more.end());
  }
  for (std::uint64_t p : primes) {
    if (!is_prime(p) || p < 5) throw InvalidInput(std::to_string(p) + " is not a prime >= 5");
    const ImageMask mask = compute_image(f, p);
    const CorrelationKernel kernel(mask);
    const mpq_class s = prime_stats(mask, f.degree()).s_p;
    const auto ratio = [&](std::uint64_t h) -> mpq_class {
      return mpq_class(mpz_class(static_cast<unsigned long>(kernel.count_pair(h)))) * s * s / mpq_class(p);
    };
    const AnomalyScan scan = anomaly_scan(f, p, c);
    const ObstructionSet& rtilde = scan.rtilde;

    Json m = {{"p", p}, {"class_mod_4", p % 4}};
    bool pass = true;
    std::ostringstream detail;
    if (quartic) {
      const mpq_class target = p % 4 == 1 ? mpq_class(2, 3) : mpq_class(4, 3);
      const mpq_class plus = ratio(1), minus = ratio(p - 1);
      const bool ok = within_scaled(plus, target, cal::kAnomalyConstant, p) &&
                      within_scaled(minus, target, cal::kAnomalyConstant, p);
      pass = pass && ok;
      m["target"] = exact(target);
      m["ratio_h1"] = number(to_double(plus));
      m["ratio_hm1"] = number(to_double(minus));
      detail << "p = " << p % 4 << " mod 4, N_2(1) s^2/p = " << to_double(plus)
             << " (target " << rational_string(target) << ")";
    }
    // Generic offsets: outside R~_p.
    double worst = 0;
    int sampled = 0;
    while (sampled < 50) {
      const std::uint64_t h = 1 + rng.below(p - 1);
      if (rtilde.contains(static_cast<std::int64_t>(h))) continue;
      ++sampled;
      const mpq_class r = ratio(h);
      worst = std::max(worst, std::abs(to_double(r) - 1.0) * std::sqrt(static_cast<double>(p)));
      pass = pass && within_scaled(r, 1, cal::kAnomalyConstant, p);
    }
    bool localized = true;
    for (const auto& a : scan.flagged) localized = localized && a.in_rtilde;
    std::size_t nonzero = 0;
    for (auto e : rtilde.elements) nonzero += e != 0;
    pass = pass && localized;
    m["generic_max_constant"] = number(worst);
    m["flagged"] = scan.flagged.size();
    m["flagged_in_rtilde"] = localized;
    m["rtilde_nonzero"] = nonzero;
    detail << (quartic ? ", " : "") << "generic max |ratio - 1| sqrt(p) = " << worst << ", " << scan.flagged.size()
           << " flagged at c = " << c << (localized ? ", all in R~_p" : ", some outside R~_p");
    checks.push_back({"anomaly constants for " + f.to_string() + " mod " + std::to_string(p), pass, m, detail.str()});
  }
  return checks;
}

std::vector<Check> suite_poisson(const RunConfig& config) {
  const IntPoly f = config.poly ? IntPoly::parse(*config.poly) : IntPoly::parse("x^2");
  const SquareFreeModulus m =
      optional_modulus(config).value_or(SquareFreeModulus::from_primes({3, 5, 7, 11, 13, 17, 19, 23}));
  const SquareFreeModulus q1 = reduce_to_q1(f, m);
  if (q1.is_unit()) throw Degenerate("f permutes Z/pZ for every p | q");
  const CompositeImage image(f, q1, resolved_workers(config));
  const SpacingSeries series =
      spacings_from_image(enumerate_image(image, config.cap_bits.value_or(kDefaultCapBits)));
  const auto values = series.normalized_values();
  const double ks = ks_exponential(values).statistic;
  const double corr = adjacent_correlation(values);
  const std::string where = f.to_string() + " mod " + q1.q().get_str();
  return {
      {"KS distance to 1 - e^-t for " + where, ks <= cal::kKsTolerance,
       {{"ks", number(ks)}, {"tolerance", number(cal::kKsTolerance)}, {"gaps", series.size()}},
       "KS = " + std::to_string(ks)},
      {"adjacent-gap correlation for " + where, std::abs(corr) <= cal::kAdjacentCorrelationTolerance,
       {{"correlation", number(corr)}, {"tolerance", number(cal::kAdjacentCorrelationTolerance)}},
       "correlation = " + std::to_string(corr)},
  };
}

std::vector<Check> suite_correlation(const RunConfig& config) {
  const IntPoly f = config.poly ? IntPoly::parse(*config.poly) : IntPoly::parse("x^2");
  const auto given = optional_modulus(config);
  const SquareFreeModulus m2 = given.value_or(SquareFreeModulus::from_primes({3, 5, 7, 11, 13, 17, 19, 23}));
  const SquareFreeModulus m3 = given.value_or(SquareFreeModulus::from_primes({3, 5, 7, 11, 13}));
  const std::uint64_t cap = config.cap_bits.value_or(kDefaultLatticeCap);
  const unsigned workers = resolved_workers(config);

  const auto measure = [&](const SquareFreeModulus& m, const CorrelationWindow& w) {
    const SquareFreeModulus q1 = reduce_to_q1(f, m);
    if (q1.is_unit()) throw Degenerate("f permutes Z/pZ for every p | q");
    return r_k_correlation(CompositeImage(f, q1, workers), w, cap, workers);
  };
  const CorrelationResult r2 = measure(m2, CorrelationWindow({{0, 4}}));
  const CorrelationResult r3 = measure(m3, CorrelationWindow({{0, 1}, {0, 1}}));
  const double d2 = std::abs(to_double(r2.deviation)), d3 = std::abs(to_double(r3.deviation));
  return {
      {"R_2((0,4]) near 4 mod " + m2.q().get_str(), d2 <= cal::kR2Tolerance,
       {{"R_2", exact(r2.value)}, {"value", number(to_double(r2.value))}, {"tolerance", number(cal::kR2Tolerance)}},
       "R_2 = " + std::to_string(to_double(r2.value))},
      {"R_3((0,1]^2) near 1 mod " + m3.q().get_str(), d3 <= cal::kR3Tolerance,
       {{"R_3", exact(r3.value)}, {"value", number(to_double(r3.value))}, {"tolerance", number(cal::kR3Tolerance)}},
       "R_3 = " + std::to_string(to_double(r3.value))},
  };
}

std::vector<Check> suite_c0(const RunConfig& config) {
  std::vector<Check> checks;
  const auto primes = primes_or(config, 1000, 3000);
  for (const IntPoly& f : corpus_or(config)) {
    if (f.degree() < 2) continue;
    const C0Measurement c0 = measure_c0(f, primes, resolved_workers(config));
    checks.push_back({"max N_2(h, p) s_p / p < 1 for " + f.to_string(), c0.value < 1,
                      {{"poly", f.to_string()},
                       {"c0", exact(c0.value)},
                       {"value", number(to_double(c0.value))},
                       {"argmax_p", c0.argmax_p},
                       {"argmax_h", c0.argmax_h},
                       {"primes_used", c0.primes_used.size()},
                       {"permutation_primes_skipped", c0.permutation_primes_skipped.size()}},
                      "C_0 >= " + std::to_string(to_double(c0.value)) + " at p = " + std::to_string(c0.argmax_p)});
  }
  return checks;
}

}  // namespace

Outcome cmd_verify(const RunConfig& config) {
  Outcome o = start_report(config);
  std::vector<Check> checks;
  const std::string& s = config.suite;
  if (s == "identities") checks = suite_identities(config);
  else if (s == "wan") checks = suite_wan(config);
  else if (s == "multiplicativity") checks = suite_multiplicativity(config);
  else if (s == "davenport") checks = suite_davenport(config);
  else if (s == "anomaly") checks = suite_anomaly(config);
  else if (s == "poisson") checks = suite_poisson(config);
  else if (s == "correlation") checks = suite_correlation(config);
  else checks = suite_c0(config);

  bool all = true;
  Json rows = Json::array();
  std::ostringstream summary;
  for (const auto& c : checks) {
    all = all && c.pass;
    rows.push_back({{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}});
    summary << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  o.report["suite"] = s;
  o.report["pass"] = all;
  o.report["checks"] = rows;
  o.summary = summary.str();
  if (!o.summary.empty()) o.summary.pop_back();
  o.exit_code = all ? kOk : kVerifyFailed;
  return o;
}

}  // namespace valueset::cli
