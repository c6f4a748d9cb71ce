#include "valueset/primeimage.hpp"

#include <algorithm>
#include <cmath>

#include "valueset/errors.hpp"
#include "valueset/modarith.hpp"
#include "valueset/parallel.hpp"
#include "valueset/primes.hpp"

namespace valueset {

namespace {

void require_prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxPrime) {
    throw InvalidInput("prime " + std::to_string(p) + " outside the supported range [2, 2^31)");
  }
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
}

std::vector<std::uint64_t> reduced_coeffs(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  for (const auto& v : f.coeffs()) c.push_back(reduce_mod(v, p));
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::uint64_t horner(const std::vector<std::uint64_t>& c, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = (r * x + *it) % p;
  return r;
}

BitArray image_horner(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  BitArray bits(p);
  for (std::uint64_t x = 0; x < p; ++x) bits.set(horner(c, x, p));
  return bits;
}

BitArray image_differences(const std::vector<std::uint64_t>& c, std::uint64_t p) {
  BitArray bits(p);
  const std::size_t d = c.empty() ? 0 : c.size() - 1;
  // diff[j] = (Delta^j f)(x), starting at x = 0.
  std::vector<std::uint64_t> diff(d + 1);
  for (std::size_t j = 0; j <= d; ++j) diff[j] = horner(c, j, p);
  for (std::size_t j = 1; j <= d; ++j) {
    for (std::size_t i = d; i >= j; --i) diff[i] = sub_mod(diff[i], diff[i - 1], p);
  }
  for (std::uint64_t x = 0; x < p; ++x) {
    bits.set(diff[0]);
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t s = diff[i] + diff[i + 1];
      diff[i] = s >= p ? s - p : s;
    }
  }
  return bits;
}

}  // namespace

ImageMask::ImageMask(std::uint64_t p, BitArray bits) : p_(p), bits_(std::move(bits)), count_(bits_.count()) {
  if (bits_.size() != p_) throw InvalidInput("image mask length does not match the prime");
}

ImageMask compute_image(const IntPoly& f, std::uint64_t p, ImageStrategy strategy) {
  require_prime(p);
  const auto c = reduced_coeffs(f, p);
  return ImageMask(p, strategy == ImageStrategy::horner ? image_horner(c, p) : image_differences(c, p));
}

// ------------------------------------------------------- CorrelationKernel

CorrelationKernel::CorrelationKernel(const ImageMask& mask)
    : p_(mask.prime()), count_(mask.count()), base_(mask.bits().words()) {
  doubled_.assign((2 * p_ + 63) / 64 + 1, 0);
  std::copy(base_.begin(), base_.end(), doubled_.begin());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const std::uint64_t w = base_[i];
    if (w == 0) continue;
    const std::uint64_t off = p_ + 64 * i;
    const unsigned b = off & 63;
    doubled_[off >> 6] |= w << b;
    if (b != 0) doubled_[(off >> 6) + 1] |= w >> (64 - b);
  }
}

std::uint64_t CorrelationKernel::shifted_word(std::size_t word, std::uint64_t shift) const {
  const std::uint64_t pos = 64 * word + shift;
  const std::size_t wi = pos >> 6;
  const unsigned b = pos & 63;
  if (b == 0) return doubled_[wi];
  return (doubled_[wi] >> b) | (doubled_[wi + 1] << (64 - b));
}

std::uint64_t CorrelationKernel::count(std::span<const std::int64_t> offsets) const {
  std::vector<std::uint64_t> shifts;
  shifts.reserve(offsets.size());
  for (auto h : offsets) shifts.push_back(reduce_mod(h, p_));
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    std::uint64_t w = base_[i];
    for (auto s : shifts) {
      if (w == 0) break;
      w &= shifted_word(i, s);
    }
    n += static_cast<std::uint64_t>(std::popcount(w));
  }
  return n;
}

std::uint64_t CorrelationKernel::count_pair(std::uint64_t h) const {
  h %= p_;
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    n += static_cast<std::uint64_t>(std::popcount(base_[i] & shifted_word(i, h)));
  }
  return n;
}

std::vector<std::uint64_t> CorrelationKernel::pair_profile() const {
  std::vector<std::uint64_t> out(p_);
  // N_2(h) = N_2(p - h)
  for (std::uint64_t h = 0; h <= p_ / 2; ++h) {
    out[h] = count_pair(h);
    if (h != 0) out[p_ - h] = out[h];
  }
  return out;
}

std::uint64_t n_k_prime(const ImageMask& mask, std::span<const std::int64_t> offsets) {
  return CorrelationKernel(mask).count(offsets);
}

// ----------------------------------------------------------------- stats

bool satisfies_wan_bound(std::uint64_t omega_size, std::uint64_t p, int degree) {
  if (degree < 1) return false;
  const auto d = static_cast<u128>(degree);
  return static_cast<u128>(omega_size) * d + (p - 1) <= static_cast<u128>(p) * d;
}

PrimeStats prime_stats(const ImageMask& mask, int degree) {
  PrimeStats s;
  s.p = mask.prime();
  s.omega_size = mask.count();
  s.s_p = mpq_class(mpz_class(s.p), mpz_class(s.omega_size));
  s.s_p.canonicalize();
  s.is_permutation = s.omega_size == s.p;
  s.wan_ok = s.is_permutation || satisfies_wan_bound(s.omega_size, s.p, degree);
  return s;
}

mpq_class epsilon_k(const ImageMask& mask, std::span<const std::int64_t> offsets) {
  const std::uint64_t n = n_k_prime(mask, offsets);
  const unsigned long k = offsets.size() + 1;
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), mask.prime(), k - 1);
  num *= mpz_class(n);
  mpz_ui_pow_ui(den.get_mpz_t(), mask.count(), k);
  mpq_class r(num, den);
  r.canonicalize();
  return r - 1;
}

mpq_class epsilon_k(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets) {
  return epsilon_k(compute_image(f, p), offsets);
}

mpq_class predicted_nk(std::uint64_t p, const mpq_class& s_p, int k) {
  mpq_class power = 1;
  for (int i = 0; i < k; ++i) power *= s_p;
  mpq_class r = mpq_class(mpz_class(p)) / power;
  r.canonicalize();
  return r;
}

mpq_class epsilon_mass(const ImageMask& mask) {
  // |epsilon_2(h)| = |p N_2(h) - |Omega|^2| / |Omega|^2
  const auto profile = CorrelationKernel(mask).pair_profile();
  const mpz_class omega2 = mpz_class(mask.count()) * mpz_class(mask.count());
  mpz_class total = 0;
  const mpz_class p = mask.prime();
  for (auto n : profile) total += abs(p * mpz_class(n) - omega2);
  mpq_class r(total, omega2);
  r.canonicalize();
  return r;
}

AnomalyScan anomaly_scan(const IntPoly& f, std::uint64_t p, double threshold) {
  if (p < 5) throw InvalidInput("anomaly_scan needs p >= 5");
  if (!(threshold >= 0) || !std::isfinite(threshold)) throw InvalidInput("threshold must be finite and >= 0");
  const ImageMask mask = compute_image(f, p);
  const auto profile = CorrelationKernel(mask).pair_profile();

  AnomalyScan scan;
  scan.p = p;
  scan.threshold = threshold;
  const mpz_class omega2 = mpz_class(mask.count()) * mpz_class(mask.count());
  scan.predicted = mpq_class(omega2, mpz_class(p));
  scan.predicted.canonicalize();
  try {
    scan.rtilde = rtilde_mod_p(f, p);
  } catch (const WildCase&) {
    scan.rtilde = rtilde_mod_p_direct(f, p);
  } catch (const Degenerate&) {
    scan.rtilde = ObstructionSet{ObstructionSet::Kind::mod_p, p, {}, false};
  }

  // |N - Omega^2/p| > c sqrt(p)  <=>  (p N - Omega^2)^2 > c^2 p^3
  const mpq_class c(threshold);
  const mpz_class pz = p;
  const mpq_class limit = c * c * mpq_class(pz * pz * pz);
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  for (std::uint64_t h = 1; h < p; ++h) {
    const mpz_class dev = pz * mpz_class(profile[h]) - omega2;
    if (mpq_class(dev * dev) <= limit) continue;
    Anomaly a;
    a.h = h;
    a.n2 = profile[h];
    a.deviation_over_sqrt_p = mpq_class(dev, pz).get_d() / sqrt_p;
    a.in_rtilde = scan.rtilde.contains(static_cast<std::int64_t>(h));
    scan.flagged.push_back(a);
  }
  return scan;
}

C0Measurement measure_c0(const IntPoly& f, std::span<const std::uint64_t> primes, unsigned workers) {
  struct PerPrime {
    bool permutation = false;
    std::uint64_t best_n = 0, best_h = 0, omega = 0;
  };
  std::vector<PerPrime> results(primes.size());
  parallel_for(primes.size(), workers, [&](std::size_t i) {
    const ImageMask mask = compute_image(f, primes[i]);
    PerPrime& r = results[i];
    r.omega = mask.count();
    r.permutation = r.omega == primes[i];
    if (r.permutation) return;
    const auto profile = CorrelationKernel(mask).pair_profile();
    for (std::uint64_t h = 1; h < primes[i]; ++h) {
      if (profile[h] > r.best_n) {
        r.best_n = profile[h];
        r.best_h = h;
      }
    }
  });

  C0Measurement m;
  m.value = -1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const PerPrime& r = results[i];
    if (r.permutation) {
      m.permutation_primes_skipped.push_back(primes[i]);
      continue;
    }
    m.primes_used.push_back(primes[i]);
    // N_2 s_p / p = N_2 / |Omega_p|
    mpq_class v(mpz_class(r.best_n), mpz_class(r.omega));
    v.canonicalize();
    if (v > m.value) {
      m.value = v;
      m.argmax_p = primes[i];
      m.argmax_h = r.best_h;
    }
  }
  if (m.primes_used.empty()) throw InvalidInput("measure_c0: every sampled prime is a permutation prime");
  return m;
}

}  // namespace valueset
