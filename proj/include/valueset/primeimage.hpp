#pragma once

// Images of f modulo a single prime and the counting statistics built on
// them: N_k(h, p), epsilon_k(h, p), the Wan bound and anomaly scans.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "valueset/bitarray.hpp"
#include "valueset/polyarith.hpp"

namespace valueset {

inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

// Omega_p as a bit array of length p; bit t set iff f(x) = t has a solution.
class ImageMask {
 public:
  ImageMask(std::uint64_t p, BitArray bits);

  std::uint64_t prime() const { return p_; }
  const BitArray& bits() const { return bits_; }
  std::uint64_t count() const { return count_; }
  bool contains(std::uint64_t t) const { return bits_.test(t % p_); }

  friend bool operator==(const ImageMask&, const ImageMask&) = default;

 private:
  std::uint64_t p_;
  BitArray bits_;
  std::uint64_t count_;
};

enum class ImageStrategy {
  horner,            // evaluate f at every residue
  finite_difference  // deg f running forward differences, additions only
};

// Throws InvalidInput unless p is a prime below 2^31.
ImageMask compute_image(const IntPoly& f, std::uint64_t p,
                        ImageStrategy strategy = ImageStrategy::finite_difference);

// Answers repeated N_k queries against one mask. Keeps the mask doubled
// (bit t and bit t + p both hold Omega_p membership of t) so that a cyclic
// shift is a plain unaligned word read.
class CorrelationKernel {
 public:
  explicit CorrelationKernel(const ImageMask& mask);

  std::uint64_t prime() const { return p_; }
  std::uint64_t image_size() const { return count_; }
  // N_k(h, p); offsets are reduced mod p.
  std::uint64_t count(std::span<const std::int64_t> offsets) const;
  std::uint64_t count_pair(std::uint64_t h) const;
  // N_2(h, p) for every h in [0, p).
  std::vector<std::uint64_t> pair_profile() const;

 private:
  std::uint64_t shifted_word(std::size_t word, std::uint64_t shift) const;

  std::uint64_t p_;
  std::uint64_t count_;
  std::vector<std::uint64_t> base_;     // mask words, tail bits zero
  std::vector<std::uint64_t> doubled_;  // 2p bits plus one spare word
};

std::uint64_t n_k_prime(const ImageMask& mask, std::span<const std::int64_t> offsets);

struct PrimeStats {
  std::uint64_t p = 0;
  std::uint64_t omega_size = 0;
  mpq_class s_p;  // p / |Omega_p|
  bool is_permutation = false;
  bool wan_ok = false;
};

PrimeStats prime_stats(const ImageMask& mask, int degree);

// |Omega_p| <= p - (p - 1)/deg, compared exactly.
bool satisfies_wan_bound(std::uint64_t omega_size, std::uint64_t p, int degree);

// s_p^(k-1) N_k(h, p) / |Omega_p| - 1
mpq_class epsilon_k(const ImageMask& mask, std::span<const std::int64_t> offsets);
mpq_class epsilon_k(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets);

// p / s_p^k
mpq_class predicted_nk(std::uint64_t p, const mpq_class& s_p, int k);

// Sum over h in [0, p) of |epsilon_2(h, p)|, exact.
mpq_class epsilon_mass(const ImageMask& mask);

struct Anomaly {
  std::uint64_t h = 0;
  std::uint64_t n2 = 0;
  double deviation_over_sqrt_p = 0;  // (N_2 - p/s_p^2) / sqrt(p)
  bool in_rtilde = false;
};

struct AnomalyScan {
  std::uint64_t p = 0;
  double threshold = 0;
  mpq_class predicted;   // p / s_p^2
  ObstructionSet rtilde;  // approximate when the resultant route was unavailable
  std::vector<Anomaly> flagged;
};

// Every h in [1, p) with |N_2(h, p) - p/s_p^2| > c sqrt(p), compared exactly.
// Throws InvalidInput for p < 5.
AnomalyScan anomaly_scan(const IntPoly& f, std::uint64_t p, double threshold);

struct C0Measurement {
  mpq_class value;  // max N_2(h, p) s_p / p
  std::uint64_t argmax_p = 0;
  std::uint64_t argmax_h = 0;
  std::vector<std::uint64_t> primes_used;
  std::vector<std::uint64_t> permutation_primes_skipped;
};

// Empirical lower bound on C_0 (see prop1_hypothesis) for k = 2. With k = 2 the
// disjointness requirement reduces to h != 0 mod p, so every nonzero h is
// admitted. Throws InvalidInput if no non-permutation prime remains.
C0Measurement measure_c0(const IntPoly& f, std::span<const std::uint64_t> primes, unsigned workers = 1);

}  // namespace valueset
