#pragma once

// Square-free moduli: CRT-multiplicative image sizes and N_k, reduction to
// the non-permutation part q1, and explicit enumeration of Omega_q.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "valueset/bitarray.hpp"
#include "valueset/polyarith.hpp"
#include "valueset/primeimage.hpp"

namespace valueset {

inline constexpr std::uint64_t kDefaultCapBits = std::uint64_t{1} << 31;

class SquareFreeModulus {
 public:
  // Factors q (trial division, then Pollard rho). Throws InvalidInput for
  // q <= 1 or q not square-free.
  static SquareFreeModulus from_integer(const mpz_class& q);
  // Throws InvalidInput for an empty list, a repeated entry or a non-prime.
  static SquareFreeModulus from_primes(std::vector<std::uint64_t> primes);
  // q = 1 with no prime factors; only produced by reductions.
  static SquareFreeModulus unit() { return SquareFreeModulus(); }

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const mpz_class& q() const { return q_; }
  std::size_t omega() const { return primes_.size(); }
  bool is_unit() const { return primes_.empty(); }

  friend bool operator==(const SquareFreeModulus& a, const SquareFreeModulus& b) {
    return a.primes_ == b.primes_;
  }

 private:
  SquareFreeModulus() = default;
  std::vector<std::uint64_t> primes_;
  mpz_class q_ = 1;
};

struct CompositeStats {
  SquareFreeModulus modulus = SquareFreeModulus::unit();
  mpz_class omega_q_size = 1;  // prod |Omega_p|
  mpq_class s_q = 1;           // prod s_p
  SquareFreeModulus q1_reduced = SquareFreeModulus::unit();
  std::vector<PrimeStats> per_prime;
};

// Per-prime images of f for one square-free modulus. Immutable once built;
// safe to share read-only between threads.
class CompositeImage {
 public:
  CompositeImage(const IntPoly& f, SquareFreeModulus modulus, unsigned workers = 1);

  const SquareFreeModulus& modulus() const { return modulus_; }
  const std::vector<ImageMask>& masks() const { return masks_; }
  const std::vector<CorrelationKernel>& kernels() const { return kernels_; }
  const CompositeStats& stats() const { return stats_; }

  // prod_p N_k(h mod p, p)
  mpz_class n_k(std::span<const std::int64_t> offsets) const;

 private:
  SquareFreeModulus modulus_;
  std::vector<ImageMask> masks_;
  std::vector<CorrelationKernel> kernels_;
  CompositeStats stats_;
};

mpz_class n_k_composite(const IntPoly& f, const SquareFreeModulus& modulus, std::span<const std::int64_t> offsets);

// Sub-modulus of the primes with |Omega_p| < p (unit() when f permutes every factor).
SquareFreeModulus reduce_to_q1(const IntPoly& f, const SquareFreeModulus& modulus);

// Omega_q as a bit array of length q, built from the CRT characterization
// (t in Omega_q iff t mod p in Omega_p for every p | q). Throws ResourceCap
// when q exceeds cap_bits.
BitArray enumerate_image(const CompositeImage& image, std::uint64_t cap_bits = kDefaultCapBits);
BitArray enumerate_image(const IntPoly& f, const SquareFreeModulus& modulus,
                         std::uint64_t cap_bits = kDefaultCapBits);

}  // namespace valueset
