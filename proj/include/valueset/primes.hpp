#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace valueset {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factors of n with multiplicity, ascending. Trial division up to
// 10^6, then Pollard rho on the remaining cofactor. Throws InvalidInput for
// n < 1 and for a cofactor above 2^64 that trial division could not split.
std::vector<std::uint64_t> factorize(const mpz_class& n);

// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace valueset
