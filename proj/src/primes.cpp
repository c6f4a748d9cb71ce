#include "valueset/primes.hpp"

#include <algorithm>
#include <numeric>

#include "valueset/errors.hpp"
#include "valueset/modarith.hpp"

namespace valueset {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  // Brent's variant with batched gcds.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto step = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> factorize(const mpz_class& n) {
  if (n < 1) throw InvalidInput("cannot factor " + n.get_str());
  std::vector<std::uint64_t> out;
  mpz_class rest = n;
  for (std::uint64_t d = 2; d <= kTrialLimit && rest > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      rest /= d;
      out.push_back(d);
    }
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) {
      throw InvalidInput("cofactor " + rest.get_str() +
                         " exceeds 2^64; pass the prime factors explicitly");
    }
    factor_u64(rest.get_ui(), out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi <= 50'000'000) {
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
      if (composite[i]) continue;
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (!composite[i]) out.push_back(i);
    }
    return out;
  }
  for (std::uint64_t i = lo; i <= hi && i >= lo; ++i) {
    if (is_prime(i)) out.push_back(i);
  }
  return out;
}

}  // namespace valueset
