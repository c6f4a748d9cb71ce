#include "valueset/composite.hpp"

#include <algorithm>
#include <optional>

#include "valueset/errors.hpp"
#include "valueset/parallel.hpp"
#include "valueset/primes.hpp"

namespace valueset {

SquareFreeModulus SquareFreeModulus::from_integer(const mpz_class& q) {
  if (q <= 1) throw InvalidInput("modulus must be > 1, got " + q.get_str());
  std::vector<std::uint64_t> factors = factorize(q);
  if (std::adjacent_find(factors.begin(), factors.end()) != factors.end()) {
    throw InvalidInput(q.get_str() + " is not square-free");
  }
  SquareFreeModulus m;
  m.primes_ = std::move(factors);
  m.q_ = q;
  return m;
}

SquareFreeModulus SquareFreeModulus::from_primes(std::vector<std::uint64_t> primes) {
  if (primes.empty()) throw InvalidInput("empty prime list");
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw InvalidInput("prime list repeats an entry: modulus is not square-free");
  }
  SquareFreeModulus m;
  for (auto p : primes) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " in the prime list is not prime");
    m.q_ *= mpz_class(std::to_string(p));
  }
  m.primes_ = std::move(primes);
  return m;
}

CompositeImage::CompositeImage(const IntPoly& f, SquareFreeModulus modulus, unsigned workers)
    : modulus_(std::move(modulus)) {
  const auto& primes = modulus_.primes();
  std::vector<std::optional<ImageMask>> built(primes.size());
  parallel_for(primes.size(), workers, [&](std::size_t i) { built[i].emplace(compute_image(f, primes[i])); });

  stats_.modulus = modulus_;
  std::vector<std::uint64_t> q1;
  for (auto& m : built) {
    masks_.push_back(std::move(*m));
    const ImageMask& mask = masks_.back();
    kernels_.emplace_back(mask);
    PrimeStats ps = prime_stats(mask, f.degree());
    stats_.omega_q_size *= mpz_class(std::to_string(ps.omega_size));
    stats_.s_q *= ps.s_p;
    if (!ps.is_permutation) q1.push_back(ps.p);
    stats_.per_prime.push_back(std::move(ps));
  }
  stats_.s_q.canonicalize();
  stats_.q1_reduced = q1.empty() ? SquareFreeModulus::unit() : SquareFreeModulus::from_primes(std::move(q1));
}

mpz_class CompositeImage::n_k(std::span<const std::int64_t> offsets) const {
  mpz_class n = 1;
  for (const auto& k : kernels_) {
    const std::uint64_t c = k.count(offsets);
    if (c == 0) return 0;
    n *= mpz_class(std::to_string(c));
  }
  return n;
}

mpz_class n_k_composite(const IntPoly& f, const SquareFreeModulus& modulus, std::span<const std::int64_t> offsets) {
  return CompositeImage(f, modulus).n_k(offsets);
}

SquareFreeModulus reduce_to_q1(const IntPoly& f, const SquareFreeModulus& modulus) {
  std::vector<std::uint64_t> q1;
  for (auto p : modulus.primes()) {
    if (compute_image(f, p).count() < p) q1.push_back(p);
  }
  return q1.empty() ? SquareFreeModulus::unit() : SquareFreeModulus::from_primes(std::move(q1));
}

namespace {

// Omega_p repeated until it spans at least p + 64 bits, so a 64-bit window
// starting at any residue is one unaligned read.
struct PeriodicTile {
  std::uint64_t p;
  std::vector<std::uint64_t> words;

  explicit PeriodicTile(const ImageMask& mask) : p(mask.prime()) {
    const std::uint64_t reps = (p + 64 + p - 1) / p;
    BitArray bits(reps * p + 64);
    const BitArray& src = mask.bits();
    src.for_each_set([&](std::uint64_t t) {
      for (std::uint64_t r = 0; r < reps; ++r) bits.set(t + r * p);
    });
    words = bits.words();
  }

  std::uint64_t window(std::uint64_t start) const {
    const std::size_t wi = start >> 6;
    const unsigned b = start & 63;
    if (b == 0) return words[wi];
    return (words[wi] >> b) | (words[wi + 1] << (64 - b));
  }
};

}  // namespace

BitArray enumerate_image(const CompositeImage& image, std::uint64_t cap_bits) {
  const mpz_class& q = image.modulus().q();
  if (q > mpz_class(std::to_string(cap_bits))) {
    throw ResourceCap("q = " + q.get_str() + " exceeds the enumeration cap of " + std::to_string(cap_bits) +
                      " bits; use the correlation-only workflow");
  }
  const std::uint64_t qv = q.get_ui();
  BitArray out(qv);
  std::vector<PeriodicTile> tiles;
  for (const auto& m : image.masks()) tiles.emplace_back(m);

  auto& words = out.words();
  std::vector<std::uint64_t> residue(tiles.size(), 0), step(tiles.size());
  for (std::size_t j = 0; j < tiles.size(); ++j) step[j] = 64 % tiles[j].p;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = ~std::uint64_t{0};
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      w &= tiles[j].window(residue[j]);
      residue[j] += step[j];
      if (residue[j] >= tiles[j].p) residue[j] -= tiles[j].p;
    }
    words[i] = w;
  }
  if (qv % 64 != 0) words.back() &= (std::uint64_t{1} << (qv % 64)) - 1;
  return out;
}

BitArray enumerate_image(const IntPoly& f, const SquareFreeModulus& modulus, std::uint64_t cap_bits) {
  if (modulus.q() > mpz_class(std::to_string(cap_bits))) {
    throw ResourceCap("q = " + modulus.q().get_str() + " exceeds the enumeration cap of " +
                      std::to_string(cap_bits) + " bits; use the correlation-only workflow");
  }
  return enumerate_image(CompositeImage(f, modulus), cap_bits);
}

}  // namespace valueset
