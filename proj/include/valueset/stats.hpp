#pragma once

// Spacing statistics of Omega_q and the k-level correlation function.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "valueset/bitarray.hpp"
#include "valueset/composite.hpp"

namespace valueset {

// Gaps between consecutive elements of Omega_q on Z/qZ, the last one
// wrapping around. Normalized gaps are raw_gaps[i] * |Omega_q| / q and are
// exposed exactly through normalized().
class SpacingSeries {
 public:
  SpacingSeries(std::uint64_t q, std::uint64_t element_count, std::vector<std::uint64_t> raw_gaps);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t element_count() const { return count_; }
  std::size_t size() const { return raw_.size(); }
  const std::vector<std::uint64_t>& raw_gaps() const { return raw_; }

  mpq_class normalized(std::size_t i) const;
  double normalized_value(std::size_t i) const { return static_cast<double>(raw_[i]) * scale_; }
  std::vector<double> normalized_values() const;
  // |Omega_q| / q, the factor turning raw gaps into normalized ones.
  mpq_class scale() const;

 private:
  std::uint64_t q_;
  std::uint64_t count_;
  std::vector<std::uint64_t> raw_;
  double scale_;
};

// Throws Degenerate if the image is all of Z/qZ or has fewer than two points.
SpacingSeries spacings_from_image(const BitArray& image);
// Enumerates Omega_q for this modulus exactly as given; callers wanting the
// q1 reduction apply reduce_to_q1 first.
SpacingSeries spacings(const IntPoly& f, const SquareFreeModulus& modulus, std::uint64_t cap_bits = kDefaultCapBits);

// (number of raw gaps equal to h) / |Omega_q|
mpq_class gap_frequency(const SpacingSeries& series, std::uint64_t h);

struct KSResult {
  double statistic = 0;  // sup_t |F_emp(t) - (1 - e^{-t})|
  std::size_t n = 0;
};

KSResult ks_exponential(std::span<const double> sample);
KSResult ks_exponential(const SpacingSeries& series);

struct HistogramSpec {
  std::size_t bins = 50;
  double lo = 0.0;
  double hi = 6.0;
};

// Uniform bins on [lo, hi); values >= hi go to `overflow`, values < lo to
// `underflow`. total counts every value.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;
  std::uint64_t total = 0;
};

Histogram make_histogram(std::span<const double> values, const HistogramSpec& spec = {});

// Pearson correlation of the pairs (x[i], x[i+1 mod n]).
double adjacent_correlation(std::span<const double> values);

// Cyclic windows of k consecutive gaps.
struct JointSpacings {
  std::size_t k = 0;
  std::size_t count = 0;
  std::vector<std::uint64_t> raw;  // count * k raw gaps, row-major
  mpq_class scale;                 // raw -> normalized factor
  std::vector<Histogram> marginals;
  double adjacent_correlation = 0;

  std::span<const std::uint64_t> tuple(std::size_t i) const { return {raw.data() + i * k, k}; }
  mpq_class normalized(std::size_t i, std::size_t j) const { return scale * mpq_class(mpz_class(tuple(i)[j])); }
};

// Throws InvalidInput if k == 0 or the series is shorter than k.
JointSpacings joint_consecutive(const SpacingSeries& series, std::size_t k, const HistogramSpec& spec = {});

struct Interval {
  mpq_class lo;
  mpq_class hi;
};

// Axis-aligned closed box X in R^(k-1). At the lattice level every h with
// some h_i = 0 or h_i = h_j (i != j) is dropped.
class CorrelationWindow {
 public:
  // Throws InvalidInput for an empty box list or lo >= hi.
  explicit CorrelationWindow(std::vector<Interval> box);

  std::size_t dimension() const { return box_.size(); }
  const std::vector<Interval>& box() const { return box_; }
  mpq_class volume() const;
  bool excluded(std::span<const std::int64_t> h) const;

 private:
  std::vector<Interval> box_;
};

struct CorrelationResult {
  mpq_class value;        // R_k(X, q)
  mpq_class volume;       // vol(X)
  mpq_class deviation;    // value - volume
  std::uint64_t lattice_points = 0;   // points of s_q X kept after exclusions
  std::uint64_t excluded_points = 0;
};

inline constexpr std::uint64_t kDefaultLatticeCap = 100'000'000;

// R_k(X, q) = (1/|Omega_q|) sum_{h in s_q X, not excluded} N_k(h, q), exact.
// Throws ResourceCap if the box holds more than lattice_cap points and
// Degenerate if the image is empty.
CorrelationResult r_k_correlation(const CompositeImage& image, const CorrelationWindow& window,
                                  std::uint64_t lattice_cap = kDefaultLatticeCap, unsigned workers = 1);
CorrelationResult r_k_correlation(const IntPoly& f, const SquareFreeModulus& modulus,
                                  const CorrelationWindow& window);

}  // namespace valueset
