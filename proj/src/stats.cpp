#include "valueset/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "valueset/errors.hpp"
#include "valueset/modarith.hpp"
#include "valueset/numeric.hpp"
#include "valueset/parallel.hpp"

namespace valueset {

// ----------------------------------------------------------- SpacingSeries

SpacingSeries::SpacingSeries(std::uint64_t q, std::uint64_t element_count, std::vector<std::uint64_t> raw_gaps)
    : q_(q), count_(element_count), raw_(std::move(raw_gaps)) {
  if (raw_.size() != count_) throw InvalidInput("gap count does not match the image size");
  if (std::accumulate(raw_.begin(), raw_.end(), std::uint64_t{0}) != q_) {
    throw InvalidInput("gaps do not sum to the modulus");
  }
  scale_ = static_cast<double>(count_) / static_cast<double>(q_);
}

mpq_class SpacingSeries::scale() const {
  mpq_class s{mpz_class(count_), mpz_class(q_)};
  s.canonicalize();
  return s;
}

mpq_class SpacingSeries::normalized(std::size_t i) const {
  mpq_class v{mpz_class(raw_[i]) * mpz_class(count_), mpz_class(q_)};
  v.canonicalize();
  return v;
}

std::vector<double> SpacingSeries::normalized_values() const {
  std::vector<double> out(raw_.size());
  constexpr std::uint64_t kExact = std::uint64_t{1} << 53;
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    const u128 num = static_cast<u128>(raw_[i]) * count_;
    // Quotient of two exactly representable doubles is correctly rounded.
    out[i] = num < kExact ? static_cast<double>(static_cast<std::uint64_t>(num)) / static_cast<double>(q_)
                          : to_double(normalized(i));
  }
  return out;
}

SpacingSeries spacings_from_image(const BitArray& image) {
  const std::uint64_t q = image.size();
  const std::uint64_t n = image.count();
  if (n == q) throw Degenerate("degenerate: mean spacing 1 (image is all of Z/qZ)");
  if (n < 2) throw Degenerate("degenerate: image has fewer than two elements");
  std::vector<std::uint64_t> gaps;
  gaps.reserve(n);
  const std::uint64_t first = image.next_set(0);
  std::uint64_t prev = first;
  image.for_each_set([&](std::uint64_t t) {
    if (t == first) return;
    gaps.push_back(t - prev);
    prev = t;
  });
  gaps.push_back(first + q - prev);
  return SpacingSeries(q, n, std::move(gaps));
}

SpacingSeries spacings(const IntPoly& f, const SquareFreeModulus& modulus, std::uint64_t cap_bits) {
  return spacings_from_image(enumerate_image(f, modulus, cap_bits));
}

mpq_class gap_frequency(const SpacingSeries& series, std::uint64_t h) {
  if (series.size() == 0) throw InvalidInput("empty spacing series");
  const auto hits = std::count(series.raw_gaps().begin(), series.raw_gaps().end(), h);
  mpq_class r{mpz_class(static_cast<unsigned long>(hits)), mpz_class(series.element_count())};
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- KS test

KSResult ks_exponential(std::span<const double> sample) {
  if (sample.empty()) throw InvalidInput("KS test on an empty sample");
  std::vector<double> xs(sample.begin(), sample.end());
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double cdf = xs[i] <= 0 ? 0.0 : -std::expm1(-xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
  }
  return {d, xs.size()};
}

KSResult ks_exponential(const SpacingSeries& series) {
  const auto values = series.normalized_values();
  return ks_exponential(values);
}

// ------------------------------------------------------------- histograms

Histogram make_histogram(std::span<const double> values, const HistogramSpec& spec) {
  if (spec.bins == 0 || !(spec.lo < spec.hi)) throw InvalidInput("histogram needs bins > 0 and lo < hi");
  Histogram h;
  h.edges.resize(spec.bins + 1);
  const double width = (spec.hi - spec.lo) / static_cast<double>(spec.bins);
  for (std::size_t i = 0; i <= spec.bins; ++i) h.edges[i] = spec.lo + width * static_cast<double>(i);
  h.edges.back() = spec.hi;
  h.counts.assign(spec.bins, 0);
  for (double v : values) {
    ++h.total;
    if (v < spec.lo) {
      ++h.underflow;
    } else if (v >= spec.hi) {
      ++h.overflow;
    } else {
      auto bin = static_cast<std::size_t>((v - spec.lo) / width);
      bin = std::min(bin, spec.bins - 1);
      // Guard against the division landing one bin off at an edge.
      if (v < h.edges[bin]) --bin;
      else if (bin + 1 < spec.bins && v >= h.edges[bin + 1]) ++bin;
      ++h.counts[bin];
    }
  }
  return h;
}

double adjacent_correlation(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  long double mean = 0;
  for (double v : values) mean += v;
  mean /= static_cast<long double>(n);
  long double cov = 0, var = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double a = values[i] - mean;
    const long double b = values[(i + 1) % n] - mean;
    cov += a * b;
    var += a * a;
  }
  if (var == 0) return std::numeric_limits<double>::quiet_NaN();
  // Cyclic pairs: both coordinates run over the same sample, so the two
  // variances coincide.
  return static_cast<double>(cov / var);
}

JointSpacings joint_consecutive(const SpacingSeries& series, std::size_t k, const HistogramSpec& spec) {
  if (k == 0) throw InvalidInput("k must be >= 1");
  if (series.size() < k) throw InvalidInput("spacing series shorter than k");
  JointSpacings j;
  j.k = k;
  j.count = series.size();
  j.scale = series.scale();
  const auto& raw = series.raw_gaps();
  j.raw.resize(j.count * k);
  for (std::size_t i = 0; i < j.count; ++i) {
    for (std::size_t c = 0; c < k; ++c) j.raw[i * k + c] = raw[(i + c) % j.count];
  }
  const auto values = series.normalized_values();
  std::vector<double> column(j.count);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < j.count; ++i) column[i] = values[(i + c) % j.count];
    j.marginals.push_back(make_histogram(column, spec));
  }
  j.adjacent_correlation = adjacent_correlation(values);
  return j;
}

// ------------------------------------------------------------ correlation

CorrelationWindow::CorrelationWindow(std::vector<Interval> box) : box_(std::move(box)) {
  if (box_.empty()) throw InvalidInput("correlation window needs dimension >= 1");
  for (auto& iv : box_) {
    iv.lo.canonicalize();
    iv.hi.canonicalize();
    if (!(iv.lo < iv.hi)) throw InvalidInput("window interval needs lo < hi");
  }
}

mpq_class CorrelationWindow::volume() const {
  mpq_class v = 1;
  for (const auto& iv : box_) v *= iv.hi - iv.lo;
  return v;
}

bool CorrelationWindow::excluded(std::span<const std::int64_t> h) const {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) return true;
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (h[i] == h[j]) return true;
    }
  }
  return false;
}

CorrelationResult r_k_correlation(const CompositeImage& image, const CorrelationWindow& window,
                                  std::uint64_t lattice_cap, unsigned workers) {
  const CompositeStats& st = image.stats();
  const std::size_t dim = window.dimension();

  std::vector<std::int64_t> lo(dim), extent(dim);
  mpz_class points = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    const mpq_class a = window.box()[i].lo * st.s_q;
    const mpq_class b = window.box()[i].hi * st.s_q;
    mpz_class first, last;
    mpz_cdiv_q(first.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    mpz_class len = last - first + 1;
    if (len < 0) len = 0;
    points *= len;
    if (points > mpz_class(std::to_string(lattice_cap))) {
      throw ResourceCap("window holds more than " + std::to_string(lattice_cap) + " lattice points");
    }
    if (!first.fits_slong_p()) throw ResourceCap("window coordinates out of range");
    lo[i] = first.get_si();
    extent[i] = len.get_si();
  }
  const std::uint64_t total = points.get_ui();

  // Fixed chunking keeps the partial sums independent of the worker count.
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 1024);
  std::vector<mpz_class> partial(chunks, 0);
  std::vector<std::uint64_t> kept(chunks, 0), dropped(chunks, 0);
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
    std::vector<std::int64_t> h(dim);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = dim; i-- > 0;) {
        const auto e = static_cast<std::uint64_t>(extent[i]);
        h[i] = lo[i] + static_cast<std::int64_t>(rest % e);
        rest /= e;
      }
      if (window.excluded(h)) {
        ++dropped[c];
        continue;
      }
      ++kept[c];
      partial[c] += image.n_k(h);
    }
  });

  CorrelationResult r;
  mpz_class sum = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    sum += partial[c];
    r.lattice_points += kept[c];
    r.excluded_points += dropped[c];
  }
  if (st.omega_q_size == 0) throw Degenerate("empty image");
  r.value = mpq_class(sum, st.omega_q_size);
  r.value.canonicalize();
  r.volume = window.volume();
  r.deviation = r.value - r.volume;
  return r;
}

CorrelationResult r_k_correlation(const IntPoly& f, const SquareFreeModulus& modulus,
                                  const CorrelationWindow& window) {
  return r_k_correlation(CompositeImage(f, modulus), window);
}

}  // namespace valueset
