#include "commands.hpp"

#include <cmath>
#include <sstream>

#include "valueset/errors.hpp"
#include "valueset/numeric.hpp"
#include "valueset/stats.hpp"

namespace valueset::cli {

namespace {

Json rational_pair(const mpq_class& x) { return {{"exact", exact(x)}, {"value", number(to_double(x))}}; }

Json prime_stats_json(const PrimeStats& s) {
  return {{"p", s.p},
          {"omega_size", s.omega_size},
          {"s_p", rational_pair(s.s_p)},
          {"is_permutation", s.is_permutation},
          {"wan_ok", s.wan_ok}};
}

// Permutation primes contribute nothing to spacings or correlations, so
// both commands work on q1 and say so.
SquareFreeModulus reduced_modulus(const IntPoly& f, const SquareFreeModulus& m, Json& report) {
  const SquareFreeModulus q1 = reduce_to_q1(f, m);
  report["reduction"] = {{"requested", modulus_json(m)}, {"q1", modulus_json(q1)}, {"reduced", !(q1 == m)}};
  if (q1.is_unit()) throw Degenerate("f permutes Z/pZ for every p | q, so Omega_q = Z/qZ");
  return q1;
}

std::string csv_histogram(const Histogram& h) {
  std::ostringstream out;
  out << "bin_left,bin_right,count,density,exp_reference\n";
  const auto fmt = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double l = h.edges[i], r = h.edges[i + 1], w = r - l;
    const double density = h.total == 0 ? 0.0 : static_cast<double>(h.counts[i]) / (static_cast<double>(h.total) * w);
    const double reference = (std::exp(-l) - std::exp(-r)) / w;
    out << fmt(l) << ',' << fmt(r) << ',' << h.counts[i] << ',' << fmt(density) << ',' << fmt(reference) << '\n';
  }
  return out.str();
}

}  // namespace

Outcome start_report(const RunConfig& config) {
  Outcome o;
  o.report["version"] = version();
  o.report["config"] = config_json(config);
  return o;
}

Outcome cmd_image(const RunConfig& config) {
  const IntPoly f = require_poly(config);
  const SquareFreeModulus m = require_modulus(config);
  Outcome o = start_report(config);
  const CompositeImage image(f, m, resolved_workers(config));
  const CompositeStats& s = image.stats();
  Json per_prime = Json::array();
  for (const auto& ps : s.per_prime) per_prime.push_back(prime_stats_json(ps));
  o.report["q"] = integer(m.q());
  o.report["primes"] = m.primes();
  o.report["omega_size"] = integer(s.omega_q_size);
  o.report["s_q"] = rational_pair(s.s_q);
  o.report["q1"] = modulus_json(s.q1_reduced);
  o.report["per_prime"] = per_prime;
  o.summary = "image of " + f.to_string() + " mod " + m.q().get_str() + ": " + s.omega_q_size.get_str() +
              " residues, s_q = " + rational_string(s.s_q);
  return o;
}

Outcome cmd_nk(const RunConfig& config) {
  const IntPoly f = require_poly(config);
  const SquareFreeModulus m = require_modulus(config);
  Outcome o = start_report(config);
  const CompositeImage image(f, m, resolved_workers(config));
  const int k = static_cast<int>(config.offsets.size()) + 1;
  Json per_prime = Json::array();
  for (std::size_t i = 0; i < image.masks().size(); ++i) {
    const auto& mask = image.masks()[i];
    const std::uint64_t p = mask.prime();
    const mpq_class predicted = predicted_nk(p, image.stats().per_prime[i].s_p, k);
    per_prime.push_back({{"p", p},
                         {"n_k", n_k_prime(mask, config.offsets)},
                         {"predicted", rational_pair(predicted)},
                         {"epsilon", rational_pair(epsilon_k(mask, config.offsets))}});
  }
  const mpz_class n = image.n_k(config.offsets);
  mpq_class predicted = 1;
  for (std::size_t i = 0; i < image.masks().size(); ++i) {
    predicted *= predicted_nk(image.masks()[i].prime(), image.stats().per_prime[i].s_p, k);
  }
  o.report["k"] = k;
  o.report["offsets"] = config.offsets;
  o.report["n_k"] = integer(n);
  o.report["predicted"] = rational_pair(predicted);
  o.report["per_prime"] = per_prime;
  o.summary = "N_" + std::to_string(k) + " = " + n.get_str() + " (q / s_q^k = " + rational_string(predicted) + ")";
  return o;
}

Outcome cmd_critical(const RunConfig& config) {
  const IntPoly f = require_poly(config);
  Outcome o = start_report(config);
  const IntPoly c = critical_value_poly(f);
  o.report["C"] = poly_json(c, 'y');
  o.report["rtilde_infinity"] = obstruction_json(rtilde_infinity(f));
  Json mod_p = Json::array();
  for (std::uint64_t p : config.primes) {
    Json entry = {{"p", p}};
    try {
      const FpPoly cp = critical_value_poly(f, p);
      entry["C_p"] = cp.coeffs();
      entry["rtilde_p"] = obstruction_json(rtilde_mod_p(f, p));
    } catch (const WildCase& e) {
      entry["C_p"] = nullptr;
      entry["wild"] = e.what();
      entry["rtilde_p"] = obstruction_json(rtilde_mod_p_direct(f, p));
    }
    mod_p.push_back(entry);
  }
  o.report["mod_p"] = mod_p;
  std::ostringstream s;
  s << "C(y) = " << c.to_string('y') << "; R~_inf = {";
  const auto inf = rtilde_infinity(f).elements;
  for (std::size_t i = 0; i < inf.size(); ++i) s << (i ? "," : "") << inf[i];
  s << "}";
  o.summary = s.str();
  return o;
}

Outcome cmd_correlate(const RunConfig& config) {
  const IntPoly f = require_poly(config);
  const SquareFreeModulus m = require_modulus(config);
  const CorrelationWindow window(parse_window(*config.window));
  Outcome o = start_report(config);
  const SquareFreeModulus q1 = reduced_modulus(f, m, o.report);
  const CompositeImage image(f, q1, resolved_workers(config));
  const CorrelationResult r =
      r_k_correlation(image, window, config.cap_bits.value_or(kDefaultLatticeCap), resolved_workers(config));
  o.report["k"] = window.dimension() + 1;
  o.report["s_q"] = rational_pair(image.stats().s_q);
  o.report["R_k"] = rational_pair(r.value);
  o.report["volume"] = rational_pair(r.volume);
  o.report["deviation"] = rational_pair(r.deviation);
  o.report["lattice_points"] = r.lattice_points;
  o.report["excluded_points"] = r.excluded_points;
  o.summary = "R_" + std::to_string(window.dimension() + 1) + " = " + rational_string(r.value) + " ~ " +
              std::to_string(to_double(r.value)) + ", vol = " + rational_string(r.volume);
  return o;
}

Outcome cmd_spacings(const RunConfig& config) {
  const IntPoly f = require_poly(config);
  const SquareFreeModulus m = require_modulus(config);
  Outcome o = start_report(config);
  const SquareFreeModulus q1 = reduced_modulus(f, m, o.report);
  const CompositeImage image(f, q1, resolved_workers(config));
  const SpacingSeries series = spacings_from_image(enumerate_image(image, config.cap_bits.value_or(kDefaultCapBits)));
  const std::vector<double> values = series.normalized_values();
  const KSResult ks = ks_exponential(values);
  HistogramSpec spec;
  spec.bins = config.bins;
  const Histogram h = make_histogram(values, spec);

  Json freq = Json::array();
  for (std::uint64_t g = 1; g <= 10; ++g) {
    const mpq_class v = gap_frequency(series, g);
    freq.push_back({{"h", g}, {"exact", exact(v)}, {"value", number(to_double(v))}});
  }
  o.report["s_q"] = rational_pair(image.stats().s_q);
  o.report["gaps"] = series.size();
  o.report["ks"] = {{"statistic", number(ks.statistic)}, {"n", ks.n}};
  o.report["gap_frequency"] = freq;
  o.report["adjacent_correlation"] = number(adjacent_correlation(values));
  o.report["histogram"] = {{"bins", h.counts.size()},
                           {"lo", number(spec.lo)},
                           {"hi", number(spec.hi)},
                           {"underflow", h.underflow},
                           {"overflow", h.overflow},
                           {"total", h.total}};
  o.csv = csv_histogram(h);
  o.summary = std::to_string(series.size()) + " gaps, KS = " + std::to_string(ks.statistic) +
              ", adjacent correlation = " + std::to_string(adjacent_correlation(values));
  return o;
}

Outcome run(const RunConfig& config) {
  Outcome o;
  try {
    validate(config);
    if (config.command == "image") return cmd_image(config);
    if (config.command == "nk") return cmd_nk(config);
    if (config.command == "critical") return cmd_critical(config);
    if (config.command == "correlate") return cmd_correlate(config);
    if (config.command == "spacings") return cmd_spacings(config);
    return cmd_verify(config);
  } catch (const ResourceCap& e) {
    o.exit_code = kCap;
    o.report = {{"version", version()}, {"error", {{"kind", "resource_cap"}, {"message", e.what()}}}};
    o.summary = std::string("resource cap: ") + e.what();
  } catch (const Error& e) {
    o.exit_code = kInvalid;
    const char* kind = dynamic_cast<const Degenerate*>(&e) ? "degenerate"
                       : dynamic_cast<const WildCase*>(&e) ? "wild_case"
                                                            : "invalid_input";
    o.report = {{"version", version()}, {"error", {{"kind", kind}, {"message", e.what()}}}};
    o.summary = std::string("error: ") + e.what();
  }
  return o;
}

}  // namespace valueset::cli
