#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "valueset/numeric.hpp"

#ifndef VALUESET_VERSION
#define VALUESET_VERSION "unknown"
#endif

namespace valueset::cli {

std::string version() { return VALUESET_VERSION; }

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json exact(const mpq_class& x) { return rational_string(x); }

Json integer(const mpz_class& x) {
  if (x >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, x.get_mpz_t());
    return v;
  }
  if (x < 0 && x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json poly_json(const IntPoly& f, char var) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(integer(c));
  return {{"text", f.to_string(var)}, {"degree", f.degree()}, {"coefficients", coeffs}};
}

Json modulus_json(const SquareFreeModulus& m) { return {{"q", integer(m.q())}, {"primes", m.primes()}}; }

Json obstruction_json(const ObstructionSet& s) {
  Json j;
  if (s.kind == ObstructionSet::Kind::mod_p) j["p"] = s.prime;
  j["elements"] = s.elements;
  j["approximate"] = s.approximate;
  return j;
}

Json config_json(const RunConfig& config) {
  Json j;
  j["command"] = config.command;
  if (config.command == "verify") j["suite"] = config.suite;
  j["poly"] = config.poly ? Json(IntPoly::parse(*config.poly).to_string()) : Json(nullptr);
  if (auto m = optional_modulus(config)) {
    j["modulus"] = modulus_json(*m);
  } else {
    j["modulus"] = nullptr;
  }
  j["k"] = config.k ? Json(*config.k) : Json(nullptr);
  j["offsets"] = config.offsets;
  j["window"] = config.window ? Json(*config.window) : Json(nullptr);
  j["bins"] = config.bins;
  j["cap_bits"] = config.cap_bits ? Json(*config.cap_bits) : Json(nullptr);
  j["threshold"] = config.threshold ? number(*config.threshold) : Json(nullptr);
  j["seed"] = config.seed;
  j["out"] = config.out ? Json(*config.out) : Json(nullptr);
  j["format"] = config.format == Format::csv ? "csv" : "json";
  return j;
}

}  // namespace valueset::cli
