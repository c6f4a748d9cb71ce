#pragma once

// Brute-force reference implementations. Each works straight from the
// definition by looping over Z/mZ and shares no code with the optimized
// paths it is used to check (it reads IntPoly coefficients and nothing else).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "valueset/polyarith.hpp"

namespace valueset::oracle {

inline constexpr std::uint64_t kMaxModulus = 1'000'000;

struct OracleReport {
  std::string description;
  std::string expected;
  std::string actual;
  bool match = false;
};

// Sorted {f(x) mod m : 0 <= x < m}. Throws InvalidInput for m > 10^6 or m < 1.
std::vector<std::uint64_t> naive_image_mod_m(const IntPoly& f, std::uint64_t m);

// |{t in Omega_m : t + h_i in Omega_m for all i}|
std::uint64_t naive_nk_mod_m(const IntPoly& f, std::uint64_t m, std::span<const std::int64_t> offsets);

// F_p-rational critical values of f, found by scanning f' over F_p.
std::vector<std::uint64_t> naive_rational_critical_values(const IntPoly& f, std::uint64_t p);

// Compares rtilde_mod_p against differences of the F_p-rational critical
// values. Critical points living in proper extensions are seen by the
// resultant only, so the check is that the brute-force set is a subset.
// Requires p <= 200 and p > deg f.
OracleReport resultant_cross_check(const IntPoly& f, std::uint64_t p);

}  // namespace valueset::oracle
