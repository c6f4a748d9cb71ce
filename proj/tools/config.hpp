#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valueset/composite.hpp"
#include "valueset/polyarith.hpp"
#include "valueset/stats.hpp"

namespace valueset::cli {

inline constexpr const char* kCommands[] = {"image", "correlate", "spacings", "critical", "nk", "verify"};
inline constexpr const char* kSuites[] = {"identities", "wan",     "multiplicativity", "davenport",
                                          "anomaly",    "poisson", "correlation",      "c0"};

enum class Format { json, csv };

// Everything a run depends on. Optional fields left empty fall back to the
// per-command defaults.
struct RunConfig {
  std::string command;
  std::string suite;  // verify only
  std::optional<std::string> poly;
  std::optional<std::string> modulus;        // decimal integer
  std::vector<std::uint64_t> primes;         // alternative to modulus
  std::optional<int> k;
  std::vector<std::int64_t> offsets;
  std::optional<std::string> window;         // "a:b[,a:b...]", rationals allowed
  std::size_t bins = 50;
  std::optional<std::uint64_t> cap_bits;     // enumeration bits and lattice points
  std::optional<double> threshold;
  unsigned workers = 0;                      // 0: available parallelism
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  Format format = Format::json;
};

// Throws InvalidInput on an unknown command/suite or inconsistent flags.
void validate(const RunConfig& config);

IntPoly require_poly(const RunConfig& config);
// From --modulus or --primes; throws InvalidInput if neither or both given.
SquareFreeModulus require_modulus(const RunConfig& config);
std::optional<SquareFreeModulus> optional_modulus(const RunConfig& config);

// "0:1,-1/2:3" -> [[0, 1], [-1/2, 3]]. Throws InvalidInput.
std::vector<Interval> parse_window(const std::string& text);
std::vector<std::uint64_t> parse_u64_list(const std::string& text);
std::vector<std::int64_t> parse_i64_list(const std::string& text);

unsigned resolved_workers(const RunConfig& config);

}  // namespace valueset::cli
