#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <json.hpp>

#include "config.hpp"
#include "valueset/composite.hpp"
#include "valueset/polyarith.hpp"

namespace valueset::cli {

using Json = nlohmann::ordered_json;

std::string version();

// Rounded to 12 significant digits; NaN and infinities become null.
Json number(double x);
// "num/den" string
Json exact(const mpq_class& x);
// Integer when it fits in 64 bits, decimal string otherwise.
Json integer(const mpz_class& x);

Json poly_json(const IntPoly& f, char var = 'x');
Json modulus_json(const SquareFreeModulus& m);
Json obstruction_json(const ObstructionSet& s);

// The resolved configuration. The worker count is left out on purpose:
// reports must not depend on it.
Json config_json(const RunConfig& config);

}  // namespace valueset::cli
