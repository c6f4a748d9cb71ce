#pragma once

#include <gmpxx.h>

#include <string>

namespace valueset {

// Nearest double to x, ties to even (mpq_get_d truncates instead).
double to_double(const mpq_class& x);

// "num/den", or just "num" for integers.
std::string rational_string(const mpq_class& x);

}  // namespace valueset
