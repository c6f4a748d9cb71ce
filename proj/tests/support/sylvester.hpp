#pragma once

// Test-only resultant oracle: determinant of the Sylvester matrix by exact
// Gaussian elimination over Q. Independent of the subresultant PRS and of
// the Euclidean F_p route.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace valueset::testing {

inline mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

// a, b ascending coefficient lists with nonzero leading entries.
inline mpz_class sylvester_resultant(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
  }
  const mpq_class d = determinant(std::move(m));
  return d.get_num();
}

}  // namespace valueset::testing
