#include "valueset/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "valueset/errors.hpp"

namespace valueset::oracle {

namespace {

std::uint64_t value_mod(const IntPoly& f, std::uint64_t x, std::uint64_t m) {
  mpz_class acc = 0;
  const mpz_class xv(static_cast<unsigned long>(x));
  for (int i = f.degree(); i >= 0; --i) acc = acc * xv + f.coeffs()[i];
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_ui();
}

void check_modulus(std::uint64_t m) {
  if (m < 1 || m > kMaxModulus) throw InvalidInput("oracle modulus must lie in [1, 10^6]");
}

std::string join(const std::set<std::uint64_t>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::vector<std::uint64_t> naive_image_mod_m(const IntPoly& f, std::uint64_t m) {
  check_modulus(m);
  std::set<std::uint64_t> seen;
  for (std::uint64_t x = 0; x < m; ++x) seen.insert(value_mod(f, x, m));
  return {seen.begin(), seen.end()};
}

std::uint64_t naive_nk_mod_m(const IntPoly& f, std::uint64_t m, std::span<const std::int64_t> offsets) {
  check_modulus(m);
  std::vector<bool> in_image(m, false);
  for (auto t : naive_image_mod_m(f, m)) in_image[t] = true;
  std::uint64_t count = 0;
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t t = 0; t < mm; ++t) {
    if (!in_image[t]) continue;
    bool all = true;
    for (auto h : offsets) {
      const std::int64_t u = ((t + h) % mm + mm) % mm;
      if (!in_image[u]) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

std::vector<std::uint64_t> naive_rational_critical_values(const IntPoly& f, std::uint64_t p) {
  check_modulus(p);
  // f'(x) = sum i c_i x^(i-1), evaluated without forming the derivative.
  std::set<std::uint64_t> values;
  for (std::uint64_t x = 0; x < p; ++x) {
    mpz_class acc = 0;
    const mpz_class xv(static_cast<unsigned long>(x));
    for (int i = f.degree(); i >= 1; --i) acc = acc * xv + f.coeffs()[i] * i;
    if (mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      values.insert(value_mod(f, x, p));
    }
  }
  return {values.begin(), values.end()};
}

OracleReport resultant_cross_check(const IntPoly& f, std::uint64_t p) {
  if (p > 200 || p <= static_cast<std::uint64_t>(std::max(f.degree(), 0))) {
    throw InvalidInput("resultant_cross_check needs deg f < p <= 200");
  }
  const auto crit = naive_rational_critical_values(f, p);
  std::set<std::uint64_t> brute;
  for (auto a : crit) {
    for (auto b : crit) brute.insert((a + p - b) % p);
  }
  const ObstructionSet rs = rtilde_mod_p(f, p);
  std::set<std::uint64_t> via_resultant;
  for (auto e : rs.elements) via_resultant.insert(static_cast<std::uint64_t>(e));

  OracleReport r;
  r.description = "F_" + std::to_string(p) + "-rational critical-value differences of " + f.to_string() +
                  " contained in the resultant-based obstruction set";
  r.expected = join(brute);
  r.actual = join(via_resultant);
  r.match = std::includes(via_resultant.begin(), via_resultant.end(), brute.begin(), brute.end());
  return r;
}

}  // namespace valueset::oracle
