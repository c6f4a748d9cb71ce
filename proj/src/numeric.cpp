#include "valueset/numeric.hpp"

#include <cmath>

namespace valueset {

double to_double(const mpq_class& x_in) {
  mpq_class x = x_in;
  x.canonicalize();
  if (x == 0) return 0.0;
  const bool negative = x < 0;
  const mpz_class num = abs(x.get_num());
  const mpz_class& den = x.get_den();

  // Scale so that the integer quotient has exactly 53 significant bits.
  long shift = 53 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  mpz_class n = num, d = den;
  auto scale = [&](long s) {
    n = num;
    d = den;
    if (s >= 0) {
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(s));
    } else {
      mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-s));
    }
  };
  scale(shift);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const mpz_class two53 = mpz_class(1) << 53;
  if (q >= two53) {
    scale(--shift);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  } else if (q < (two53 >> 1)) {
    scale(++shift);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  }
  const int cmp_half = cmp(2 * r, d);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  // q <= 2^53 here, so the conversion is exact.
  const double v = std::ldexp(q.get_d(), static_cast<int>(-shift));
  return negative ? -v : v;
}

std::string rational_string(const mpq_class& x_in) {
  mpq_class x = x_in;
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace valueset
