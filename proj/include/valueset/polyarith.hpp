#pragma once

// Exact polynomial arithmetic over Z and F_p, resultants, and the
// critical-value obstruction sets used by the correlation hypotheses.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace valueset {

// Polynomial with arbitrary-precision integer coefficients, ascending order.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  // Parses e.g. "x^4-2x^2", "3*x^2 + x - 7". Throws InvalidInput.
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of x^i; zero past the degree.
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  // Non-negative gcd of the coefficients; 0 for the zero polynomial.
  mpz_class content() const;
  // Content removed and leading coefficient made positive.
  IntPoly primitive() const;
  // this(y + shift)
  IntPoly taylor_shift(const mpz_class& shift) const;

  std::string to_string(char var = 'x') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Polynomial over F_p for a prime p < 2^31; coefficients in [0, p).
class FpPoly {
 public:
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  explicit FpPoly(std::uint64_t p) : p_(p) {}

  static FpPoly reduce(const IntPoly& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const;

  std::uint64_t eval(std::uint64_t x) const;
  FpPoly monic() const;
  FpPoly taylor_shift(std::uint64_t shift) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  // Remainder of a modulo b; b nonzero.
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);

 private:
  void trim();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> coeffs_;
};

// Polynomial in x whose coefficients are polynomials in a second variable y.
template <class Poly>
struct Bivariate {
  std::vector<Poly> x_coeffs;
  int x_degree() const { return static_cast<int>(x_coeffs.size()) - 1; }
};

using IntBivariate = Bivariate<IntPoly>;
using FpBivariate = Bivariate<FpPoly>;

// y - f(x)
IntBivariate y_minus(const IntPoly& f);
FpBivariate y_minus(const FpPoly& f);

IntPoly derivative(const IntPoly& f);
FpPoly derivative(const FpPoly& f);

// Monic gcd. Throws InvalidInput on modulus mismatch.
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);
// Primitive gcd over Q (positive leading coefficient); zero iff both are zero.
IntPoly rational_gcd(const IntPoly& a, const IntPoly& b);

// Scalar resultants. Over Z by the subresultant PRS, over F_p by Euclid.
mpz_class resultant(const IntPoly& a, const IntPoly& b);
std::uint64_t resultant(const FpPoly& a, const FpPoly& b);

// Res_x(a(x), b(x, y)) as a polynomial in y, by evaluation at enough y
// points followed by interpolation. Throws InvalidInput if a is zero and
// WildCase over F_p if p has too few points for the interpolation.
IntPoly resultant_x(const IntPoly& a, const IntBivariate& b);
FpPoly resultant_x(const FpPoly& a, const FpBivariate& b);

// C(y) = Res_x(f'(x), y - f(x)), stored primitive. Roots are the critical
// values of f. Throws Degenerate when deg f < 2.
IntPoly critical_value_poly(const IntPoly& f);
// The same over F_p, stored monic. Throws Degenerate for deg f < 2 or f
// constant mod p, WildCase when f' = 0 mod p or p <= deg f.
FpPoly critical_value_poly(const IntPoly& f, std::uint64_t p);

struct ObstructionSet {
  enum class Kind { infinity, mod_p };

  Kind kind = Kind::infinity;
  std::uint64_t prime = 0;  // 0 for Kind::infinity
  std::vector<std::int64_t> elements;  // sorted, distinct
  // Built by direct enumeration over F_p only (wild or small-prime regime);
  // critical points in proper extensions are missed.
  bool approximate = false;

  bool contains(std::int64_t r) const;
};

// Integer differences of critical values. Throws Degenerate for deg f < 2.
ObstructionSet rtilde_infinity(const IntPoly& f);
// Residues h with R_p and R_p + h intersecting. Throws WildCase.
ObstructionSet rtilde_mod_p(const IntPoly& f, std::uint64_t p);
// Fallback used when rtilde_mod_p reports WildCase: differences of the
// F_p-rational critical values only, flagged approximate.
ObstructionSet rtilde_mod_p_direct(const IntPoly& f, std::uint64_t p);

// True iff R_p, R_p - h_1, ..., R_p - h_{k-1} are pairwise disjoint.
bool theorem1_hypothesis(const ObstructionSet& rtilde_p, std::span<const std::int64_t> offsets);
bool theorem1_hypothesis(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets);

// True iff h_1 != 0 and (R_p u R_p - h_1), R_p - h_2, ..., R_p - h_{k-1}
// are pairwise disjoint. Throws InvalidInput for an empty offset list.
bool prop1_hypothesis(const ObstructionSet& rtilde_p, std::span<const std::int64_t> offsets);
bool prop1_hypothesis(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets);

// Residue of h in [0, m).
std::uint64_t reduce_mod(std::int64_t h, std::uint64_t m);
std::uint64_t reduce_mod(const mpz_class& h, std::uint64_t m);

}  // namespace valueset
