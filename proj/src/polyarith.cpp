#include "valueset/polyarith.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "valueset/errors.hpp"
#include "valueset/modarith.hpp"
#include "valueset/primes.hpp"

namespace valueset {

namespace {

// Largest |r| scanned when searching integer critical-value differences.
constexpr long kMaxRtildeScan = 10'000'000;

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int dr = a.degree();
  int e = a.degree() - db + 1;
  while (dr >= db && dr >= 0) {
    const mpz_class lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
    --e;
  }
  if (e > 0) {
    const mpz_class scale = pow_z(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= scale;
  }
  return IntPoly(std::move(r));
}

IntPoly divexact(const IntPoly& a, const mpz_class& d) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

// Newton interpolation through (xs[i], ys[i]) over Q, returned in the
// monomial basis.
std::vector<mpq_class> interpolate_q(const std::vector<mpq_class>& xs, std::vector<mpq_class> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  std::vector<mpq_class> poly(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (x - xs[i]) + ys[i]
    for (std::size_t k = n - 1; k > 0; --k) poly[k] = poly[k - 1] - xs[i] * poly[k];
    poly[0] = ys[i] - xs[i] * poly[0];
  }
  return poly;
}

std::vector<std::uint64_t> interpolate_p(const std::vector<std::uint64_t>& xs,
                                         std::vector<std::uint64_t> ys, std::uint64_t p) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const std::uint64_t den = sub_mod(xs[i], xs[i - j], p);
      ys[i] = mul_mod(sub_mod(ys[i], ys[i - 1], p), inv_mod(den, p), p);
    }
  }
  std::vector<std::uint64_t> poly(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = n - 1; k > 0; --k) {
      poly[k] = sub_mod(poly[k - 1], mul_mod(xs[i], poly[k], p), p);
    }
    poly[0] = sub_mod(ys[i], mul_mod(xs[i], poly[0], p), p);
  }
  return poly;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  return divexact(*this, g);
}

IntPoly IntPoly::taylor_shift(const mpz_class& shift) const {
  // Horner in the basis of powers of (y + shift).
  std::vector<mpz_class> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
  }
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<mpz_class> c = a.coeffs_;
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

// ----------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

FpPoly FpPoly::reduce(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(reduce_mod(v, p));
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t FpPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t r = 0;
  x %= p_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = add_mod(mul_mod(r, x, p_), *it, p_);
  return r;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inv_mod(leading(), p_);
  std::vector<std::uint64_t> c = coeffs_;
  for (auto& v : c) v = mul_mod(v, inv, p_);
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::taylor_shift(std::uint64_t shift) const {
  shift %= p_;
  std::vector<std::uint64_t> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] = add_mod(c[j - 1], mul_mod(shift, c[j], p_), p_);
  }
  return FpPoly(p_, std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw InvalidInput("modulus mismatch");
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a.coeff(i), b.coeff(i), a.p_);
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw InvalidInput("modulus mismatch");
  std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_);
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw InvalidInput("modulus mismatch");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = add_mod(c[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
    }
  }
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw InvalidInput("modulus mismatch");
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> r = a.coeffs_;
  const int db = b.degree();
  const std::uint64_t inv = inv_mod(b.leading(), p);
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    const std::uint64_t q = mul_mod(r[dr], inv, p);
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) r[dr - db + i] = sub_mod(r[dr - db + i], mul_mod(q, b.coeffs_[i], p), p);
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
  return FpPoly(p, std::move(r));
}

// -------------------------------------------------------------- operations

std::uint64_t reduce_mod(std::int64_t h, std::uint64_t m) {
  const std::int64_t r = h % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t reduce_mod(const mpz_class& h, std::uint64_t m) {
  return mpz_fdiv_ui(h.get_mpz_t(), m);
}

IntBivariate y_minus(const IntPoly& f) {
  IntBivariate b;
  const int n = std::max(f.degree(), 0);
  b.x_coeffs.resize(n + 1);
  for (int i = 0; i <= n; ++i) b.x_coeffs[i] = IntPoly({-f.coeff(i)});
  b.x_coeffs[0] = b.x_coeffs[0] + IntPoly({0, 1});
  return b;
}

FpBivariate y_minus(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  FpBivariate b;
  const int n = std::max(f.degree(), 0);
  for (int i = 0; i <= n; ++i) b.x_coeffs.emplace_back(p, std::vector<std::uint64_t>{sub_mod(0, f.coeff(i), p)});
  b.x_coeffs[0] = b.x_coeffs[0] + FpPoly(p, {0, 1});
  return b;
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<mpz_class> c(f.degree());
  for (int i = 1; i <= f.degree(); ++i) c[i - 1] = f.coeffs()[i] * i;
  return IntPoly(std::move(c));
}

FpPoly derivative(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  if (f.degree() < 1) return FpPoly(p);
  std::vector<std::uint64_t> c(f.degree());
  for (int i = 1; i <= f.degree(); ++i) c[i - 1] = mul_mod(f.coeffs()[i], static_cast<std::uint64_t>(i) % p, p);
  return FpPoly(p, std::move(c));
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("fp_gcd: modulus mismatch");
  FpPoly u = a, v = b;
  while (!v.is_zero()) {
    FpPoly r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

IntPoly rational_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.primitive(), v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v).primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

mpz_class resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  const int da0 = a_in.degree(), db0 = b_in.degree();
  if (da0 == 0) return pow_z(a_in.leading(), db0);
  if (db0 == 0) return pow_z(b_in.leading(), da0);

  const mpz_class ca = a_in.content(), cb = b_in.content();
  IntPoly a = divexact(a_in, ca), b = divexact(b_in, cb);
  const mpz_class t = pow_z(ca, db0) * pow_z(cb, da0);
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
  }
  mpz_class g = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divexact(r, g * pow_z(h, delta));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      mpz_class num = pow_z(g, delta);
      mpz_class den = pow_z(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() > 0) continue;
    const int da = a.degree();
    mpz_class num = pow_z(b.leading(), da);
    mpz_class den = pow_z(h, da - 1);
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * res;
  }
}

std::uint64_t resultant(const FpPoly& a_in, const FpPoly& b_in) {
  if (a_in.modulus() != b_in.modulus()) throw InvalidInput("resultant: modulus mismatch");
  const std::uint64_t p = a_in.modulus();
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  FpPoly a = a_in, b = b_in;
  std::uint64_t acc = 1;
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return mul_mod(acc, pow_mod(b.leading(), da, p), p);
    if (da == 0) return mul_mod(acc, pow_mod(a.leading(), db, p), p);
    FpPoly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
    if ((da & 1) && (db & 1)) acc = sub_mod(0, acc, p);
    acc = mul_mod(acc, pow_mod(b.leading(), da - r.degree(), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

IntPoly resultant_x(const IntPoly& a, const IntBivariate& b) {
  if (a.is_zero()) throw InvalidInput("resultant_x: zero polynomial");
  if (b.x_coeffs.empty()) return {};
  int y_degree = 0;
  for (const auto& c : b.x_coeffs) y_degree = std::max(y_degree, c.degree());
  const int bound = std::max(a.degree(), 0) * y_degree;
  const IntPoly& lead = b.x_coeffs.back();

  std::vector<mpq_class> xs, ys;
  for (long y = 0; static_cast<int>(xs.size()) <= bound; ++y) {
    const mpz_class yv = y;
    if (lead.eval(yv) == 0) continue;
    std::vector<mpz_class> spec;
    for (const auto& c : b.x_coeffs) spec.push_back(c.eval(yv));
    xs.emplace_back(y);
    ys.emplace_back(resultant(a, IntPoly(std::move(spec))));
  }
  std::vector<mpz_class> out;
  for (auto& c : interpolate_q(xs, std::move(ys))) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error("resultant_x: non-integral interpolation");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

FpPoly resultant_x(const FpPoly& a, const FpBivariate& b) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero()) throw InvalidInput("resultant_x: zero polynomial");
  if (b.x_coeffs.empty()) return FpPoly(p);
  int y_degree = 0;
  for (const auto& c : b.x_coeffs) y_degree = std::max(y_degree, c.degree());
  const int bound = std::max(a.degree(), 0) * y_degree;
  const FpPoly& lead = b.x_coeffs.back();

  std::vector<std::uint64_t> xs, ys;
  for (std::uint64_t y = 0; y < p && static_cast<int>(xs.size()) <= bound; ++y) {
    if (lead.eval(y) == 0) continue;
    std::vector<std::uint64_t> spec;
    for (const auto& c : b.x_coeffs) spec.push_back(c.eval(y));
    xs.push_back(y);
    ys.push_back(resultant(a, FpPoly(p, std::move(spec))));
  }
  if (static_cast<int>(xs.size()) <= bound) {
    throw WildCase("resultant_x: F_" + std::to_string(p) + " has too few evaluation points");
  }
  return FpPoly(p, interpolate_p(xs, std::move(ys), p));
}

IntPoly critical_value_poly(const IntPoly& f) {
  if (f.degree() < 2) throw Degenerate("degree < 2: no critical structure");
  return resultant_x(derivative(f), y_minus(f)).primitive();
}

FpPoly critical_value_poly(const IntPoly& f, std::uint64_t p) {
  if (f.degree() < 2) throw Degenerate("degree < 2: no critical structure");
  const FpPoly fp = FpPoly::reduce(f, p);
  if (fp.degree() < 1) throw Degenerate("f is constant mod " + std::to_string(p));
  if (p <= static_cast<std::uint64_t>(f.degree())) {
    throw WildCase("p = " + std::to_string(p) + " <= deg f: unsupported regime");
  }
  const FpPoly d = derivative(fp);
  if (d.is_zero()) throw WildCase("f' vanishes mod " + std::to_string(p));
  return resultant_x(d, y_minus(fp)).monic();
}

bool ObstructionSet::contains(std::int64_t r) const {
  if (kind == Kind::mod_p) r = static_cast<std::int64_t>(reduce_mod(r, prime));
  return std::binary_search(elements.begin(), elements.end(), r);
}

ObstructionSet rtilde_infinity(const IntPoly& f) {
  const IntPoly c = critical_value_poly(f);
  ObstructionSet out;
  out.kind = ObstructionSet::Kind::infinity;
  if (c.degree() < 1) return out;

  // Cauchy bound: every root has |z| <= 1 + max |c_i / c_d|.
  mpq_class ratio = 0;
  for (int i = 0; i < c.degree(); ++i) {
    mpq_class r(abs(c.coeffs()[i]), abs(c.leading()));
    r.canonicalize();
    ratio = std::max(ratio, r);
  }
  const mpq_class reach = 2 * (1 + ratio);
  mpz_class limit;
  mpz_cdiv_q(limit.get_mpz_t(), reach.get_num_mpz_t(), reach.get_den_mpz_t());
  if (limit > kMaxRtildeScan) throw ResourceCap("critical values too spread out to scan integer differences");

  const long lim = limit.get_si();
  for (long r = -lim; r <= lim; ++r) {
    if (rational_gcd(c, c.taylor_shift(r)).degree() > 0) out.elements.push_back(r);
  }
  return out;
}

ObstructionSet rtilde_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const FpPoly c = critical_value_poly(f, p);
  ObstructionSet out;
  out.kind = ObstructionSet::Kind::mod_p;
  out.prime = p;
  if (c.degree() < 1) return out;
  for (std::uint64_t h = 0; h < p; ++h) {
    if (fp_gcd(c, c.taylor_shift(h)).degree() > 0) out.elements.push_back(static_cast<std::int64_t>(h));
  }
  return out;
}

ObstructionSet rtilde_mod_p_direct(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const FpPoly fp = FpPoly::reduce(f, p);
  const FpPoly d = derivative(fp);
  std::vector<bool> value_seen(p, false);
  for (std::uint64_t a = 0; a < p; ++a) {
    if (d.eval(a) == 0) value_seen[fp.eval(a)] = true;
  }
  std::vector<std::uint64_t> values;
  for (std::uint64_t v = 0; v < p; ++v) {
    if (value_seen[v]) values.push_back(v);
  }
  std::vector<bool> diff(p, false);
  for (auto u : values) {
    for (auto v : values) diff[sub_mod(u, v, p)] = true;
  }
  ObstructionSet out;
  out.kind = ObstructionSet::Kind::mod_p;
  out.prime = p;
  out.approximate = true;
  for (std::uint64_t h = 0; h < p; ++h) {
    if (diff[h]) out.elements.push_back(static_cast<std::int64_t>(h));
  }
  return out;
}

bool theorem1_hypothesis(const ObstructionSet& rtilde_p, std::span<const std::int64_t> offsets) {
  if (rtilde_p.kind != ObstructionSet::Kind::mod_p) throw InvalidInput("expected a mod-p obstruction set");
  const std::uint64_t p = rtilde_p.prime;
  std::vector<std::uint64_t> hs{0};
  for (auto h : offsets) hs.push_back(reduce_mod(h, p));
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (rtilde_p.contains(static_cast<std::int64_t>(sub_mod(hs[i], hs[j], p)))) return false;
    }
  }
  return true;
}

bool theorem1_hypothesis(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets) {
  return theorem1_hypothesis(rtilde_mod_p(f, p), offsets);
}

bool prop1_hypothesis(const ObstructionSet& rtilde_p, std::span<const std::int64_t> offsets) {
  if (rtilde_p.kind != ObstructionSet::Kind::mod_p) throw InvalidInput("expected a mod-p obstruction set");
  if (offsets.empty()) throw InvalidInput("prop1_hypothesis needs k >= 2");
  const std::uint64_t p = rtilde_p.prime;
  const std::uint64_t h1 = reduce_mod(offsets[0], p);
  if (h1 == 0) return false;
  // Block 0 holds the translates by 0 and h_1; every later offset is its own block.
  std::vector<std::vector<std::uint64_t>> blocks{{0, h1}};
  for (std::size_t i = 1; i < offsets.size(); ++i) blocks.push_back({reduce_mod(offsets[i], p)});
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (auto u : blocks[i]) {
        for (auto v : blocks[j]) {
          if (rtilde_p.contains(static_cast<std::int64_t>(sub_mod(u, v, p)))) return false;
        }
      }
    }
  }
  return true;
}

bool prop1_hypothesis(const IntPoly& f, std::uint64_t p, std::span<const std::int64_t> offsets) {
  return prop1_hypothesis(rtilde_mod_p(f, p), offsets);
}

}  // namespace valueset
