#pragma once

// Exact integer/rational arithmetic shared by every module.
//
// ExactInt and ExactRat are GMP's mpz_class and mpq_class. mpq_class keeps
// values canonical (lowest terms, positive denominator) as long as every
// constructor path goes through make_rat() or an arithmetic operator, so
// equality of ExactRat values is structural equality.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fleckq {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Canonical rational num/den. Throws std::domain_error on den == 0.
inline ExactRat make_rat(const ExactInt& num, const ExactInt& den = 1) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  ExactRat q(num, den);
  q.canonicalize();
  return q;
}

inline ExactRat make_rat(long num, long den) { return make_rat(ExactInt(num), ExactInt(den)); }

/// Binomial coefficient with the out-of-range convention binom(n,k) = 0 for
/// k < 0 or k > n.
inline ExactInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Polynomial binomial x(x-1)...(x-l+1)/l! for any integer x; zero for l < 0.
inline ExactInt binomial_poly(const ExactInt& x, long l) {
  if (l < 0) return 0;
  ExactInt r;
  if (x >= 0) {
    if (!x.fits_ulong_p()) throw std::overflow_error("binomial_poly: argument too large");
    mpz_bin_uiui(r.get_mpz_t(), x.get_ui(), static_cast<unsigned long>(l));
    return r;
  }
  // binom(-y, l) = (-1)^l binom(y + l - 1, l)
  mpz_bin_ui(r.get_mpz_t(), ExactInt(-x + l - 1).get_mpz_t(), static_cast<unsigned long>(l));
  return (l % 2 == 0) ? r : ExactInt(-r);
}

inline ExactInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline ExactInt ipow(const ExactInt& base, unsigned long e) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline ExactRat ipow(const ExactRat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("ipow: zero to a negative power");
    return ipow(ExactRat(1) / base, -e);
  }
  ExactRat r = make_rat(ipow(ExactInt(base.get_num()), static_cast<unsigned long>(e)),
                        ipow(ExactInt(base.get_den()), static_cast<unsigned long>(e)));
  return r;
}

/// (-1)^e for any integer e.
constexpr long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// H_r = sum_{0<k<=r} 1/k; H_0 = 0.
inline ExactRat harmonic(long r) {
  if (r < 0) throw std::invalid_argument("harmonic: r must be nonnegative");
  ExactRat h = 0;
  for (long k = 1; k <= r; ++k) h += ExactRat(1, k);
  h.canonicalize();
  return h;
}

/// Floor division for signed integers.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// {x}_m, the least nonnegative residue of x modulo m.
constexpr long least_residue(long x, long m) {
  if (m < 1) throw std::invalid_argument("least_residue: modulus must be positive");
  long r = x % m;
  return r < 0 ? r + m : r;
}

inline ExactInt least_residue(const ExactInt& x, const ExactInt& m) {
  if (m < 1) throw std::invalid_argument("least_residue: modulus must be positive");
  ExactInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string to_string(const ExactInt& x) { return x.get_str(); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const ExactRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace fleckq
