#pragma once

// p-adic utilities: orders of rationals, residues modulo prime powers, the
// n_* / n^* pair, Fermat and Wilson quotients, Teichmuller lifts and Morita's
// p-adic Gamma function on integers and p-adic integers.

#include <compare>
#include <string>

#include "fleckq/bernoulli.hpp"
#include "fleckq/exact.hpp"
#include "fleckq/verdict.hpp"

namespace fleckq {

/// p-adic order; ord_p(0) is a distinguished +infinity greater than every
/// integer.
class Order {
 public:
  constexpr Order(long v) : value_(v), infinite_(false) {}  // NOLINT(implicit)
  static constexpr Order infinity() { return Order(); }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::logic_error("Order::value on +infinity");
    return value_;
  }

  friend constexpr bool operator==(const Order& a, const Order& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "+inf" : std::to_string(value_); }

 private:
  constexpr Order() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

namespace detail {
inline long nonzero_ord(long p, ExactInt x) {
  const ExactInt pp = p;
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}
}  // namespace detail

inline Order ord_p(long p, const ExactRat& x) {
  if (x == 0) return Order::infinity();
  return detail::nonzero_ord(p, x.get_num()) - detail::nonzero_ord(p, x.get_den());
}

inline Order ord_p(long p, const ExactInt& x) {
  if (x == 0) return Order::infinity();
  return detail::nonzero_ord(p, x);
}

inline Order ord_p(long p, long x) { return ord_p(p, ExactInt(x)); }

inline ExactInt prime_power(long p, long e) { return ipow(ExactInt(p), static_cast<unsigned long>(e)); }

/// Euler phi of p^b.
inline long phi_prime_power(long p, long b) {
  if (b < 1) throw std::invalid_argument("phi_prime_power: b must be positive");
  long q = 1;
  for (long i = 1; i < b; ++i) q *= p;
  return q * (p - 1);
}

/// x mod p^e for a p-integral rational x, in [0, p^e).
inline ExactInt residue_mod(const ExactRat& x, long p, long e) {
  const ExactInt m = prime_power(p, e);
  const ExactInt den = x.get_den();
  ExactInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
    if (e == 0) return 0;
    throw std::invalid_argument("residue_mod: " + to_string(x) + " is not " + std::to_string(p) + "-integral");
  }
  return least_residue(ExactInt(x.get_num() * inv), m);
}

/// a == b (mod p^e) for rationals: ord_p(a - b) >= e.
inline bool congruent(const ExactRat& a, const ExactRat& b, long p, long e) {
  return ord_p(p, ExactRat(a - b)) >= Order(e);
}

/// Residue string for reports: canonical residue mod p^e when p-integral,
/// otherwise the exact rational.
inline std::string residue_string(const ExactRat& x, long p, long e) {
  if (ord_p(p, x) >= Order(0)) return to_string(residue_mod(x, p, e));
  return to_string(x);
}

/// Integer residue modulo p^M at fixed precision M.
class PadicApprox {
 public:
  PadicApprox(long p, long precision, const ExactInt& value)
      : p_(p), precision_(precision), modulus_(prime_power(p, precision)), residue_(least_residue(value, modulus_)) {
    if (precision < 1) throw std::invalid_argument("PadicApprox: precision must be >= 1");
  }
  PadicApprox(long p, long precision, const ExactRat& value)
      : PadicApprox(p, precision, residue_mod(value, p, precision)) {}

  long prime() const { return p_; }
  long precision() const { return precision_; }
  const ExactInt& residue() const { return residue_; }
  const ExactInt& modulus() const { return modulus_; }

  bool is_unit() const { return residue_ % p_ != 0; }

  PadicApprox with_precision(long m) const {
    if (m > precision_) throw std::invalid_argument("PadicApprox: cannot raise precision");
    return {p_, m, residue_};
  }

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    const long m = a.common(b);
    return {a.p_, m, ExactInt(a.residue_ + b.residue_)};
  }
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) {
    const long m = a.common(b);
    return {a.p_, m, ExactInt(a.residue_ - b.residue_)};
  }
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    const long m = a.common(b);
    return {a.p_, m, ExactInt(a.residue_ * b.residue_)};
  }
  PadicApprox operator-() const { return {p_, precision_, ExactInt(-residue_)}; }

  PadicApprox pow(const ExactInt& e) const {
    ExactInt r;
    if (e < 0) return inverse().pow(ExactInt(-e));
    mpz_powm(r.get_mpz_t(), residue_.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
    return {p_, precision_, r};
  }

  PadicApprox inverse() const {
    ExactInt r;
    if (mpz_invert(r.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw std::invalid_argument("PadicApprox: inverse of a non-unit");
    return {p_, precision_, r};
  }

  friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

  std::string str() const { return to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(precision_); }

 private:
  long common(const PadicApprox& b) const {
    if (p_ != b.p_) throw std::invalid_argument("PadicApprox: mixed primes");
    return std::min(precision_, b.precision_);
  }

  long p_;
  long precision_;
  ExactInt modulus_;
  ExactInt residue_;
};

/// n_* in [1, p-1] with n_* = n (mod p-1), n^* = {-n}_{p-1}; n_* + n^* = p-1.
struct StarPair {
  long prime;
  long n;
  long n_star;
  long n_costar;
};

inline StarPair star_pair(long p, long n) {
  if (p < 2) throw std::invalid_argument("star_pair: p must be prime");
  const long lower = least_residue(n, p - 1);
  return {p, n, lower == 0 ? p - 1 : lower, least_residue(-n, p - 1)};
}

/// (r^{p-1} - 1)/p.
inline ExactInt fermat_quotient(long p, const ExactInt& r) {
  if (r % p == 0) throw std::invalid_argument("fermat_quotient: p divides r");
  ExactInt q = ipow(r, static_cast<unsigned long>(p - 1)) - 1;
  if (q % p != 0) throw integrity_error("fermat_quotient: r^(p-1) - 1 not divisible by p");
  return q / p;
}

inline ExactInt fermat_quotient(long p, long r) { return fermat_quotient(p, ExactInt(r)); }

/// Product of 1 <= k <= n with p not dividing k.
inline ExactInt coprime_factorial(long p, long n) {
  ExactInt r = 1;
  for (long k = 1; k <= n; ++k)
    if (k % p != 0) r *= k;
  return r;
}

/// Generalized Wilson quotient (1 + prod_{0<a<p^b, p !| a} a) / p^b.
inline ExactInt wilson_quotient(long p, long b) {
  if (p < 3 || b < 1) throw std::invalid_argument("wilson_quotient: needs odd p and b >= 1");
  const ExactInt q = prime_power(p, b);
  ExactInt num = coprime_factorial(p, q.get_si() - 1) + 1;
  if (num % q != 0) throw integrity_error("wilson_quotient: Gauss product is not -1 mod p^b");
  return num / q;
}

/// Teichmuller lift omega(a) mod p^M: the (p-1)-th root of unity congruent
/// to a mod p, reached by iterating x -> x^p from a.
inline PadicApprox teichmuller(long p, const ExactInt& a, long precision) {
  if (a % p == 0) throw std::invalid_argument("teichmuller: p divides a");
  PadicApprox x(p, precision, a);
  for (long i = 1; i < precision; ++i) x = x.pow(p);
  return x;
}

inline PadicApprox teichmuller(long p, long a, long precision) { return teichmuller(p, ExactInt(a), precision); }

/// Morita Gamma on positive integers: (-1)^n prod_{0<k<n, p !| k} k mod p^M.
inline PadicApprox p_gamma_int(long p, const ExactInt& n, long precision) {
  if (n < 1) throw std::invalid_argument("p_gamma_int: n must be positive");
  if (!n.fits_slong_p()) throw resource_error("p_gamma_int: argument too large");
  const ExactInt mod = prime_power(p, precision);
  const long top = n.get_si();
  ExactInt acc = 1;
  for (long k = 1; k < top; ++k) {
    if (k % p == 0) continue;
    acc *= k;
    if (k % 16 == 0) acc %= mod;
  }
  if (top % 2 == 1) acc = -acc;
  return {p, precision, acc};
}

inline PadicApprox p_gamma_int(long p, long n, long precision) { return p_gamma_int(p, ExactInt(n), precision); }

/// Morita Gamma at a p-adic integer x, via a positive integer representative
/// of x mod p^M (Gamma_p is 1-Lipschitz for odd p).
inline PadicApprox p_gamma_padic(long p, const ExactRat& x, long precision) {
  if (p < 3) throw std::invalid_argument("p_gamma_padic: p must be odd");
  if (ord_p(p, ExactInt(x.get_den())) != Order(0))
    throw std::invalid_argument("p_gamma_padic: " + to_string(x) + " is not a p-adic integer");
  ExactInt m = residue_mod(x, p, precision);
  if (m == 0) m = prime_power(p, precision);
  return p_gamma_int(p, m, precision);
}

/// w_{p^b} == (p B_{phi(p^b)} - p + 1)/p^b (mod p).
inline Verdict verify_lemma_4_1(long p, long b) {
  if (p < 3 || !is_prime(p) || b < 1) throw std::invalid_argument("verify_lemma_4_1: needs odd prime p, b >= 1");
  const long phi = phi_prime_power(p, b);
  const ExactRat rhs = (ExactRat(p) * bernoulli_number(phi) - p + 1) / ExactRat(prime_power(p, b));
  const ExactInt w = wilson_quotient(p, b);
  Params params{{"p", p}, {"b", b}};
  if (ord_p(p, rhs) < Order(0))
    return Verdict::decided("lem4.1", params, Modulus::power(p, 1), residue_string(w, p, 1), to_string(rhs), false,
                            "right side not p-integral");
  return Verdict::decided("lem4.1", params, Modulus::power(p, 1), residue_string(w, p, 1), residue_string(rhs, p, 1),
                          congruent(w, rhs, p, 1));
}

/// Carlitz: ord_p(p B_{phi(p^b)} - p + 1) >= b.
inline Verdict verify_carlitz(long p, long b) {
  if (p < 3 || !is_prime(p) || b < 1) throw std::invalid_argument("verify_carlitz: needs odd prime p, b >= 1");
  const ExactRat x = ExactRat(p) * bernoulli_number(phi_prime_power(p, b)) - p + 1;
  const Order o = ord_p(p, x);
  return Verdict::decided("carlitz", {{"p", p}, {"b", b}}, Modulus::power(p, b), residue_string(x, p, b), "0",
                          o >= Order(b), "ord_p=" + o.str());
}

}  // namespace fleckq
