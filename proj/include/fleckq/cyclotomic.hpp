#pragma once

// Z[zeta_p] modulo p^M on the basis 1, zeta, ..., zeta^{p-2}, with exact
// (1 - zeta)-adic valuations, the uniformizers pi and pi_0, Gauss sums, and
// the congruences proved with them.
//
// Valuations are integers in units where v(1 - zeta) = 1, so v(p) = p - 1.
// A congruence "mod p^e pi^k" becomes the threshold e(p-1) + k.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fleckq/bernoulli.hpp"
#include "fleckq/exact.hpp"
#include "fleckq/fleck.hpp"
#include "fleckq/padic.hpp"
#include "fleckq/verdict.hpp"

namespace fleckq {

/// Valuation at finite precision: exact below the cap M(p-1), otherwise only
/// known to be at least the cap.
struct Valuation {
  long value = 0;
  bool at_least = false;

  bool reaches(long threshold) const { return value >= threshold; }
  std::string str() const { return at_least ? ">=" + std::to_string(value) : std::to_string(value); }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

class CycloElem {
 public:
  CycloElem(long p, long precision) : p_(p), precision_(precision), modulus_(prime_power(p, precision)) {
    if (!is_prime(p)) throw std::invalid_argument("CycloElem: p must be prime");
    if (precision < 1) throw std::invalid_argument("CycloElem: precision must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(p - 1), ExactInt(0));
  }

  static CycloElem constant(long p, long precision, const ExactInt& c) {
    CycloElem x(p, precision);
    x.coeffs_[0] = least_residue(c, x.modulus_);
    return x;
  }
  static CycloElem constant(long p, long precision, const ExactRat& c) {
    return constant(p, precision, residue_mod(c, p, precision));
  }

  /// zeta^a; zeta^{p-1} expands to -(1 + zeta + ... + zeta^{p-2}).
  static CycloElem zeta_power(long p, long a, long precision) {
    CycloElem x(p, precision);
    x.add_monomial(least_residue(a, p), 1);
    return x;
  }

  long prime() const { return p_; }
  long precision() const { return precision_; }
  const ExactInt& modulus() const { return modulus_; }
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactInt& c) { return c == 0; });
  }

  CycloElem with_precision(long m) const {
    if (m > precision_) throw std::invalid_argument("CycloElem: cannot raise precision");
    CycloElem x(p_, m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] = least_residue(coeffs_[i], x.modulus_);
    return x;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    CycloElem x = a.blank_common(b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
      x.coeffs_[i] = least_residue(ExactInt(a.coeffs_[i] + b.coeffs_[i]), x.modulus_);
    return x;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    CycloElem x = a.blank_common(b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
      x.coeffs_[i] = least_residue(ExactInt(a.coeffs_[i] - b.coeffs_[i]), x.modulus_);
    return x;
  }
  CycloElem operator-() const { return CycloElem(p_, precision_) - *this; }

  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    CycloElem x = a.blank_common(b);
    const long p = a.p_;
    // Accumulate by exponent mod p, then fold the zeta^{p-1} coefficient.
    std::vector<ExactInt> acc(static_cast<std::size_t>(p), ExactInt(0));
    for (long i = 0; i < p - 1; ++i) {
      const ExactInt& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (long j = 0; j < p - 1; ++j) {
        const ExactInt& bj = b.coeffs_[static_cast<std::size_t>(j)];
        if (bj == 0) continue;
        acc[static_cast<std::size_t>((i + j) % p)] += ai * bj;
      }
    }
    const ExactInt top = acc[static_cast<std::size_t>(p - 1)];
    for (long i = 0; i < p - 1; ++i)
      x.coeffs_[static_cast<std::size_t>(i)] = least_residue(ExactInt(acc[static_cast<std::size_t>(i)] - top), x.modulus_);
    return x;
  }

  friend CycloElem operator*(const ExactInt& c, const CycloElem& a) {
    CycloElem x(a.p_, a.precision_);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] = least_residue(ExactInt(c * a.coeffs_[i]), x.modulus_);
    return x;
  }
  friend CycloElem operator*(const ExactRat& c, const CycloElem& a) {
    return residue_mod(c, a.p_, a.precision_) * a;
  }

  CycloElem pow(unsigned long e) const {
    CycloElem result = constant(p_, precision_, ExactInt(1));
    CycloElem base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Exact (1 - zeta)-adic valuation, read off after rewriting in powers of
  /// lambda = zeta - 1: the terms d_j lambda^j have valuations in distinct
  /// classes mod p-1, so the minimum is attained exactly once.
  Valuation valuation() const {
    const long cap = precision_ * (p_ - 1);
    long best = cap;
    bool found = false;
    for (long j = 0; j < p_ - 1; ++j) {
      ExactInt d = 0;
      for (long i = j; i < p_ - 1; ++i) d += binomial(i, j) * coeffs_[static_cast<std::size_t>(i)];
      d = least_residue(d, modulus_);
      if (d == 0) continue;
      const long v = (p_ - 1) * ord_p(p_, d).value() + j;
      if (!found || v < best) best = v;
      found = true;
    }
    return {best, !found};
  }

  /// x / p for x with v(x) >= p-1 (all coefficients divisible by p); the
  /// result has one digit less precision.
  CycloElem div_p() const {
    if (precision_ < 2) throw precision_error("CycloElem::div_p: nothing left after division", 2);
    CycloElem x(p_, precision_ - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] % p_ != 0) throw std::domain_error("CycloElem::div_p: element not divisible by p");
      x.coeffs_[i] = least_residue(ExactInt(coeffs_[i] / p_), x.modulus_);
    }
    return x;
  }

  /// Sum of coefficients mod p: the image in Z[zeta]/(1 - zeta) = F_p.
  ExactInt residue_mod_lambda() const {
    ExactInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return least_residue(s, ExactInt(p_));
  }

  /// Inverse of a unit (v = 0) by Newton iteration z <- z(2 - uz), seeded with
  /// the inverse of its residue mod lambda.
  CycloElem inverse() const {
    const ExactInt r = residue_mod_lambda();
    if (r == 0) throw std::domain_error("CycloElem::inverse: not a unit");
    ExactInt r_inv;
    mpz_invert(r_inv.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
    CycloElem z = constant(p_, precision_, r_inv);
    const CycloElem two = constant(p_, precision_, ExactInt(2));
    const long cap = precision_ * (p_ - 1);
    for (long v = 1; v < 2 * cap + 2; v *= 2) z = z * (two - *this * z);
    if (!(constant(p_, precision_, ExactInt(1)) - *this * z).is_zero())
      throw integrity_error("CycloElem::inverse: Newton iteration did not converge");
    return z;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += coeffs_[i].get_str();
    }
    return s + "]";
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void add_monomial(long e, const ExactInt& c) {
    if (e < p_ - 1) {
      coeffs_[static_cast<std::size_t>(e)] = least_residue(ExactInt(coeffs_[static_cast<std::size_t>(e)] + c), modulus_);
      return;
    }
    for (auto& x : coeffs_) x = least_residue(ExactInt(x - c), modulus_);
  }

  CycloElem blank_common(const CycloElem& b) const {
    if (p_ != b.p_) throw std::invalid_argument("CycloElem: mixed primes");
    if (precision_ != b.precision_) {
      const long m = std::min(precision_, b.precision_);
      return CycloElem(p_, m);
    }
    return CycloElem(p_, precision_);
  }

  long p_;
  long precision_;
  ExactInt modulus_;
  std::vector<ExactInt> coeffs_;
};

// Mixed-precision operands are reduced to the smaller precision first.
inline CycloElem at_common(const CycloElem& x, long m) { return x.precision() == m ? x : x.with_precision(m); }

inline Valuation zeta_valuation(const CycloElem& x) { return x.valuation(); }

inline CycloElem zeta_power(long p, long a, long precision) { return CycloElem::zeta_power(p, a, precision); }

/// pi = -sum_{k=1}^{p-1} (1 - zeta)^k / k.
inline CycloElem pi_element(long p, long precision) {
  const CycloElem one = CycloElem::constant(p, precision, ExactInt(1));
  const CycloElem base = one - zeta_power(p, 1, precision);
  CycloElem power = one;
  CycloElem sum(p, precision);
  for (long k = 1; k < p; ++k) {
    power = power * base;
    sum = sum + make_rat(1, k) * power;
  }
  return -sum;
}

/// The root pi_0 of x^{p-1} = -p with pi_0 == zeta - 1 (mod (zeta - 1)^2).
///
/// Written as pi_0 = pi * u: then u^{p-1} = -p / pi^{p-1} = -1/w with the
/// unit w = pi^{p-1}/p == -1 (mod pi), so u == 1 (mod pi) and Newton on
/// u^{p-1} + 1/w from u = 1 converges since (p-1)u^{p-2} is a unit.
/// pi is built one digit finer to absorb the exact division by p.
inline CycloElem pi0_element(long p, long precision) {
  if (p < 3) throw std::invalid_argument("pi0_element: p must be odd");
  if (precision < 2) throw std::invalid_argument("pi0_element: precision must be >= 2");
  const CycloElem pi_fine = pi_element(p, precision + 1);
  const CycloElem w = pi_fine.pow(static_cast<unsigned long>(p - 1)).div_p();
  const CycloElem c = -w.inverse();
  const CycloElem pi = pi_fine.with_precision(precision);
  const ExactRat inv_deg = make_rat(1, p - 1);

  CycloElem u = CycloElem::constant(p, precision, ExactInt(1));
  const long cap = precision * (p - 1);
  for (long v = 1; v < 2 * cap + 2; v *= 2) {
    const CycloElem f = u.pow(static_cast<unsigned long>(p - 1)) - c;
    if (f.is_zero()) break;
    u = u - inv_deg * (f * u.pow(static_cast<unsigned long>(p - 2)).inverse());
  }
  if (!(u.pow(static_cast<unsigned long>(p - 1)) - c).is_zero())
    throw integrity_error("pi0_element: Newton iteration stalled");
  return pi * u;
}

/// G(s) = sum_{a=1}^{p-1} omega(a)^{-s} zeta^a.
inline CycloElem gauss_sum(long p, long s, long precision) {
  if (p < 3) throw std::invalid_argument("gauss_sum: p must be odd");
  CycloElem g(p, precision);
  for (long a = 1; a < p; ++a) {
    const PadicApprox w = teichmuller(p, a, precision).pow(ExactInt(-s));
    g = g + w.residue() * zeta_power(p, a, precision);
  }
  return g;
}

// ---- congruence registry ------------------------------------------------

namespace detail {

/// Default working precision for a threshold: ceil(t/(p-1)) + guard.
inline long precision_for(long p, long threshold, long guard) {
  return (threshold + p - 2) / (p - 1) + guard;
}

struct CycloTarget {
  long p_exp = 0;
  long pi_exp = 0;
  long threshold(long p) const { return p_exp * (p - 1) + pi_exp; }
};

inline long working_precision(const Params& params, long p, long threshold) {
  const long guard = params.get_or("guard", 2);
  const long minimal = (threshold + p - 2) / (p - 1);
  if (!params.has("M")) return precision_for(p, threshold, guard);
  const long m = params.get("M");
  if (m < minimal)
    throw precision_error("precision M=" + std::to_string(m) + " cannot decide a congruence needing valuation " +
                              std::to_string(threshold),
                          minimal);
  return m;
}

inline Verdict cyclo_verdict(const std::string& id, const Params& params, long p, CycloTarget target,
                             const CycloElem& lhs, const CycloElem& rhs, std::string detail = {}) {
  const Valuation v = zeta_valuation(lhs - rhs);
  const long t = target.threshold(p);
  std::string d = "v(lhs-rhs)=" + v.str() + " threshold=" + std::to_string(t);
  if (!detail.empty()) d += "; " + detail;
  return Verdict::decided(id, params, Modulus::with_pi(p, target.p_exp, target.pi_exp), lhs.str(), rhs.str(),
                          v.reaches(t), d);
}

inline Verdict cyclo_exact_verdict(const std::string& id, const Params& params, long p, long m, const CycloElem& lhs,
                                   const CycloElem& rhs, std::string detail = {}) {
  const bool ok = (lhs - rhs).is_zero();
  return Verdict::decided(id, params, Modulus::at_precision(p, m), lhs.str(), rhs.str(), ok, std::move(detail));
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw hypothesis_error(what);
}

inline long need_prime(const Params& params) {
  const long p = params.get("p");
  if (!is_prime(p)) throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
  return p;
}

inline Verdict thm21_i(const Params& params) {
  const long p = need_prime(params);
  const CycloTarget target{2, 0};
  const long m = working_precision(params, p, target.threshold(p));
  const CycloElem pi = pi_element(p, m);
  return cyclo_verdict("thm2.1-i", params, p, target, pi.pow(static_cast<unsigned long>(p - 1)),
                       CycloElem::constant(p, m, ExactInt(-p)));
}

inline CycloElem bernoulli_pi_sum(long p, long a, long n, long order, long precision, const CycloElem& pi) {
  const auto table = bernoulli_table(order, p - 2);
  const CycloElem api = ExactInt(a) * pi;
  CycloElem rhs(p, precision);
  CycloElem power = api.pow(static_cast<unsigned long>(n));
  for (long j = 0; j <= p - 2; ++j) {
    rhs = rhs + (table.values[static_cast<std::size_t>(j)] / factorial(j)) * power;
    power = power * api;
  }
  return rhs;
}

inline Verdict thm21_iia(const Params& params) {
  const long p = need_prime(params);
  const long a = params.get("a");
  const long n = params.get("n");
  const long order = params.get_or("m", least_residue(-n, p));
  require(n >= 0 && order >= 0, "n and m must be nonnegative");
  require(least_residue(order + n, p) == 0, "m must be congruent to -n mod p");
  const CycloTarget target{1, n};
  const CycloTarget alternate{1, n + 1};
  const long m = working_precision(params, p, alternate.threshold(p));
  const CycloElem pi = pi_element(p, m);
  const CycloElem lhs = (zeta_power(p, a, m) - CycloElem::constant(p, m, ExactInt(1))).pow(static_cast<unsigned long>(n));
  const CycloElem rhs = bernoulli_pi_sum(p, a, n, order, m, pi);
  Verdict v = cyclo_verdict("thm2.1-ii-a", params, p, target, lhs, rhs);
  const bool alt = zeta_valuation(lhs - rhs).reaches(alternate.threshold(p));
  if (v.status == Status::Fail || !alt)
    v.detail += std::string("; mod p*pi^(n+1) reading ") + (alt ? "holds" : "fails");
  return v;
}

inline Verdict thm21_iib(const Params& params) {
  const long p = need_prime(params);
  const long a = params.get("a");
  const long n = params.get("n");
  const long b = params.get("b");
  require(n >= 0 && b >= 1, "needs n >= 0 and b >= 1");
  const long pbn = prime_power(p, b).get_si() * n;
  const CycloTarget target{b + 1, pbn};
  const long m = working_precision(params, p, target.threshold(p));
  const CycloElem pi = pi_element(p, m);
  const CycloElem api = ExactInt(a) * pi;
  const CycloElem lhs = (zeta_power(p, a, m) - CycloElem::constant(p, m, ExactInt(1))).pow(static_cast<unsigned long>(pbn));
  const CycloElem lead = api.pow(static_cast<unsigned long>(pbn));
  CycloElem tail(p, m);
  CycloElem power = lead * api;
  for (long k = 2; k < p - 1; ++k) {
    power = power * api;
    tail = tail + (bernoulli_number(k) / (factorial(k) * k)) * power;
  }
  const CycloElem rhs = lead + ExactInt(pbn) * tail;
  return cyclo_verdict("thm2.1-ii-b", params, p, target, lhs, rhs);
}

inline Verdict lem21(const Params& params) {
  const long p = need_prime(params);
  const long a = params.get("a");
  const CycloTarget target{1, 1};
  const long m = working_precision(params, p, target.threshold(p));
  const CycloElem api = ExactInt(a) * pi_element(p, m);
  CycloElem rhs(p, m);
  CycloElem power = CycloElem::constant(p, m, ExactInt(1));
  for (long k = 0; k < p; ++k) {
    if (k > 0) power = power * api;
    rhs = rhs + make_rat(ExactInt(1), factorial(k)) * power;
  }
  return cyclo_verdict("lem2.1", params, p, target, zeta_power(p, a, m), rhs);
}


inline Verdict lem31(const Params& params) {
  const long p = need_prime(params);
  const long n = params.get("n");
  const long r = params.get("r");
  require(n >= 0, "n must be nonnegative");
  const long m = params.get_or("M", 4);
  const CycloElem one = CycloElem::constant(p, m, ExactInt(1));
  CycloElem rhs(p, m);
  for (long a = 0; a < p; ++a)
    rhs = rhs + zeta_power(p, -a * r, m) * (one - zeta_power(p, a, m)).pow(static_cast<unsigned long>(n));
  const CycloElem lhs = CycloElem::constant(p, m, ExactInt(p * c_p(p, n, r)));
  return cyclo_exact_verdict("lem3.1", params, p, m, lhs, rhs);
}

inline Verdict lem32(const Params& params) {
  const long p = need_prime(params);
  const long n = params.get("n");
  const long r = params.get("r");
  require(n >= 0, "n must be nonnegative");
  require(least_residue(r, p) != 0, "r must not be divisible by p");
  const CycloTarget target{1, 1};
  const long m = working_precision(params, p, target.threshold(p));
  const StarPair sp = star_pair(p, n);
  const CycloElem pi = pi_element(p, m);
  const CycloElem one = CycloElem::constant(p, m, ExactInt(1));
  CycloElem lhs(p, m);
  for (long a = 1; a < p; ++a) lhs = lhs + ipow(ExactInt(a), static_cast<unsigned long>(n)) * (zeta_power(p, a * r, m) - one);
  const ExactInt pfac = (n % (p - 1) == 0) ? ExactInt(p) : ExactInt(1);
  const CycloElem rpi = ExactInt(r) * pi;
  const CycloElem first = ExactRat(-pfac, factorial(sp.n_costar)) * rpi.pow(static_cast<unsigned long>(sp.n_costar));
  const CycloElem second = ExactInt(factorial(sp.n_star) * pfac) * (-rpi).pow(static_cast<unsigned long>(sp.n_costar));
  Verdict v = cyclo_verdict("lem3.2", params, p, target, lhs, first);
  const bool second_ok = zeta_valuation(lhs - second).reaches(target.threshold(p));
  v.detail += std::string("; factorial form ") + (second_ok ? "holds" : "fails");
  if (!second_ok) v.status = Status::Fail;
  return v;
}

inline Verdict gross_koblitz(const Params& params) {
  const long p = need_prime(params);
  require(p >= 3, "p must be odd");
  const long s = params.get("s");
  require(s >= 0 && s <= p - 2, "s must lie in [0, p-2]");
  const long m = params.get_or("M", 6);
  require(m >= 2, "precision must be at least 2");
  const CycloElem g = gauss_sum(p, s, m);
  const CycloElem pi0 = pi0_element(p, m);
  const CycloElem pi0s = pi0.pow(static_cast<unsigned long>(s));
  auto rhs_for = [&](long e) {
    const PadicApprox gamma = p_gamma_padic(p, make_rat(e, p - 1), m);
    return -(gamma.residue() * pi0s);
  };
  const CycloElem rhs = rhs_for(s);
  const bool other = (g - rhs_for(p - 1 - s)).is_zero();
  return cyclo_exact_verdict("gross-koblitz", params, p, m, g, rhs,
                             std::string("Gamma_p((p-1-s)/(p-1)) reading ") + (other ? "also holds" : "fails"));
}

inline Verdict lem42(const Params& params) {
  const long p = need_prime(params);
  require(p >= 3, "p must be odd");
  const long n = params.get("n");
  const long r = params.get("r");
  const long b = params.get("b");
  require(n >= 1, "n must be positive");
  require(least_residue(r, p) != 0, "r must not be divisible by p");
  require(b >= 1 && Order(b) <= ord_p(p, ExactInt(p * n)), "b must lie in [1, ord_p(pn)]");
  const StarPair sp = star_pair(p, n);
  const long big_n = (p * n + sp.n_costar) / (p - 1);
  // Cross-multiplied by (-p)^N: the modulus p^b pi becomes p^{N+b} pi.
  const CycloTarget target{big_n + b, 1};
  const long m = working_precision(params, p, target.threshold(p));
  const CycloElem pi = pi_element(p, m);

  CycloElem sum(p, m);
  for (long a = 1; a < p; ++a)
    sum = sum + ipow(ExactInt(a), static_cast<unsigned long>(p * n)) * zeta_power(p, -a * r, m);
  const CycloElem lhs = ipow(ExactInt(r), static_cast<unsigned long>(n)) * (pi.pow(static_cast<unsigned long>(p * n)) * sum);

  const long bprime = (prime_power(p, b).get_si() - 1) / (p - 1);
  const ExactInt u = sign_pow((b - 1) * n) * coprime_factorial(p, bprime * sp.n_star);
  const ExactRat carlitz = ExactRat(p) * bernoulli_number(phi_prime_power(p, b)) - p + 1;
  const ExactRat tail = ExactRat(factorial(sp.n_star)) *
                        (ExactRat(prime_power(p, b) * sp.n_star) * harmonic(sp.n_star) - sp.n_star * carlitz -
                         ExactRat(p * n * fermat_quotient(p, r)));
  const ExactRat scale = ExactRat(ipow(ExactInt(-p), static_cast<unsigned long>(big_n)));
  const CycloElem rhs = CycloElem::constant(p, m, ExactRat(scale * (ExactRat(u) + tail)));
  return cyclo_verdict("lem4.2", params, p, target, lhs, rhs, "N=" + std::to_string(big_n));
}

}  // namespace detail

inline const std::map<std::string, ClaimFn>& cyclo_claims() {
  static const std::map<std::string, ClaimFn> table = {
      {"thm2.1-i", detail::thm21_i},         {"thm2.1-ii-a", detail::thm21_iia}, {"thm2.1-ii-b", detail::thm21_iib},
      {"lem2.1", detail::lem21},             {"lem3.1", detail::lem31},          {"lem3.2", detail::lem32},
      {"gross-koblitz", detail::gross_koblitz}, {"lem4.2", detail::lem42},
  };
  return table;
}

/// Runs one registered cyclotomic congruence. Precision comes from "M" if
/// given (checked against the claim's threshold), else from "guard".
inline Verdict verify_cyclo_claim(const std::string& claim_id, const Params& params) {
  const auto& table = cyclo_claims();
  const auto it = table.find(claim_id);
  if (it == table.end()) throw std::invalid_argument("unknown cyclotomic claim '" + claim_id + "'");
  return it->second(params);
}

}  // namespace fleckq
