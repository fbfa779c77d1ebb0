#pragma once

// Stirling numbers of the second kind, exact or reduced modulo an integer,
// and their congruences with the alternating binomial sums.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleckq/bernoulli.hpp"
#include "fleckq/exact.hpp"
#include "fleckq/fleck.hpp"
#include "fleckq/padic.hpp"
#include "fleckq/verdict.hpp"

namespace fleckq {

inline constexpr long kExactStirlingRows = 400;
inline constexpr long kReducedStirlingRows = 5000;

/// Rows S(0..max_m, 0..max_n) by S(m,n) = n S(m-1,n) + S(m-1,n-1), reduced
/// modulo `modulus` when one is given. Immutable once built.
class StirlingTable {
 public:
  StirlingTable(long max_m, long max_n, std::optional<ExactInt> modulus = std::nullopt,
                long row_cap = -1)
      : max_m_(max_m), max_n_(max_n), modulus_(std::move(modulus)) {
    if (max_m < 0 || max_n < 0) throw std::invalid_argument("StirlingTable: negative size");
    if (row_cap < 0) row_cap = modulus_ ? kReducedStirlingRows : kExactStirlingRows;
    if (max_m > row_cap)
      throw resource_error("StirlingTable: m=" + std::to_string(max_m) + " exceeds row cap " + std::to_string(row_cap));
    const auto width = static_cast<std::size_t>(max_n + 1);
    rows_.assign(static_cast<std::size_t>(max_m + 1), std::vector<ExactInt>(width, ExactInt(0)));
    rows_[0][0] = 1;
    for (long m = 1; m <= max_m; ++m) {
      auto& row = rows_[static_cast<std::size_t>(m)];
      const auto& prev = rows_[static_cast<std::size_t>(m - 1)];
      for (long n = 1; n <= std::min(m, max_n); ++n) {
        ExactInt v = n * prev[static_cast<std::size_t>(n)] + prev[static_cast<std::size_t>(n - 1)];
        if (modulus_) v %= *modulus_;
        row[static_cast<std::size_t>(n)] = std::move(v);
      }
    }
  }

  const ExactInt& at(long m, long n) const {
    if (m < 0 || m > max_m_ || n < 0 || n > max_n_) throw std::out_of_range("StirlingTable::at");
    return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  }

  const std::optional<ExactInt>& modulus() const { return modulus_; }

 private:
  long max_m_;
  long max_n_;
  std::optional<ExactInt> modulus_;
  std::vector<std::vector<ExactInt>> rows_;
};

/// Exact S(m,n).
inline ExactInt stirling2(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("stirling2: m, n must be positive");
  if (n > m) return 0;
  return StirlingTable(m, n).at(m, n);
}

/// S(m,n) mod `modulus`; only the n+1 needed columns are kept, so m may
/// reach the reduced row cap.
inline ExactInt stirling2(long m, long n, const ExactInt& modulus, long row_cap = kReducedStirlingRows) {
  if (m < 1 || n < 1) throw std::invalid_argument("stirling2: m, n must be positive");
  if (modulus < 1) throw std::invalid_argument("stirling2: modulus must be positive");
  if (n > m) return 0;
  if (m > row_cap)
    throw resource_error("stirling2: m=" + std::to_string(m) + " exceeds row cap " + std::to_string(row_cap));
  std::vector<ExactInt> row(static_cast<std::size_t>(n + 1), ExactInt(0));
  row[0] = 1;
  for (long i = 1; i <= m; ++i) {
    for (long j = std::min(i, n); j >= 1; --j) {
      auto& cell = row[static_cast<std::size_t>(j)];
      cell = (j * cell + row[static_cast<std::size_t>(j - 1)]) % modulus;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(n)];
}

/// (-1)^{n-1} n! S(m phi(p^b), n) == C_p(n,0) (mod p^b).
inline Verdict verify_gl_relation(long p, long n, long m, long b, long row_cap = kReducedStirlingRows) {
  if (!is_prime(p) || n < 1 || m < 1 || b < 1) throw std::invalid_argument("verify_gl_relation: needs prime p and n, m, b >= 1");
  const ExactInt mod = prime_power(p, b);
  const long rows = m * phi_prime_power(p, b);
  const ExactInt lhs = sign_pow(n - 1) * factorial(n) * stirling2(rows, n, mod, row_cap);
  const ExactInt rhs = c_p(p, n, 0);
  return Verdict::decided("gl", {{"p", p}, {"n", n}, {"m", m}, {"b", b}}, Modulus::power(p, b),
                          to_string(least_residue(lhs, mod)), to_string(least_residue(rhs, mod)),
                          congruent(ExactRat(lhs), ExactRat(rhs), p, b));
}

namespace detail {

struct StirlingFormSides {
  ExactInt first;    // (pn-1)! S(M, pn-1) mod p^b
  ExactInt second;   // (pn-1)! S(M, pn) mod p^b
  long first_shift;  // floor((pn-2)/(p-1))
  long second_shift; // floor((pn-1)/(p-1))
};

inline StirlingFormSides stirling_form_sides(long p, long n, long m, long b, long row_cap) {
  const ExactInt mod = prime_power(p, b);
  const long rows = m * phi_prime_power(p, b);
  const long pn = p * n;
  if (rows > row_cap)
    throw resource_error("eq1.14: m*phi(p^b)=" + std::to_string(rows) + " exceeds row cap " + std::to_string(row_cap));
  // One pass over rows, keeping columns up to pn.
  std::vector<ExactInt> row(static_cast<std::size_t>(pn + 1), ExactInt(0));
  row[0] = 1;
  for (long i = 1; i <= rows; ++i) {
    for (long j = std::min(i, pn); j >= 1; --j) {
      auto& cell = row[static_cast<std::size_t>(j)];
      cell = (j * cell + row[static_cast<std::size_t>(j - 1)]) % mod;
    }
    row[0] = 0;
  }
  const ExactInt f = factorial(pn - 1) % mod;
  return {ExactInt(f * row[static_cast<std::size_t>(pn - 1)] % mod), ExactInt(f * row[static_cast<std::size_t>(pn)] % mod),
          floor_div(pn - 2, p - 1), floor_div(pn - 1, p - 1)};
}

}  // namespace detail

/// Evaluates both displayed congruences of the Stirling form of the
/// F_p(pn,0)/(pn) congruence mod p without checking its hypotheses. Each
/// side is a residue mod p^b divided by a power of p; the side is decided
/// only when that quotient is p-integral.
inline Verdict evaluate_eq_1_14(long p, long n, long m, long b, long row_cap = kReducedStirlingRows) {
  if (!is_prime(p) || p < 3 || n < 1 || m < 1 || b < 1)
    throw std::invalid_argument("eq1.14: needs odd prime p and n, m, b >= 1");
  const auto s = detail::stirling_form_sides(p, n, m, b, row_cap);
  const long pn = p * n;
  const ExactRat x1 = ExactRat(2 * s.first) / (ExactRat(pn) * ipow(ExactRat(-p), s.first_shift));
  const ExactRat x2 = -ExactRat(s.second) / ipow(ExactRat(-p), s.second_shift);
  const long ns = star_pair(p, n).n_star;
  const ExactRat rhs = ExactRat(factorial(ns), ExactInt(ns + 1)) * bernoulli_number(p - 1 - ns);

  const bool ok1 = congruent(x1, rhs, p, 1);
  const bool ok2 = congruent(x2, rhs, p, 1);
  const Order o1 = ord_p(p, s.first);
  const Order o2 = ord_p(p, ExactInt(pn * s.second));
  const long bound1 = s.first_shift + ord_p(p, ExactInt(pn)).value();
  const long bound2 = s.second_shift + ord_p(p, ExactInt(pn)).value();
  std::string detail = "second " + residue_string(x2, p, 1) + (ok2 ? " holds" : " fails");
  detail += "; ord_p((pn-1)!S(.,pn-1))=" + o1.str() + (o1 >= Order(std::min(bound1, b)) ? ">=" : "<") + std::to_string(bound1);
  detail += "; ord_p((pn)!S(.,pn))=" + o2.str() + (o2 >= Order(std::min(bound2, b)) ? ">=" : "<") + std::to_string(bound2);
  return Verdict::decided("eq1.14", {{"p", p}, {"n", n}, {"m", m}, {"b", b}}, Modulus::power(p, 1),
                          residue_string(x1, p, 1), residue_string(rhs, p, 1), ok1 && ok2, detail);
}

inline void eq_1_14_hypotheses(long p, long n, long b) {
  if (!is_prime(p) || p < 3) throw hypothesis_error("eq1.14: needs an odd prime p");
  if (n < 1 || n % 2 != 0 || n % (p - 1) == 0) throw hypothesis_error("eq1.14: needs even n >= 2 with p-1 !| n");
  if (b <= 2 * floor_div(p * n - 1, p - 1)) throw hypothesis_error("eq1.14: needs b > 2 floor((pn-1)/(p-1))");
}

inline Verdict verify_eq_1_14(long p, long n, long m, long b, long row_cap = kReducedStirlingRows) {
  eq_1_14_hypotheses(p, n, b);
  if (m < 1) throw hypothesis_error("eq1.14: needs m >= 1");
  return evaluate_eq_1_14(p, n, m, b, row_cap);
}

/// The two order inequalities that follow from the Stirling congruences,
/// over a verified instance.
inline Verdict verify_orders_1_1ii(long p, long n, long m, long b, long row_cap = kReducedStirlingRows) {
  eq_1_14_hypotheses(p, n, b);
  if (m < 1) throw hypothesis_error("rem1.1ii: needs m >= 1");
  const auto s = detail::stirling_form_sides(p, n, m, b, row_cap);
  const long pn = p * n;
  const long opn = ord_p(p, ExactInt(pn)).value();
  // Residues are mod p^b and both bounds are below b, so b caps harmlessly.
  const Order o1 = ord_p(p, s.first);
  const Order o2 = ord_p(p, ExactInt(pn * s.second % prime_power(p, b)));
  const long bound1 = s.first_shift + opn;
  const long bound2 = s.second_shift + opn;
  return Verdict::decided("rem1.1ii", {{"p", p}, {"n", n}, {"m", m}, {"b", b}}, Modulus::power(p, b),
                          o1.str() + "," + o2.str(), std::to_string(bound1) + "," + std::to_string(bound2),
                          o1 >= Order(bound1) && o2 >= Order(bound2), "ord_p of (pn-1)!S(.,pn-1) and (pn)!S(.,pn)");
}

namespace detail {

inline Verdict gl_claim(const Params& q) {
  return verify_gl_relation(q.get("p"), q.get("n"), q.get("m"), q.get("b"), q.get_or("row_cap", kReducedStirlingRows));
}

inline Verdict eq_1_14_claim(const Params& q) {
  return verify_eq_1_14(q.get("p"), q.get("n"), q.get("m"), q.get("b"), q.get_or("row_cap", kReducedStirlingRows));
}

inline Verdict rem_1_1_ii_claim(const Params& q) {
  return verify_orders_1_1ii(q.get("p"), q.get("n"), q.get("m"), q.get("b"), q.get_or("row_cap", kReducedStirlingRows));
}

}  // namespace detail

inline const std::map<std::string, ClaimFn>& stirling_claims() {
  static const std::map<std::string, ClaimFn> table = {
      {"gl", detail::gl_claim},
      {"eq1.14", detail::eq_1_14_claim},
      {"rem1.1ii", detail::rem_1_1_ii_claim},
  };
  return table;
}

}  // namespace fleckq
