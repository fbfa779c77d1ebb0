#include <gtest/gtest.h>

#include "fleckq/fleck.hpp"

using namespace fleckq;

namespace {

Verdict claim(const std::string& id, const Params& q) { return verify_fleck_claim(id, q); }

// Runs a claim, counting hypothesis violations separately.
struct Tally {
  int pass = 0, fail = 0, skipped = 0;
  void run(const std::string& id, const Params& q) {
    try {
      const Verdict v = claim(id, q);
      if (v.pass()) {
        ++pass;
      } else if (v.status == Status::Skipped) {
        ++skipped;
      } else {
        ++fail;
        ADD_FAILURE() << id << " failed: " << v.lhs << " vs " << v.rhs << " " << v.detail;
      }
    } catch (const hypothesis_error&) {
      ++skipped;
    }
  }
};

}  // namespace

TEST(Cp, Values) {
  for (long p : {2L, 3L, 5L}) {
    EXPECT_EQ(c_p(p, 0, 0), 1);
    EXPECT_EQ(c_p(p, 0, 1), 0);
    EXPECT_EQ(c_p(p, 0, p), 1);
    if (p > 2) EXPECT_EQ(c_p(p, 2 * p, 0), 2 - binomial(2 * p, p));
  }
  EXPECT_EQ(c_p(2, 4, 0), 8);
  EXPECT_EQ(c_p(3, 4, 0), -3);
  EXPECT_THROW(c_p(3, -1, 0), std::invalid_argument);
}

TEST(Cp, RowRecurrence) {
  for (long p : {2L, 3L, 5L, 7L})
    for (long n = 1; n <= 120; ++n)
      for (long r = -p; r < p; ++r) ASSERT_EQ(c_p(p, n, r), c_p(p, n - 1, r) - c_p(p, n - 1, r - 1)) << p << " " << n;
}

TEST(Cp, ResidueSum) {
  for (long p : {2L, 3L, 5L, 7L})
    for (long n = 0; n <= 80; ++n) {
      ExactInt s = 0;
      for (long r = 0; r < p; ++r) s += c_p(p, n, r);
      ASSERT_EQ(s, n == 0 ? 1 : 0);
    }
}

TEST(FleckQuotient, Values) {
  for (long p : {2L, 3L, 5L, 7L}) {
    EXPECT_EQ(fleck_quotient(p, 0, 0), 1 - p);
    EXPECT_EQ(fleck_quotient(p, 0, 1), 1);
  }
  EXPECT_EQ(fleck_quotient(3, 3, 0), 0);
  EXPECT_EQ(fleck_quotient(5, 10, 0), -10);
  EXPECT_EQ(fleck_quotient(5, 10, 1), 8);
  EXPECT_THROW(fleck_quotient(4, 3, 0), std::invalid_argument);
}

TEST(FleckQuotient, IndivisibleSumIsIntegrityError) {
  EXPECT_THROW(detail::normalize_by_p(ExactInt(5), 3, 1, "test"), integrity_error);
  EXPECT_EQ(detail::normalize_by_p(ExactInt(5), 3, -2, "test"), 45);
}

TEST(FleckQuotient, Integrality) {
  for (long p : {2L, 3L, 5L, 7L, 11L})
    for (long n = 0; n <= 200; ++n)
      for (long r = 0; r < p; ++r) ASSERT_TRUE(claim("fleck-int", {{"p", p}, {"n", n}, {"r", r}}).pass());
}

TEST(ExtFleckQuotient, Values) {
  EXPECT_EQ(ext_fleck_quotient(5, 1, 0, 9, 4), 5);
  EXPECT_EQ(ext_fleck_quotient(3, 1, 1, 2, 0), 0);
  // floor((0 - 0 - 1)/2) = -1: the prefactor multiplies by -3.
  EXPECT_EQ(ext_fleck_exponent(3, 1, 0, 0), -1);
  EXPECT_EQ(ext_fleck_quotient(3, 1, 0, 0, 0), -3);
  EXPECT_EQ(ext_fleck_quotient(5, 2, 1, 3, 0), 0);
}

TEST(ExtFleckQuotient, ReducesToFleckQuotient) {
  for (long p : {2L, 3L, 5L, 7L})
    for (long n = 1; n <= 60; ++n)
      for (long r = -2; r < p; ++r) ASSERT_EQ(ext_fleck_quotient(p, 1, 0, n, r), fleck_quotient(p, n, r));
}

TEST(ExtFleckQuotient, WanIntegrality) {
  for (long p : {2L, 3L, 5L})
    for (long a = 1; a <= 3; ++a) {
      const long q = prime_power(p, a).get_si();
      if (q > 27) continue;
      for (long l = 0; l <= 3; ++l)
        for (long n = 0; n <= 150; n += 7)
          for (long r = 0; r < q; ++r) ASSERT_TRUE(claim("wan-int", {{"p", p}, {"a", a}, {"l", l}, {"n", n}, {"r", r}}).pass());
    }
}

TEST(DiffQuotient, Values) {
  EXPECT_EQ(diff_quotient(3, 1, 7, 0), 0);
  EXPECT_EQ(diff_quotient(5, 2, 22, 0), make_rat(-29, 4));
  EXPECT_TRUE(congruent(diff_quotient(5, 2, 22, 0), make_rat(1, 24), 5, 1));
  EXPECT_THROW(diff_quotient(5, 2, 2, 0), std::invalid_argument);
  EXPECT_THROW(diff_quotient(5, 2, 10, 0), std::invalid_argument);
}

TEST(DiffQuotient, NonnegativeOrder) {
  for (long p : {3L, 5L, 7L})
    for (long n = 0; n <= 30; ++n)
      for (long r = 0; r < p; ++r) ASSERT_GE(ord_p(p, diff_quotient(p, n, n + p * (p - 1), r)), Order(0));
}

TEST(FleckClaims, Anchors) {
  const Verdict t12 = claim("thm1.2", {{"p", 5}, {"n", 2}});
  EXPECT_TRUE(t12.pass());
  EXPECT_EQ(t12.lhs, "4");
  EXPECT_EQ(t12.rhs, "4");
  const Verdict c115 = claim("cor1.4-1.15", {{"p", 5}});
  EXPECT_TRUE(c115.pass());
  EXPECT_EQ(c115.lhs, "125");
  const Verdict t13 = claim("thm1.3", {{"p", 5}, {"n", 2}, {"r", 1}, {"b", 1}});
  EXPECT_TRUE(t13.pass());
  EXPECT_EQ(t13.lhs, "5");
  EXPECT_EQ(t13.rhs, "5");
  const Verdict t11 = claim("thm1.1", {{"p", 5}, {"n", 2}, {"k", 1}, {"r", 0}});
  EXPECT_TRUE(t11.pass());
  EXPECT_EQ(t11.lhs, "4");
  const Verdict t14 = claim("thm1.4", {{"p", 5}, {"a", 1}, {"l", 0}, {"m", 0}, {"n", 2}, {"d", 1}});
  EXPECT_TRUE(t14.pass());
  EXPECT_EQ(t14.lhs, "0");
}

TEST(FleckClaims, HypothesesAreEnforced) {
  EXPECT_THROW(claim("thm1.2", {{"p", 5}, {"n", 4}}), hypothesis_error);
  EXPECT_THROW(claim("thm1.2", {{"p", 5}, {"n", 3}}), hypothesis_error);
  EXPECT_THROW(claim("thm1.3", {{"p", 5}, {"n", 2}, {"r", 1}, {"b", 2}}), hypothesis_error);
  EXPECT_THROW(claim("thm1.3", {{"p", 5}, {"n", 2}, {"r", 5}, {"b", 1}}), hypothesis_error);
  EXPECT_THROW(claim("eq1.6", {{"p", 7}, {"n", 3}}), hypothesis_error);
  EXPECT_THROW(claim("thm5.1", {{"p", 5}, {"a", 2}, {"l", 0}, {"n", 1}, {"r", 0}, {"s", 1}, {"t", 0}}), hypothesis_error);
  EXPECT_THROW(claim("eq1.1", {{"p", 6}, {"r", 1}}), std::invalid_argument);
  EXPECT_THROW(claim("thm9.9", {{"p", 5}}), std::invalid_argument);
}

TEST(FleckClaims, SecondStirlingBinomialAtFiveIsReportedNotAsserted) {
  const Verdict v = claim("cor1.4-1.16", {{"p", 5}});
  EXPECT_EQ(v.status, Status::Skipped);
  EXPECT_NE(v.detail.find("holds"), std::string::npos);
  for (long p : {7L, 11L, 13L}) EXPECT_TRUE(claim("cor1.4-1.16", {{"p", p}}).pass()) << p;
}

TEST(FleckClaims, CubicBinomialCongruence) {
  Tally t;
  for (long p : {5L, 7L, 11L, 13L})
    for (long r = 1; r < p; ++r) t.run("eq1.1", {{"p", p}, {"r", r}});
  EXPECT_EQ(t.pass, 4 + 6 + 10 + 12);
}

TEST(FleckClaims, HigherBernoulliModP) {
  Tally t;
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (long n = 1; n <= 120; ++n)
      for (long r = 0; r < p; ++r) t.run("eq1.4", {{"p", p}, {"n", n}, {"r", r}});
  EXPECT_EQ(t.fail, 0);
  EXPECT_EQ(t.pass, 120 * (3 + 5 + 7 + 11 + 13));
}

TEST(FleckClaims, OrderAtZeroResidue) {
  Tally t;
  for (long p : {3L, 5L, 7L, 11L})
    for (long n = 1; n <= 120; ++n) t.run("lem1.1", {{"p", p}, {"n", n}});
  EXPECT_EQ(t.fail, 0);
  EXPECT_GT(t.pass, 300);
}

TEST(FleckClaims, NonrootCount) {
  Tally t;
  for (long p : {5L, 7L, 11L})
    for (long n = 1; n <= 40; ++n) t.run("cor1.1", {{"p", p}, {"n", n}});
  EXPECT_EQ(t.fail, 0);
  EXPECT_GT(t.pass, 50);
}

TEST(FleckClaims, Periodicity) {
  Tally t;
  for (long p : {2L, 3L, 5L, 7L})
    for (long b : {2L, 3L}) {
      if (p == 7 && b == 3) continue;
      for (long n = 0; n <= 3 * phi_prime_power(p, b); n += p - 1)
        for (long r = 0; r < p; ++r) t.run("cor1.2", {{"p", p}, {"n", n}, {"r", r}, {"b", b}});
    }
  EXPECT_EQ(t.fail, 0);
}

TEST(FleckClaims, MikiDifferenceQuotient) {
  Tally t;
  for (long p : {3L, 5L, 7L})
    for (long n = 0; n < 12; ++n)
      for (long k : {1L, 2L})
        for (long r = 0; r < p; ++r) t.run("cor1.3", {{"p", p}, {"n", n}, {"k", k}, {"r", r}});
  EXPECT_EQ(t.fail, 0);
}

TEST(FleckClaims, SmallNBinomialSums) {
  Tally t;
  for (long p : {2L, 3L, 5L, 7L, 11L})
    for (long n = 2; n <= p; ++n) t.run("eq1.5", {{"p", p}, {"n", n}});
  for (long p : {5L, 7L, 11L, 13L})
    for (long n = 2; n < p - 1; n += 2) t.run("eq1.6", {{"p", p}, {"n", n}});
  EXPECT_EQ(t.fail, 0);
  EXPECT_EQ(t.skipped, 0);
}

TEST(FleckClaims, WilsonForms) {
  Tally t;
  for (long p : {3L, 5L, 7L})
    for (long n = 1; n <= 18; ++n)
      for (long r = 1; r < p; ++r) {
        t.run("cor1.5", {{"p", p}, {"n", n}, {"r", r}});
        t.run("cor1.6", {{"p", p}, {"n", n}, {"r", r}});
      }
  EXPECT_EQ(t.fail, 0);
  EXPECT_GT(t.pass, 300);
}

TEST(FleckClaims, ConvolutionIdentity) {
  Tally t;
  for (long p : {3L, 5L, 7L})
    for (long n = 0; n <= 12; ++n)
      for (long s = 0; s <= star_pair(p, n).n_costar; ++s)
        for (long r = -3; r < p; ++r) t.run("rem1.4", {{"p", p}, {"n", n}, {"r", r}, {"s", s}});
  EXPECT_EQ(t.fail, 0);
  EXPECT_EQ(t.skipped, 0);
}

TEST(FleckClaims, KummerAndOddVanishing) {
  Tally t;
  for (long p : {3L, 5L, 7L})
    for (long n = 1; n <= 30; ++n) {
      for (long k : {1L, 2L}) t.run("rem1.1-kummer", {{"p", p}, {"n", n}, {"k", k}});
      if (n % 2 == 1) {
        const Verdict v = claim("rem1.1i", {{"p", p}, {"n", n}});
        EXPECT_TRUE(v.pass());
        EXPECT_EQ(v.lhs, "0");
      }
    }
  EXPECT_EQ(t.fail, 0);
}

TEST(FleckClaims, DigitBlockSums) {
  Tally t;
  for (long p : {3L, 5L, 7L})
    for (long a : {1L, 2L, 3L})
      for (long m = 0; m < p; ++m)
        for (long l = 0; l < 3; ++l)
          for (long j = 2; j <= p; ++j) {
            const long dmax = std::max(prime_power(p, a).get_si() / (p * p), 1L);
            for (long d = 1; d <= dmax; ++d) t.run("thm1.4", {{"p", p}, {"a", a}, {"l", l}, {"m", m}, {"n", l + m + j}, {"d", d}});
          }
  EXPECT_EQ(t.fail, 0);
  EXPECT_EQ(t.skipped, 0);
}

TEST(FleckClaims, ExtendedQuotientLemmas) {
  Tally t;
  for (long p : {3L, 5L})
    for (long a : {1L, 2L})
      for (long l = 0; l < 3; ++l)
        for (long n = 0; n < 13; ++n)
          for (long r = 0; r < p; ++r)
            for (long s = 0; s < prime_power(p, a - 1); ++s)
              for (long u = 0; u < prime_power(p, a - 1); ++u) {
                const Params q{{"p", p}, {"a", a}, {"l", l}, {"n", n}, {"r", r}, {"s", s}, {"t", u}};
                t.run("thm5.1", q);
                t.run("lem5.4", q);
              }
  for (long p : {2L, 3L, 5L})
    for (long l = 0; l < 4; ++l)
      for (long n = p + 1; n < 30; ++n)
        for (long r = -2; r < p; ++r) {
          t.run("lem5.2", {{"p", p}, {"l", l}, {"n", n}, {"r", r}});
          t.run("lem5.3", {{"p", p}, {"l", l}, {"n", n}, {"r", r}});
        }
  EXPECT_EQ(t.fail, 0);
  EXPECT_GT(t.pass, 10000);
}

TEST(FleckClaims, DifferenceTransform) {
  for (long m : {2L, 3L})
    for (long n = 1; n <= 10; ++n)
      for (long r = -2; r <= 2; ++r)
        for (long l = 0; l <= 3; ++l) ASSERT_TRUE(claim("lem5.1", {{"m", m}, {"n", n}, {"r", r}, {"l", l}}).pass());
}
