#include <random>

#include <gtest/gtest.h>

#include "fleckq/cyclotomic.hpp"

using namespace fleckq;

namespace {

std::vector<long> coeffs(const CycloElem& x) {
  std::vector<long> v;
  for (const auto& c : x.coeffs()) v.push_back(c.get_si());
  return v;
}

CycloElem random_elem(std::mt19937_64& rng, long p, long m) {
  std::uniform_int_distribution<long> d(0, prime_power(p, m).get_si() - 1);
  CycloElem x(p, m);
  for (long i = 0; i < p - 1; ++i) x = x + CycloElem::constant(p, m, ExactInt(d(rng))) * zeta_power(p, i, m);
  return x;
}

}  // namespace

TEST(ZetaPower, Values) {
  EXPECT_EQ(coeffs(zeta_power(3, 0, 2)), (std::vector<long>{1, 0}));
  EXPECT_EQ(coeffs(zeta_power(3, 2, 2)), (std::vector<long>{8, 8}));
  EXPECT_EQ(coeffs(zeta_power(5, 7, 1)), (std::vector<long>{0, 0, 1, 0}));
}

TEST(ZetaPower, MinimalPolynomial) {
  for (long p : {3L, 5L, 7L})
    for (long m = 1; m <= 3; ++m) {
      CycloElem s(p, m);
      for (long a = 0; a < p; ++a) s = s + zeta_power(p, a, m);
      ASSERT_TRUE(s.is_zero());
      ASSERT_EQ(zeta_power(p, 1, m).pow(static_cast<unsigned long>(p)), CycloElem::constant(p, m, ExactInt(1)).with_precision(m));
    }
}

TEST(PiElement, Values) {
  EXPECT_EQ(coeffs(pi_element(2, 3)), (std::vector<long>{6}));
  EXPECT_EQ(coeffs(pi_element(3, 2)), (std::vector<long>{8, 7}));
  EXPECT_EQ(pi_element(3, 2).pow(2).coeffs()[0], 6);
  EXPECT_EQ(pi_element(3, 2).pow(2).coeffs()[1], 0);
}

TEST(Valuation, Values) {
  EXPECT_EQ(zeta_valuation(CycloElem::constant(5, 3, ExactInt(1)) - zeta_power(5, 1, 3)).value, 1);
  EXPECT_EQ(zeta_valuation(CycloElem::constant(5, 3, ExactInt(5))).value, 4);
  EXPECT_EQ(zeta_valuation(pi_element(3, 4)).value, 1);
  const Valuation zero = zeta_valuation(CycloElem(5, 3));
  EXPECT_TRUE(zero.at_least);
  EXPECT_EQ(zero.value, 12);
}

TEST(RingLaws, RandomTriples) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const CycloElem x = random_elem(rng, 5, 3), y = random_elem(rng, 5, 3), z = random_elem(rng, 5, 3);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(Valuation, MultiplicativeBelowCap) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    const CycloElem x = random_elem(rng, 5, 4), y = random_elem(rng, 5, 4);
    const Valuation vx = zeta_valuation(x), vy = zeta_valuation(y);
    if (vx.at_least || vy.at_least) continue;
    const Valuation vxy = zeta_valuation(x * y);
    if (vx.value + vy.value >= 16) continue;
    ASSERT_FALSE(vxy.at_least);
    ASSERT_EQ(vxy.value, vx.value + vy.value);
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Pi0, Postconditions) {
  const CycloElem x = pi0_element(3, 4);
  EXPECT_TRUE(zeta_valuation(x.pow(2) + CycloElem::constant(3, 4, ExactInt(3))).reaches(6));
  EXPECT_GE(zeta_valuation(x - (zeta_power(3, 1, 4) - CycloElem::constant(3, 4, ExactInt(1)))).value, 2);
  EXPECT_GE(zeta_valuation(pi0_element(5, 4) - pi_element(5, 4)).value, 2);
  EXPECT_THROW(pi0_element(3, 1), std::invalid_argument);
}

TEST(GaussSum, Values) {
  for (long p : {3L, 5L, 7L}) EXPECT_EQ(gauss_sum(p, 0, 3), CycloElem::constant(p, 3, ExactInt(-1)));
  const CycloElem g = gauss_sum(3, 1, 3);
  EXPECT_EQ(g, zeta_power(3, 1, 3) - zeta_power(3, 2, 3));
  EXPECT_EQ(g.pow(2), CycloElem::constant(3, 3, ExactInt(-3)));
}

TEST(GaussSum, ValuationEqualsS) {
  for (long p : {3L, 5L, 7L})
    for (long s = 1; s <= p - 2; ++s) EXPECT_EQ(zeta_valuation(gauss_sum(p, s, 4)).value, s) << p << " " << s;
}

TEST(CycloClaims, Examples) {
  EXPECT_TRUE(verify_cyclo_claim("lem3.1", {{"p", 3}, {"n", 1}, {"r", 0}, {"M", 3}}).pass());
  EXPECT_TRUE(verify_cyclo_claim("thm2.1-i", {{"p", 3}, {"M", 2}}).pass());
  EXPECT_TRUE(verify_cyclo_claim("gross-koblitz", {{"p", 3}, {"s", 1}, {"M", 4}}).pass());
  EXPECT_THROW(verify_cyclo_claim("nope", {{"p", 3}}), std::invalid_argument);
}

TEST(CycloClaims, PrecisionTooLowNamesMinimum) {
  try {
    verify_cyclo_claim("thm2.1-i", {{"p", 5}, {"M", 1}});
    FAIL() << "expected precision_error";
  } catch (const precision_error& e) {
    EXPECT_EQ(e.minimal_precision(), 2);
  }
}

TEST(CycloClaims, ExponentialOfPi) {
  for (long p : {3L, 5L, 7L})
    for (long a = 0; a < p * p; ++a) ASSERT_TRUE(verify_cyclo_claim("lem2.1", {{"p", p}, {"a", a}}).pass()) << p << " " << a;
}

TEST(CycloClaims, BernoulliExpansionOfZetaPowers) {
  for (long p : {3L, 5L, 7L})
    for (long a = 1; a < p; ++a)
      for (long n = 0; n <= 12; ++n)
        for (long m = least_residue(-n, p); m <= 2 * p; m += p)
          ASSERT_TRUE(verify_cyclo_claim("thm2.1-ii-a", {{"p", p}, {"a", a}, {"n", n}, {"m", m}}).pass())
              << p << " " << a << " " << n << " " << m;
}

TEST(CycloClaims, LiftedBernoulliExpansion) {
  for (long p : {3L, 5L})
    for (long b = 1; b <= 2; ++b)
      for (long n = 0; n <= 4; ++n)
        for (long a = 1; a < p; ++a)
          ASSERT_TRUE(verify_cyclo_claim("thm2.1-ii-b", {{"p", p}, {"a", a}, {"n", n}, {"b", b}}).pass())
              << p << " " << b << " " << n << " " << a;
}

TEST(CycloClaims, RootsOfUnityFilter) {
  for (long p : {3L, 5L, 7L})
    for (long n = 0; n <= 12; ++n)
      for (long r = 0; r < p; ++r) ASSERT_TRUE(verify_cyclo_claim("lem3.1", {{"p", p}, {"n", n}, {"r", r}}).pass());
}

TEST(CycloClaims, CpInTermsOfPi) {
  for (long p : {3L, 5L, 7L})
    for (long n = 0; n <= 20; ++n)
      for (long r = 1; r < p; ++r)
        ASSERT_TRUE(verify_cyclo_claim("lem3.2", {{"p", p}, {"n", n}, {"r", r}}).pass()) << p << " " << n << " " << r;
}

TEST(CycloClaims, GrossKoblitz) {
  for (long p : {3L, 5L, 7L})
    for (long s = 0; s <= p - 2; ++s) {
      const Verdict v = verify_cyclo_claim("gross-koblitz", {{"p", p}, {"s", s}, {"M", 6}});
      EXPECT_TRUE(v.pass()) << p << " " << s << " " << v.detail;
    }
}

TEST(CycloClaims, WilsonCongruence) {
  for (long p : {3L, 5L, 7L})
    for (long n = 1; n <= 18; ++n)
      for (long r = 1; r < p; ++r)
        for (long b = 1; Order(b) <= ord_p(p, p * n); ++b)
          ASSERT_TRUE(verify_cyclo_claim("lem4.2", {{"p", p}, {"n", n}, {"r", r}, {"b", b}}).pass())
              << p << " " << n << " " << r << " " << b;
}
