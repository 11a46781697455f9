#include <random>

#include <gtest/gtest.h>

#include "mono/primes.hpp"
#include "mono/rational.hpp"
#include "oracle.hpp"

using mono::Ordering;
using mono::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

TEST(Rational, ReducesOnConstruction) {
  EXPECT_EQ(Rational(6, 4).str(), "3/2");
  EXPECT_EQ(Rational(5, 1).str(), "5");
  EXPECT_EQ(Rational(81, 7776), q("1/96"));
}

TEST(Rational, ParseRejectsBadInput) {
  EXPECT_THROW(q("0/1"), mono::Error);
  EXPECT_THROW(q("3/0"), mono::Error);
  EXPECT_THROW(q("-1"), mono::Error);
  EXPECT_THROW(q("1.5"), mono::Error);
  EXPECT_THROW(q(""), mono::Error);
  try {
    q("0/1");
  } catch (const mono::Error& e) {
    EXPECT_EQ(e.kind(), mono::ErrorKind::Domain);
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q("1/3") + q("1/6"), q("1/2"));
  EXPECT_EQ(q("2/3") * q("9/4"), q("3/2"));
  EXPECT_LT(q("1/3"), q("1/2"));
  EXPECT_EQ(Rational::pow2(-3), q("1/8"));
}

TEST(AExponent, Examples) {
  EXPECT_EQ(mono::a_exponent(q("1")), 0);
  EXPECT_EQ(mono::a_exponent(q("5/2")), 1);
  EXPECT_EQ(mono::a_exponent(q("1/3")), -2);
}

TEST(AExponent, MatchesStepping) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const mpz_class n = static_cast<unsigned long>(rng() % 100000 + 1);
    const mpz_class d = static_cast<unsigned long>(rng() % 100000 + 1);
    const Rational x(n, d);
    EXPECT_EQ(mono::a_exponent(x), oracle::a_of(x.value())) << x.str();
  }
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(mono::is_power_of_two(q("8")));
  EXPECT_TRUE(mono::is_power_of_two(q("1/16")));
  EXPECT_FALSE(mono::is_power_of_two(q("3/2")));
  EXPECT_TRUE(mono::in_C3(q("5")));
  EXPECT_TRUE(mono::in_C3(q("5/8")));
  EXPECT_FALSE(mono::in_C3(q("7")));
  EXPECT_TRUE(mono::in_C4(q("3")));
  EXPECT_TRUE(mono::in_C4(q("6")));
  EXPECT_TRUE(mono::in_C3(q("6")));
  EXPECT_FALSE(mono::in_C4(q("5")));
}

TEST(Predicates, MatchSetDefinitions) {
  for (long n = 1; n <= 300; ++n) {
    for (long k = 0; k <= 6; ++k) {
      const Rational x(mpz_class(n), mpz_class(1) << static_cast<mp_bitcnt_t>(k));
      const mpq_class v = x.value();
      EXPECT_EQ(mono::is_power_of_two(x), oracle::is_pow2(v)) << x.str();
      EXPECT_EQ(mono::in_C3(x), oracle::in_c3(v)) << x.str();
      EXPECT_EQ(mono::in_C4(x), oracle::in_c4(v)) << x.str();
      EXPECT_TRUE(mono::is_dyadic(x));
    }
  }
  EXPECT_FALSE(mono::in_C3(q("5/3")));
  EXPECT_FALSE(mono::in_C4(q("2/3")));
}

TEST(Comparisons, Examples) {
  EXPECT_EQ(mono::cmp_pow2_half(q("5/2"), 1), Ordering::Below);
  EXPECT_EQ(mono::cmp_pow2_half(q("3"), 1), Ordering::Above);
  EXPECT_EQ(mono::cmp_pow2_half(q("11/4"), 1), Ordering::Below);
  EXPECT_EQ(mono::cmp_c5_boundary(q("11/4"), 1, 0), Ordering::Below);
  EXPECT_EQ(mono::cmp_c5_boundary(q("5/6"), -1, -3), Ordering::Below);
  EXPECT_EQ(mono::cmp_c5_boundary(q("29/10"), 1, 0), Ordering::Above);
}

TEST(Primes, Examples) {
  EXPECT_EQ(mono::nth_prime(1), 2u);
  EXPECT_EQ(mono::nth_prime(2), 3u);
  EXPECT_EQ(mono::nth_prime(3), 5u);
  EXPECT_EQ(mono::primorial(1), 2);
  EXPECT_EQ(mono::primorial(2), 6);
  EXPECT_EQ(mono::primorial(3), 30);
  for (std::size_t n = 1; n <= mono::kDefaultPrimeCount; ++n) EXPECT_EQ(mono::nth_prime(n), oracle::prime(n));
}

TEST(Primes, TableGrowsOnDemand) {
  mono::reserve_primes(5000);
  EXPECT_GE(mono::prime_table_size(), 5000u);
  EXPECT_EQ(mono::nth_prime(5000), oracle::prime(5000));
}

TEST(Primes, MinimalBase) {
  mono::reserve_primes(100);
  EXPECT_EQ(mono::minimal_base_index(q("1/2")), 1u);
  EXPECT_EQ(mono::minimal_base_index(q("5/6")), 2u);
  EXPECT_EQ(mono::minimal_base_index(q("1/96")), 2u);
  for (long d = 2; d <= 400; ++d) {
    const Rational x(mpz_class(1), mpz_class(d));
    EXPECT_EQ(mono::minimal_base_index(x), oracle::minimal_base(x.value())) << d;
  }
  EXPECT_THROW(mono::minimal_base_index(q("1/1000003")), mono::Error);
}

TEST(FloorFrac, Examples) {
  auto [f1, r1] = mono::floor_frac(q("5/2"));
  EXPECT_EQ(f1, 2);
  EXPECT_EQ(r1, mpq_class(1, 2));
  auto [f2, r2] = mono::floor_frac(q("7"));
  EXPECT_EQ(f2, 7);
  EXPECT_EQ(r2, 0);
  auto [f3, r3] = mono::floor_frac(q("14305/96"));
  EXPECT_EQ(f3, 149);
  EXPECT_EQ(r3, mpq_class(1, 96));
}

TEST(Exponent, OverflowIsReported) {
  EXPECT_THROW(mono::checked_exponent(mono::kExponentLimit), mono::Error);
  EXPECT_NO_THROW(mono::checked_exponent(mono::kExponentLimit - 1));
}

}  // namespace
