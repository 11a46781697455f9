#include <random>

#include <gtest/gtest.h>

#include "mono/colourings.hpp"
#include "mono/constructor.hpp"
#include "mono/primes.hpp"
#include "oracle.hpp"
#include "samplers.hpp"

using mono::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

TEST(ReciprocalPrimes, Examples) {
  EXPECT_EQ(mono::reciprocal_prime_indices(1), std::vector<std::size_t>{2});
  EXPECT_THROW(mono::reciprocal_prime_indices(0), mono::Error);
  for (std::size_t count : {2u, 10u, 400u}) {
    const auto idx = mono::reciprocal_prime_indices(count);
    ASSERT_EQ(idx.size(), count);
    mpq_class sum = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i > 0) {
        EXPECT_EQ(idx[i], idx[i - 1] + (i == 1 ? idx[1] - idx[0] : 1));
        EXPECT_GT(oracle::prime(idx[i]), 6 * (count - 1));
      }
      sum += mpq_class(1, static_cast<unsigned long>(oracle::prime(idx[i])));
    }
    EXPECT_LT(sum, mpq_class(1, 2));
  }
}

TEST(Openness, Examples) {
  const auto r = mono::openness_radius(q("11/4"));
  EXPECT_GT(sgn(r.radius.value()), 0);
  const Rational top = q("11/4") + r.radius;
  EXPECT_LE(top * top, Rational(8));
  EXPECT_EQ(r.key, "nu:t:0,1,2,1,1");
  EXPECT_THROW(mono::openness_radius(q("8")), mono::Error);
  EXPECT_LE(mono::openness_radius(q("5/6")).radius, q("1/24"));
}

TEST(Openness, BelowNextBoundary) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 400) {
    const Rational x = samplers::rational(rng);
    const auto v = mono::nu(x);
    if (v.special) continue;
    ++checked;
    const auto r = mono::openness_radius(x);
    ASSERT_GT(sgn(r.radius.value()), 0) << x.str();
    const mpq_class top = (x + r.radius).value();
    const auto b = oracle::next_boundary(x.value());
    EXPECT_TRUE(b.surd ? top * top <= b.square : top <= b.value) << x.str();
    const std::string key = mono::colour_key(v);
    for (int k = 1; k <= 10; ++k) {
      const Rational y = x + r.radius * Rational(mpz_class(k), mpz_class(11));
      EXPECT_EQ(mono::colour_key(oracle::nu(y.value())), key) << x.str() << " " << y.str();
    }
  }
}

TEST(MinimalDigitFact, Examples) {
  EXPECT_TRUE(mono::minimal_digit_fact(q("1/3")));
  EXPECT_FALSE(mono::minimal_digit_fact(q("1/96")));
  EXPECT_TRUE(mono::minimal_digit_fact(q("5/6")));
  EXPECT_THROW(mono::minimal_digit_fact(q("3/2")), mono::Error);
}

void expect_sum_closed(std::size_t m) {
  const auto r = mono::extend_sum_closed(m);
  ASSERT_TRUE(r.found) << m;
  ASSERT_EQ(r.system.terms.size(), m);
  EXPECT_TRUE(r.certificate.monochromatic);
  EXPECT_EQ(r.certificate.combinations.size(), 2 * ((1u << m) - 1));
  EXPECT_TRUE(mono::validate(r.certificate).ok);
  const auto recheck = mono::check(mono::ColouringId::Mu, r.system.terms, mono::CombinationMode::FiniteFSFP);
  EXPECT_TRUE(recheck.monochromatic);
  for (const auto& c : recheck.combinations) {
    EXPECT_TRUE(c.value < Rational(1));
    const auto d = oracle::digits(c.value.value(), oracle::minimal_base(c.value.value()));
    EXPECT_EQ(d.rbegin()->first, -1) << c.value.str();
    EXPECT_EQ(d.begin()->first, -1) << c.value.str();
    EXPECT_TRUE(mono::minimal_digit_fact(c.value));
  }
  // Each term is a product of reciprocal primes over its block.
  const auto& sys = r.system;
  for (std::size_t n = 0; n < m; ++n) {
    mpq_class y = 1;
    for (std::size_t t : sys.blocks[n]) y /= static_cast<unsigned long>(oracle::prime(sys.prime_indices[t - 1]));
    EXPECT_EQ(sys.terms[n].value(), y);
    if (n > 0) EXPECT_LT(sys.blocks[n - 1].back(), sys.blocks[n].front());
  }
}

TEST(SumClosed, OneTerm) {
  const auto r = mono::extend_sum_closed(1);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.system.terms, std::vector<Rational>{q("1/3")});
}

TEST(SumClosed, TwoTerms) { expect_sum_closed(2); }
TEST(SumClosed, ThreeTerms) { expect_sum_closed(3); }

TEST(ProductSubsystem, ProductsShareNuClass) {
  const auto r = mono::find_product_subsystem(3);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.products.size(), 7u);
  for (const auto& p : r.products) EXPECT_EQ(mono::colour_key(oracle::nu(p.value.value())), r.nu_key);
}

TEST(Constructor, IndependentOfWorkerCount) {
  mono::ConstructOptions o;
  o.workers = 1;
  const auto one = mono::extend_sum_closed(3, o);
  o.workers = 4;
  const auto four = mono::extend_sum_closed(3, o);
  EXPECT_EQ(one.system.terms, four.system.terms);
  EXPECT_EQ(one.nodes, four.nodes);
}

TEST(Constructor, BudgetExhaustion) {
  mono::ConstructOptions o;
  o.budget = 10;
  const auto r = mono::extend_sum_closed(3, o);
  EXPECT_FALSE(r.found);
  EXPECT_LE(r.best_depth, 3u);
}

}  // namespace
