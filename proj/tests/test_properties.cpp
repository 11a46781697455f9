#include <gtest/gtest.h>

#include "mono/properties.hpp"

namespace {

TEST(Properties, SuitePasses) {
  const auto report = mono::property_suite(1, 2000);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.laws.size(), mono::property_law_names().size());
  for (const auto& law : report.laws) {
    EXPECT_TRUE(law.passed) << law.name << ": " << law.counterexample;
    EXPECT_EQ(law.samples, 2000u);
  }
}

TEST(Properties, BrokenEndIsCaught) {
  auto ops = mono::DigitOps::standard();
  const auto e2 = ops.e2;
  ops.e2 = [e2](const mpz_class& m) { return m % 3 == 0 ? e2(m) + 1 : e2(m); };
  const auto law = mono::run_law("binary_product_end", 7, 2000, ops);
  EXPECT_FALSE(law.passed);
  EXPECT_FALSE(law.counterexample.empty());
}

TEST(Properties, BrokenFracStartIsCaught) {
  auto ops = mono::DigitOps::standard();
  const auto s = ops.s_frac;
  ops.s_frac = [s](const mono::Rational& x, std::size_t n) { return s(x, n) - 1; };
  EXPECT_FALSE(mono::run_law("primorial_product_start", 7, 2000, ops).passed);
}

TEST(Properties, Deterministic) {
  const auto a = mono::property_suite(2, 10);
  const auto b = mono::property_suite(2, 10);
  ASSERT_EQ(a.laws.size(), b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    EXPECT_EQ(a.laws[i].passed, b.laws[i].passed);
    EXPECT_EQ(a.laws[i].counterexample, b.laws[i].counterexample);
  }
}

TEST(Properties, UnknownLaw) { EXPECT_THROW(mono::run_law("nope", 1, 1), mono::Error); }

}  // namespace
