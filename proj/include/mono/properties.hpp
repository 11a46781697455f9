#pragma once

// Seeded randomized checks of the digit laws behind the colouring proofs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mono/rational.hpp"

namespace mono {

/// The digit primitives the laws are evaluated with. Replace one to check
/// that the suite notices a broken implementation.
struct DigitOps {
  std::function<Exponent(const mpz_class&)> e2;
  std::function<Exponent(const mpz_class&)> s2;
  std::function<Exponent(const Rational&, std::size_t)> e_frac;
  std::function<Exponent(const Rational&, std::size_t)> s_frac;

  static DigitOps standard();
};

struct LawResult {
  std::string name;
  std::uint64_t samples = 0;
  bool passed = true;
  std::string counterexample;   // first failing instance
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<LawResult> laws;
  bool all_passed() const;
};

/// Law names, in report order.
const std::vector<std::string>& property_law_names();

/// Runs every law on `samples` seeded random instances.
PropertyReport property_suite(std::uint64_t seed, std::uint64_t samples,
                              const DigitOps& ops = DigitOps::standard());

/// Runs one law by name; throws Parse for unknown names.
LawResult run_law(const std::string& name, std::uint64_t seed, std::uint64_t samples,
                  const DigitOps& ops = DigitOps::standard());

}  // namespace mono
