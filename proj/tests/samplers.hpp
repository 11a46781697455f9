#pragma once

// Seeded random inputs shared by the unit and acceptance tests.

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "mono/primes.hpp"
#include "mono/rational.hpp"

namespace samplers {

inline mpz_class natural(std::mt19937_64& rng, unsigned max_bits) {
  const unsigned bits = 1 + static_cast<unsigned>(rng() % max_bits);
  mpz_class m = 0;
  for (unsigned have = 0; have < bits; have += 32) {
    m <<= 32;
    m += static_cast<unsigned long>(rng() & 0xffffffffu);
  }
  m >>= static_cast<mp_bitcnt_t>((bits + 31) / 32 * 32 - bits);
  return m == 0 ? mpz_class(1) : m;
}

/// Denominator built from the first few primes so minimal bases stay small.
inline mpz_class smooth(std::mt19937_64& rng, std::size_t primes, int factors) {
  mpz_class d = 1;
  for (int k = 0; k < factors; ++k) d *= static_cast<unsigned long>(mono::nth_prime(1 + rng() % primes));
  return d;
}

/// A mix of dyadics (to reach the special classes), fractions over the first
/// few primes and fractions over the default prime table.
inline mono::Rational rational(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: {
      const mpz_class num = natural(rng, 12);
      mpz_class den = 1;
      den <<= static_cast<mp_bitcnt_t>(rng() % 12);
      return mono::Rational(num, den);
    }
    case 1: {
      mpz_class num = 1;
      num <<= static_cast<mp_bitcnt_t>(rng() % 10);
      mpz_class extra = 1;
      extra <<= static_cast<mp_bitcnt_t>(rng() % 10);
      mpz_class den = 1;
      den <<= static_cast<mp_bitcnt_t>(rng() % 10);
      mpz_class top = num + extra;
      if (rng() % 2) top = num > extra ? mpz_class(num - extra) : mpz_class(extra - num + 1);
      return mono::Rational(top, den);
    }
    case 2:
      return mono::Rational(natural(rng, 20), smooth(rng, 4, static_cast<int>(rng() % 6)));
    default:
      return mono::Rational(natural(rng, 24), smooth(rng, 64, 1 + static_cast<int>(rng() % 4)));
  }
}

/// A rational in (0, 1) with a smooth denominator.
inline mono::Rational unit_fraction(std::mt19937_64& rng) {
  while (true) {
    const mpz_class den = smooth(rng, 5, 1 + static_cast<int>(rng() % 7));
    if (den < 2) continue;
    const mpz_class num = 1 + mpz_class(static_cast<unsigned long>(rng())) % (den - 1);
    return mono::Rational(num, den);
  }
}

}  // namespace samplers
