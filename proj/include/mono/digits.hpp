#pragma once

// Digit-position machinery: binary ends/starts/gaps of naturals, base-P_n
// (primorial) expansions of rationals, and the exponent functions b, c,
// epsilon and r.

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "mono/rational.hpp"

namespace mono {

/// Binary shape of a natural number m >= 1.
struct BinaryProfile {
  Exponent end = 0;                 // position of the rightmost 1 (e2)
  Exponent start = 0;               // position of the leftmost 1 (s2)
  std::optional<Exponent> gap;      // start minus position of the second 1
  int next_digit = 0;               // bit at position end + 1
  bool power_of_two = false;

  friend bool operator==(const BinaryProfile&, const BinaryProfile&) = default;
};

BinaryProfile binary_profile(const mpz_class& m);

/// e2(m), the position of the last binary digit of m >= 1.
Exponent e2(const mpz_class& m);
/// s2(m), the position of the first binary digit of m >= 1.
Exponent s2(const mpz_class& m);

/// Sparse base-P_n expansion: only nonzero digits are stored.
struct DigitExpansion {
  std::size_t base_index = 1;
  std::map<Exponent, mpz_class> digits;

  Exponent leading() const;   // position of the leftmost nonzero digit
  Exponent trailing() const;  // position of the rightmost nonzero digit
  Rational evaluate() const;

  /// Positional string in base P_n, digits separated by ':' when the base
  /// exceeds 10, e.g. "405.00213" for base 6.
  std::string positional() const;
};

/// Throws UnsupportedPrime when x has no terminating base-P_n expansion.
DigitExpansion expand(const Rational& x, std::size_t n);

/// b(x) = a(x - 2^a(x)); domain error on powers of two.
Exponent b_exponent(const Rational& x);

/// The c with 2^(a+1) - 2^(c+1) <= x < 2^(a+1) - 2^c; domain error on powers
/// of two.
Exponent c_exponent(const Rational& x);

/// The epsilon with 1 - 2^eps <= f < 1 - 2^(eps-1), for 0 < f < 1.
Exponent epsilon_exponent(const mpq_class& f);

/// (x - 2^a) / 2^a, strictly inside (0, 1); domain error on powers of two.
Rational r_ratio(const Rational& x);

/// Leading digit position of x in base P_n, for 0 < x < 1 terminating there.
Exponent s_frac(const Rational& x, std::size_t n);

/// Trailing digit position of x in base P_n: minus the smallest u >= 1 with
/// x * P_n^u integral.
Exponent e_frac(const Rational& x, std::size_t n);

/// P_n-adic valuation of m >= 1 (trailing digit position in base P_n).
Exponent e_int(const mpz_class& m, std::size_t n);

/// g(a, b): 0 when e2(b) > s2(a) (supports right-to-left disjoint), else 1.
int right_left_disjoint(const mpz_class& a, const mpz_class& b);

}  // namespace mono
