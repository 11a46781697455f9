#pragma once

// Exact positive rationals and the algebraic predicates built on them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "mono/error.hpp"

namespace mono {

/// Digit positions and binary exponents. Magnitudes must stay below 2^62.
using Exponent = std::int64_t;

inline constexpr Exponent kExponentLimit = Exponent{1} << 62;

/// Throws ErrorKind::Overflow unless |value| < 2^62.
Exponent checked_exponent(Exponent value);

enum class Ordering { Below, Equal, Above };

const char* ordering_name(Ordering o) noexcept;

/// A positive rational in lowest terms.
class Rational {
 public:
  /// The value 1.
  Rational() : q_(1) {}

  /// Reduces num/den; both must be >= 1.
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(std::uint64_t integer);

  /// Adopts a GMP rational; throws Domain unless it is strictly positive.
  static Rational from_mpq(mpq_class q);

  /// Parses "p" or "p/q" with decimal p, q >= 1. Unreduced input is reduced.
  static Rational parse(std::string_view text);

  /// 2^k for any admissible exponent.
  static Rational pow2(Exponent k);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_integer() const { return den() == 1; }

  /// "p/q", or "p" for integers.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ + b.q_), Trusted{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ * b.q_), Trusted{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.q_ / b.q_), Trusted{});
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t hash() const noexcept;

 private:
  struct Trusted {};
  Rational(mpq_class q, Trusted) : q_(std::move(q)) {}

  mpq_class q_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

/// Exact 2^k as a GMP rational (k may be negative).
mpq_class pow2_q(Exponent k);

/// floor(log2 x): 2^a <= x < 2^(a+1).
Exponent a_exponent(const Rational& x);
Exponent a_exponent(const mpq_class& x);

/// ceil(log2 y) for y > 0.
Exponent ceil_log2(const mpq_class& y);

bool is_power_of_two(const mpz_class& m);

/// Membership in C1 = {2^k : k in Z}.
bool is_power_of_two(const Rational& x);

/// Denominator is a power of two.
bool is_dyadic(const Rational& x);

/// Membership in C3 = {2^k + 2^l : l < k}: dyadic with exactly two binary ones.
bool in_C3(const Rational& x);

/// Membership in C4 = {2^k - 2^l : l < k}: dyadic with one contiguous run of
/// binary ones (so C1 is contained in C4).
bool in_C4(const Rational& x);

/// Sign of x^2 - 2^(2k+1), i.e. x against 2^(k+1/2).
Ordering cmp_pow2_half(const Rational& x, Exponent k);

/// Sign of x^2 - (2^(2a+2) - 2^(a+c+2)), i.e. x against
/// 2^(a+1) (1 - 2^(c-a))^(1/2). Requires c < a.
Ordering cmp_c5_boundary(const Rational& x, Exponent a, Exponent c);

/// (floor(x), frac(x)); the fractional part is an mpq in [0, 1).
std::pair<mpz_class, mpq_class> floor_frac(const Rational& x);

}  // namespace mono
