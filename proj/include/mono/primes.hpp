#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "mono/rational.hpp"

namespace mono {

inline constexpr std::size_t kDefaultPrimeCount = 64;

/// The first `count` primes, p_1 = 2. Immutable once built.
class PrimeTable {
 public:
  explicit PrimeTable(std::size_t count);

  std::size_t size() const { return primes_.size(); }

  /// p_n, 1-based. Throws OutOfRange when n is 0 or beyond the table.
  std::uint64_t nth(std::size_t n) const;

  /// P_n = p_1 * ... * p_n.
  mpz_class primorial(std::size_t n) const;

  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  std::vector<std::uint64_t> primes_;
};

/// Snapshot of the process-wide table. Safe to call from any thread.
std::shared_ptr<const PrimeTable> prime_table();

/// Grows the process-wide table to at least `count` primes. Never shrinks.
void reserve_primes(std::size_t count);

/// Current size of the process-wide table.
std::size_t prime_table_size();

std::uint64_t nth_prime(std::size_t n);
mpz_class primorial(std::size_t n);

/// Smallest n such that every prime factor of den(x) is at most p_n; 1 for
/// integers. Throws UnsupportedPrime when a factor lies beyond the table.
std::size_t minimal_base_index(const Rational& x);

}  // namespace mono
