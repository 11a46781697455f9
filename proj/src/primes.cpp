#include "mono/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace mono {

namespace {

std::vector<std::uint64_t> sieve_first(std::size_t count) {
  // p_n < n (ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(count < 6 ? 6 : count);
  std::size_t limit = static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  std::vector<std::uint64_t> out;
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    out.clear();
    for (std::size_t i = 2; i <= limit && out.size() < count; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    if (out.size() >= count) return out;
    limit *= 2;
  }
}

std::mutex g_table_mutex;
std::shared_ptr<const PrimeTable> g_table;

}  // namespace

PrimeTable::PrimeTable(std::size_t count) : primes_(sieve_first(count)) {
  if (count == 0) fail(ErrorKind::OutOfRange, "prime table needs at least one prime");
}

std::uint64_t PrimeTable::nth(std::size_t n) const {
  if (n == 0 || n > primes_.size()) {
    fail(ErrorKind::OutOfRange, "prime index " + std::to_string(n) +
                                    " outside table of " + std::to_string(primes_.size()));
  }
  return primes_[n - 1];
}

mpz_class PrimeTable::primorial(std::size_t n) const {
  nth(n);
  mpz_class p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= static_cast<unsigned long>(primes_[i]);
  return p;
}

std::shared_ptr<const PrimeTable> prime_table() {
  std::lock_guard lock(g_table_mutex);
  if (!g_table) g_table = std::make_shared<const PrimeTable>(kDefaultPrimeCount);
  return g_table;
}

void reserve_primes(std::size_t count) {
  std::lock_guard lock(g_table_mutex);
  if (g_table && g_table->size() >= count) return;
  const std::size_t want = std::max(count, kDefaultPrimeCount);
  g_table = std::make_shared<const PrimeTable>(want);
}

std::size_t prime_table_size() { return prime_table()->size(); }

std::uint64_t nth_prime(std::size_t n) { return prime_table()->nth(n); }

mpz_class primorial(std::size_t n) { return prime_table()->primorial(n); }

std::size_t minimal_base_index(const Rational& x) {
  if (x.is_integer()) return 1;
  const auto table = prime_table();
  mpz_class rest = x.den();
  std::size_t index = 0;
  for (std::size_t i = 0; i < table->size() && rest != 1; ++i) {
    const unsigned long p = static_cast<unsigned long>(table->primes()[i]);
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      index = i + 1;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    }
  }
  if (rest != 1) {
    fail(ErrorKind::UnsupportedPrime,
         "denominator of " + x.str() + " has a prime factor beyond p_" +
             std::to_string(table->size()));
  }
  return index;
}

}  // namespace mono
