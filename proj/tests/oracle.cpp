#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace oracle {

namespace {

long mod(long v, long m) { return ((v % m) + m) % m; }

long bit_length(const mpz_class& m) { return static_cast<long>(bits_lsb(m).size()); }

}  // namespace

std::string bits_lsb(const mpz_class& m) {
  std::string s = m.get_str(2);
  std::reverse(s.begin(), s.end());
  return s;
}

long end2(const mpz_class& m) {
  const std::string s = bits_lsb(m);
  return static_cast<long>(s.find('1'));
}

long start2(const mpz_class& m) {
  const std::string s = bits_lsb(m);
  return static_cast<long>(s.rfind('1'));
}

int bit_at(const mpz_class& m, long pos) {
  const std::string s = bits_lsb(m);
  if (pos < 0 || pos >= static_cast<long>(s.size())) return 0;
  return s[static_cast<std::size_t>(pos)] == '1' ? 1 : 0;
}

int phi(long k) {
  // values[i] is phi(lo + i); the defined range is [2l + 2, 2k - 1].
  static std::mutex lock;
  static std::deque<int> values{0, 1, 0, 1};
  static long lo = 0, l = -1, kk = 2;
  std::lock_guard<std::mutex> guard(lock);
  auto at = [&](long n) { return values[static_cast<std::size_t>(n - lo)]; };
  while (k < lo || k > lo + static_cast<long>(values.size()) - 1) {
    const int up = 1 - at(kk + 1);
    values.push_back(up);
    values.push_back(up);
    const int down = 1 - at(l + 1);
    values.push_front(down);
    values.push_front(down);
    lo -= 2;
    ++kk;
    --l;
  }
  return at(k);
}

mono::PhiValue big_phi(long a, long b) {
  if (a < 0 || b < 0) throw std::domain_error("negative Phi argument");
  mono::PhiValue v;
  if (a == 0 || b == 0 || a >= b) return v;
  const mpz_class x = a, y = b;
  v.zero = false;
  v.c = {static_cast<int>(mod(end2(x), 2)), static_cast<int>(mod(end2(y), 2)), bit_at(x, end2(x) + 1),
         bit_at(y, end2(y) + 1), end2(y) > start2(x) ? 0 : 1};
  return v;
}

mono::PhiValue psi(long a, long b) { return big_phi(a, b + 1); }

mono::PhiValue psi_prime(long a, long b) {
  if (a < 1) throw std::domain_error("Psi' needs a >= 1");
  return a == 1 ? big_phi(1, 2) : big_phi(a - 1, b);
}

mono::ThetaValue theta(const mpz_class& m) {
  const std::string s = bits_lsb(m);
  const long ones = std::count(s.begin(), s.end(), '1');
  const long e = end2(m), st = start2(m);
  mono::ThetaValue v;
  v.power_of_two = ones == 1 ? 1 : 0;
  v.end_parity = static_cast<int>(mod(e, 2));
  long gap = 0;
  if (ones > 1) {
    const long second = static_cast<long>(s.substr(0, static_cast<std::size_t>(st)).rfind('1'));
    gap = st - second;
  }
  v.gap_parity = static_cast<int>(mod(gap, 2));
  v.inner = big_phi(e, st);
  v.inner_shift = big_phi(e, st + 1);
  v.phi_of_end = phi(e);
  v.t = ones == 1 ? 0 : (gap == 1 ? 0 : 1);
  return v;
}

mpq_class pow2(long k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

long a_of(const mpq_class& q) {
  if (sgn(q) <= 0) throw std::domain_error("a_of needs q > 0");
  long k = 0;
  mpq_class p = 1;
  while (p > q) {
    p /= 2;
    --k;
  }
  while (2 * p <= q) {
    p *= 2;
    ++k;
  }
  return k;
}

bool is_pow2(const mpq_class& q) { return sgn(q) > 0 && q == pow2(a_of(q)); }

bool in_c3(const mpq_class& q) {
  const mpq_class d = q - pow2(a_of(q));
  return sgn(d) > 0 && is_pow2(d);
}

bool in_c4(const mpq_class& q) {
  const long a = a_of(q);
  const mpq_class d = pow2(a + 1) - q;
  return is_pow2(d) && d <= pow2(a);
}

std::uint64_t prime(std::size_t n) {
  static std::vector<std::uint64_t> primes;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  std::uint64_t c = primes.empty() ? 2 : primes.back() + 1;
  while (primes.size() < n) {
    bool is_prime = true;
    for (std::uint64_t d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(c);
    ++c;
  }
  return primes[n - 1];
}

std::size_t minimal_base(const mpq_class& q) {
  mpz_class den = q.get_den();
  std::size_t best = 1;
  for (std::size_t i = 1; den > 1; ++i) {
    const mpz_class p = static_cast<unsigned long>(prime(i));
    if (p * p > den) {
      // den is now prime
      std::size_t j = i;
      while (mpz_class(static_cast<unsigned long>(prime(j))) != den) ++j;
      return std::max(best, j);
    }
    if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
      best = i;
      while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) den /= p;
    }
  }
  return best;
}

std::map<long, mpz_class> digits(const mpq_class& q, std::size_t n) {
  mpz_class base = 1;
  for (std::size_t i = 1; i <= n; ++i) base *= static_cast<unsigned long>(prime(i));
  std::map<long, mpz_class> out;
  mpz_class whole = q.get_num() / q.get_den();
  for (long pos = 0; whole > 0; ++pos) {
    const mpz_class d = whole % base;
    if (d != 0) out[pos] = d;
    whole /= base;
  }
  mpq_class frac = q - mpq_class(q.get_num() / q.get_den());
  for (long pos = -1; sgn(frac) != 0; --pos) {
    if (pos < -100000) throw std::domain_error("expansion does not terminate");
    frac *= base;
    const mpz_class d = frac.get_num() / frac.get_den();
    if (d != 0) out[pos] = d;
    frac -= d;
  }
  return out;
}

namespace {

// Lowest l worth scanning near 2^k for q with this denominator.
long l_floor(const mpq_class& q, long k) {
  return -(bit_length(q.get_den()) + 2 * std::abs(k) + 8);
}

// q^2 against 2^(2k+2) (1 - 2^(l-k)) = 2^(2k+2) - 2^(k+l+2).
int cmp_c5(const mpq_class& q, long k, long l) {
  const mpq_class s = pow2(2 * k + 2) - pow2(k + l + 2);
  return cmp(q * q, s);
}

int unique(const std::vector<int>& hits, const char* family) {
  if (hits.size() != 1) throw std::logic_error(std::string("partition ") + family + " not unique");
  return hits.front();
}

}  // namespace

mono::NuValue nu(const mpq_class& q) {
  mono::NuValue v;
  if (is_pow2(q)) {
    v.special = true;
    v.cls = mono::NuClass::C1;
    return v;
  }
  const bool c3 = in_c3(q), c4 = in_c4(q);
  if (c3 && !c4) {
    v.special = true;
    v.cls = mono::NuClass::C3minusC4;
    return v;
  }
  if (c4) {
    v.special = true;
    v.cls = mono::NuClass::C4minusC1;
    return v;
  }
  const long a = a_of(q);
  v.w[0] = q * q < pow2(2 * a + 1) ? 0 : 1;
  std::vector<int> g, h, j, b;
  for (long k = a - 1; k <= a + 1; ++k) {
    if (q > pow2(k) && q < pow2(k + 1)) g.push_back(phi(k));
    for (long l = k - 1; l >= l_floor(q, k); --l) {
      if (q > pow2(k) + pow2(l) && q < pow2(k) + pow2(l + 1)) h.push_back(static_cast<int>(mod(k - l, 3)));
      const mpq_class lo = pow2(k + 1) - pow2(l + 1), hi = pow2(k + 1) - pow2(l);
      if (q > lo && q < hi) {
        j.push_back(static_cast<int>(mod(k - l, 3)));
        const int side = cmp_c5(q, k, l);
        if (side < 0) b.push_back(static_cast<int>(mod(k - l, 3)));
        if (side > 0) b.push_back(static_cast<int>(mod(k - l - 1, 3)));
      }
    }
  }
  v.w[1] = unique(g, "G");
  v.w[2] = unique(h, "H");
  v.w[3] = unique(j, "J");
  v.w[4] = unique(b, "B");
  return v;
}

mono::MuValue mu(const mpq_class& q) {
  mono::MuValue v;
  v.nu = nu(q);
  if (q >= 1) return v;
  v.whole = false;
  const auto d = digits(q, minimal_base(q));
  const long s = d.rbegin()->first, e = d.begin()->first;
  v.phi = big_phi(-s, -e);
  v.psi_prime = psi_prime(-s, -e);
  return v;
}

mono::AlphaValue alpha(const mpq_class& q) {
  mono::AlphaValue v;
  if (q.get_den() == 1) {
    v.kind = mono::AlphaCase::Natural;
    v.theta = theta(q.get_num());
    return v;
  }
  if (is_pow2(q) && a_of(q) < 0) {
    v.kind = mono::AlphaCase::NegativePowerOfTwo;
    return v;
  }
  if (q <= 2) {
    v.kind = mono::AlphaCase::Small;
    return v;
  }
  v.kind = mono::AlphaCase::Big;
  const std::size_t r = minimal_base(q);
  const mpz_class fl = q.get_num() / q.get_den();
  const mpq_class f = q - mpq_class(fl);
  long eps = 0;
  while (!(1 - pow2(eps) <= f && f < 1 - pow2(eps - 1))) --eps;
  auto e_r = [&](const mpz_class& m) { return digits(mpq_class(m), r).begin()->first; };
  const long a = a_of(q);
  const long b = a_of(q - pow2(a));
  long c = a;
  while (!(pow2(a + 1) - pow2(c + 1) <= q && q < pow2(a + 1) - pow2(c))) --c;
  const long er0 = e_r(fl), er1 = e_r(fl + 1);
  const mpq_class ratio = (q - pow2(a)) / pow2(a);
  v.prime.c = {static_cast<int>(mod(a, 2)),
               static_cast<int>(mod(a_of(f), 2)),
               static_cast<int>(mod(eps, 2)),
               static_cast<int>(mod(er0, 2)),
               static_cast<int>(mod(end2(fl), 2)),
               static_cast<int>(mod(er1, 2)),
               static_cast<int>(mod(end2(fl + 1), 2)),
               static_cast<int>(mod(a_of(ratio), 3)),
               is_pow2(mpq_class(fl)) ? 0 : 1,
               a - b > er0 ? 0 : 1,
               a - b > er1 ? 0 : 1,
               a - c > er0 ? 0 : 1,
               a - c > er1 ? 0 : 1};
  return v;
}

Boundary next_boundary(const mpq_class& q) {
  const long a = a_of(q);
  const mpq_class q2 = q * q;
  Boundary best;
  bool have = false;
  auto offer = [&](const mpq_class& square, bool surd, const mpq_class& value) {
    if (square <= q2) return;
    if (!have || square < best.square) {
      best.surd = surd;
      best.square = square;
      best.value = surd ? mpq_class(0) : value;
      have = true;
    }
  };
  for (long k = a - 1; k <= a + 2; ++k) {
    offer(pow2(2 * k), false, pow2(k));            // C1
    offer(pow2(2 * k + 1), true, 0);               // C2
    for (long l = k - 1; l >= l_floor(q, k); --l) {
      const mpq_class c3 = pow2(k) + pow2(l), c4 = pow2(k) - pow2(l);
      offer(c3 * c3, false, c3);
      offer(c4 * c4, false, c4);
      offer(pow2(2 * k + 2) - pow2(k + l + 2), true, 0);   // C5
    }
  }
  return best;
}

bool below(const mpq_class& y, const Boundary& b) { return y * y < b.square; }

SearchSummary naive_search(const std::vector<mpq_class>& universe,
                           const std::function<std::string(const mpq_class&)>& key, bool finite,
                           std::size_t target) {
  std::map<mpq_class, std::string> cache;
  auto colour = [&](const mpq_class& v) -> const std::string& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, key(v)).first;
    return it->second;
  };
  auto monochromatic = [&](const std::vector<std::size_t>& idx) {
    std::vector<mpq_class> values;
    if (finite) {
      for (unsigned mask = 1; mask < (1u << idx.size()); ++mask) {
        mpq_class sum = 0, product = 1;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (mask & (1u << i)) {
            sum += universe[idx[i]];
            product *= universe[idx[i]];
          }
        }
        values.push_back(sum);
        values.push_back(product);
      }
    } else {
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
          values.push_back(universe[idx[i]] + universe[idx[j]]);
          values.push_back(universe[idx[i]] * universe[idx[j]]);
        }
      }
    }
    for (const auto& v : values) {
      if (colour(v) != colour(values.front())) return false;
    }
    return true;
  };
  SearchSummary out;
  const std::size_t n = universe.size();
  for (std::size_t k = 1; k <= n; ++k) {
    bool any = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (monochromatic(idx)) {
        any = true;
        if (k == target) out.sets.push_back(idx);
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!any) break;
    out.max_size = k;
  }
  return out;
}

}  // namespace oracle
