#include "mono/properties.hpp"

#include <random>

#include "mono/digits.hpp"
#include "mono/primes.hpp"

namespace mono {

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t law) {
    std::seed_seq seq{seed, law, std::uint64_t{0x6d6f6e6f}};
    rng_.seed(seq);
  }

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // Random natural with up to `bits` bits, at least 1.
  mpz_class natural(unsigned bits) {
    mpz_class m = 0;
    for (unsigned have = 0; have < bits; have += 64) {
      m <<= 64;
      m += static_cast<unsigned long>(rng_());
    }
    m >>= static_cast<mp_bitcnt_t>(below(bits));
    if (m == 0) m = 1;
    return m;
  }

  mpz_class odd(unsigned bits) { return natural(bits) | 1; }

  mpz_class below_mpz(const mpz_class& n) {
    mpz_class r = natural(static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 64);
    return r % n;
  }

 private:
  std::mt19937_64 rng_;
};

std::string str(const mpz_class& m) { return m.get_str(); }

mpz_class shl(const mpz_class& m, std::int64_t k) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return out;
}

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

using Law = bool (*)(Sampler&, const DigitOps&, std::string&);

bool disjoint_support_sum(Sampler& r, const DigitOps& ops, std::string& why) {
  const mpz_class a = r.natural(96);
  const auto top = static_cast<std::int64_t>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const mpz_class b = shl(r.odd(64), top + r.between(0, 16));
  const mpz_class s = a + b;
  if (ops.e2(s) == ops.e2(a) && ops.s2(s) == ops.s2(b)) return true;
  why = "a=" + str(a) + " b=" + str(b);
  return false;
}

bool binary_product_end(Sampler& r, const DigitOps& ops, std::string& why) {
  const mpz_class a = shl(r.odd(80), r.between(0, 40));
  const mpz_class b = shl(r.odd(80), r.between(0, 40));
  if (ops.e2(a * b) == ops.e2(a) + ops.e2(b)) return true;
  why = "a=" + str(a) + " b=" + str(b);
  return false;
}

bool binary_product_start(Sampler& r, const DigitOps& ops, std::string& why) {
  const mpz_class a = r.natural(128);
  const mpz_class b = r.natural(128);
  const Exponent extra = ops.s2(a * b) - ops.s2(a) - ops.s2(b);
  if (extra == 0 || extra == 1) return true;
  why = "a=" + str(a) + " b=" + str(b);
  return false;
}

bool same_end_carry(Sampler& r, const DigitOps& ops, std::string& why) {
  const std::int64_t i = r.between(0, 60);
  const unsigned long d = r.below(2);
  const mpz_class a = shl((r.natural(64) << 2) | (d << 1) | 1, i);
  const mpz_class b = shl((r.natural(64) << 2) | (d << 1) | 1, i);
  if (ops.e2(a) != i || ops.e2(b) != i) {
    why = "end mismatch for a=" + str(a) + " b=" + str(b);
    return false;
  }
  if (ops.e2(a + b) == i + 1) return true;
  why = "a=" + str(a) + " b=" + str(b);
  return false;
}

unsigned long last_digit(Sampler& r, std::size_t t) {
  const unsigned long p = nth_prime(t);
  const unsigned long base = primorial(t).get_ui();
  while (true) {
    const unsigned long d = 1 + r.below(base - 1);
    if (d % p != 0) return d;
  }
}

// x = X / P_t^u in (0, 1) with X = d (mod P_t), so x lies in T_t but not T_(t-1)
// when p_t does not divide d.
Rational primorial_fraction(Sampler& r, std::size_t t, unsigned long d) {
  const mpz_class base = primorial(t);
  const auto u = static_cast<unsigned long>(r.between(1, 3));
  const mpz_class high = power(base, u - 1);
  const mpz_class numerator = d + base * r.below_mpz(high);
  return Rational(numerator, power(base, u));
}

bool primorial_product_end(Sampler& r, const DigitOps& ops, std::string& why) {
  const auto t = static_cast<std::size_t>(r.between(1, 3));
  const unsigned long d = last_digit(r, t);
  const Rational x = primorial_fraction(r, t, d);
  const Rational y = primorial_fraction(r, t, d);
  if (ops.e_frac(x * y, t) == ops.e_frac(x, t) + ops.e_frac(y, t)) return true;
  why = "t=" + std::to_string(t) + " x=" + x.str() + " y=" + y.str();
  return false;
}

// x >= sqrt(P_t) * P_t^s, decided by squaring.
bool upper_half(const Rational& x, std::size_t t) {
  const Exponent s = s_frac(x, t);
  const mpz_class base = primorial(t);
  const mpz_class scale = power(base, static_cast<unsigned long>(-2 * s - 1));
  return x.num() * x.num() * scale >= x.den() * x.den();
}

bool primorial_product_start(Sampler& r, const DigitOps& ops, std::string& why) {
  const auto t = static_cast<std::size_t>(r.between(1, 3));
  const Rational x = primorial_fraction(r, t, last_digit(r, t));
  const bool upper = upper_half(x, t);
  Rational y = primorial_fraction(r, t, last_digit(r, t));
  while (upper_half(y, t) != upper) y = primorial_fraction(r, t, last_digit(r, t));
  const Exponent want = ops.s_frac(x, t) + ops.s_frac(y, t) + (upper ? 1 : 0);
  if (ops.s_frac(x * y, t) == want) return true;
  why = "t=" + std::to_string(t) + " x=" + x.str() + " y=" + y.str();
  return false;
}

Rational c3_element(Sampler& r) {
  const std::int64_t k = r.between(-7, 8);
  const std::int64_t l = r.between(-8, k - 1);
  return Rational::from_mpq(pow2_q(k) + pow2_q(l));
}

bool c3_dyadic_closure(Sampler& r, const DigitOps&, std::string& why) {
  while (true) {
    const Rational alpha = c3_element(r), beta = c3_element(r), gamma = c3_element(r);
    const mpq_class x = (alpha.value() + beta.value() - gamma.value()) / 2;
    const mpq_class y = (alpha.value() - beta.value() + gamma.value()) / 2;
    const mpq_class z = (-alpha.value() + beta.value() + gamma.value()) / 2;
    if (sgn(x) <= 0 || sgn(y) <= 0 || sgn(z) <= 0 || x == y || y == z || x == z) continue;
    if (!in_C3(alpha) || !in_C3(beta) || !in_C3(gamma)) {
      why = "sampled a non-C3 element";
      return false;
    }
    const bool dyadic = is_dyadic(Rational::from_mpq(x)) && is_dyadic(Rational::from_mpq(y)) &&
                        is_dyadic(Rational::from_mpq(z));
    if (dyadic) return true;
    why = "alpha=" + alpha.str() + " beta=" + beta.str() + " gamma=" + gamma.str();
    return false;
  }
}

struct NamedLaw {
  const char* name;
  Law law;
};

const NamedLaw kLaws[] = {
    {"disjoint_support_sum", disjoint_support_sum},
    {"binary_product_end", binary_product_end},
    {"binary_product_start", binary_product_start},
    {"same_end_carry", same_end_carry},
    {"primorial_product_end", primorial_product_end},
    {"primorial_product_start", primorial_product_start},
    {"c3_dyadic_closure", c3_dyadic_closure},
};

LawResult run_indexed(std::size_t index, std::uint64_t seed, std::uint64_t samples,
                      const DigitOps& ops) {
  LawResult out;
  out.name = kLaws[index].name;
  Sampler sampler(seed, index);
  for (std::uint64_t i = 0; i < samples; ++i) {
    ++out.samples;
    std::string why;
    bool ok = false;
    try {
      ok = kLaws[index].law(sampler, ops, why);
    } catch (const Error& e) {
      why = e.what();
    }
    if (!ok) {
      out.passed = false;
      out.counterexample = why;
      break;
    }
  }
  return out;
}

}  // namespace

DigitOps DigitOps::standard() {
  DigitOps ops;
  ops.e2 = [](const mpz_class& m) { return mono::e2(m); };
  ops.s2 = [](const mpz_class& m) { return mono::s2(m); };
  ops.e_frac = [](const Rational& x, std::size_t n) { return mono::e_frac(x, n); };
  ops.s_frac = [](const Rational& x, std::size_t n) { return mono::s_frac(x, n); };
  return ops;
}

bool PropertyReport::all_passed() const {
  for (const auto& law : laws) {
    if (!law.passed) return false;
  }
  return true;
}

const std::vector<std::string>& property_law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& law : kLaws) out.emplace_back(law.name);
    return out;
  }();
  return names;
}

PropertyReport property_suite(std::uint64_t seed, std::uint64_t samples, const DigitOps& ops) {
  if (samples < 1) fail(ErrorKind::Domain, "sample count must be at least 1");
  PropertyReport report;
  report.seed = seed;
  report.samples = samples;
  for (std::size_t i = 0; i < std::size(kLaws); ++i) {
    report.laws.push_back(run_indexed(i, seed, samples, ops));
  }
  return report;
}

LawResult run_law(const std::string& name, std::uint64_t seed, std::uint64_t samples,
                  const DigitOps& ops) {
  if (samples < 1) fail(ErrorKind::Domain, "sample count must be at least 1");
  for (std::size_t i = 0; i < std::size(kLaws); ++i) {
    if (name == kLaws[i].name) return run_indexed(i, seed, samples, ops);
  }
  fail(ErrorKind::Parse, "unknown law '" + name + "'");
}

}  // namespace mono
