#include "mono/rational.hpp"

#include <cctype>
#include <functional>

namespace mono {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::UnsupportedPrime: return "unsupported_prime";
    case ErrorKind::OutOfRange: return "out_of_range";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::BudgetExhausted: return "budget_exhausted";
    case ErrorKind::InternalInvariant: return "internal_invariant";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

const char* ordering_name(Ordering o) noexcept {
  switch (o) {
    case Ordering::Below: return "below";
    case Ordering::Equal: return "equal";
    case Ordering::Above: return "above";
  }
  return "?";
}

Exponent checked_exponent(Exponent value) {
  if (value >= kExponentLimit || value <= -kExponentLimit) {
    fail(ErrorKind::Overflow,
         "exponent " + std::to_string(value) + " exceeds 2^62 in magnitude");
  }
  return value;
}

namespace {

void require_positive(const mpz_class& v, const char* what) {
  if (sgn(v) <= 0) {
    fail(ErrorKind::Domain, std::string(what) + " must be a positive integer, got " +
                                v.get_str());
  }
}

Ordering to_ordering(int c) {
  return c < 0 ? Ordering::Below : (c > 0 ? Ordering::Above : Ordering::Equal);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  require_positive(num, "numerator");
  require_positive(den, "denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(std::uint64_t integer) {
  if (integer == 0) fail(ErrorKind::Domain, "zero is not a positive rational");
  mpz_class n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(integer), 0, 0, &integer);
  q_ = mpq_class(n);
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  if (sgn(q) <= 0) {
    fail(ErrorKind::Domain, "value " + q.get_str() + " is not positive");
  }
  return Rational(std::move(q), Trusted{});
}

Rational Rational::parse(std::string_view text) {
  auto digits = [&](std::string_view part) {
    if (part.empty()) fail(ErrorKind::Parse, "empty number in '" + std::string(text) + "'");
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        fail(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
      }
    }
    return mpz_class(std::string(part));
  };
  const auto slash = text.find('/');
  const mpz_class num = digits(text.substr(0, slash));
  const mpz_class den =
      slash == std::string_view::npos ? mpz_class(1) : digits(text.substr(slash + 1));
  if (num == 0 || den == 0) {
    fail(ErrorKind::Domain, "'" + std::string(text) + "' is not a positive rational");
  }
  return Rational(num, den);
}

mpq_class pow2_q(Exponent k) {
  checked_exponent(k);
  mpz_class p = 1;
  if (k >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return mpq_class(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return mpq_class(mpz_class(1), p);
}

Rational Rational::pow2(Exponent k) { return Rational(pow2_q(k), Trusted{}); }

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::hash() const noexcept {
  std::size_t h = 0;
  auto mix = [&h](const mpz_class& z) {
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    h ^= limbs * 0x100000001b3ULL;
  };
  mix(num());
  mix(den());
  return h;
}

namespace {

Exponent bit_length(const mpz_class& z) {
  return static_cast<Exponent>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// Sign of n/d - 2^k without forming 2^k as a rational.
int cmp_with_pow2(const mpz_class& n, const mpz_class& d, Exponent k) {
  mpz_class lhs = n;
  mpz_class rhs = d;
  if (k >= 0) {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return cmp(lhs, rhs);
}

}  // namespace

Exponent a_exponent(const mpq_class& x) {
  if (sgn(x) <= 0) fail(ErrorKind::Domain, "a(x) needs x > 0");
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  Exponent a = checked_exponent(bit_length(n) - bit_length(d));
  if (cmp_with_pow2(n, d, a) < 0) --a;
  return a;
}

Exponent a_exponent(const Rational& x) { return a_exponent(x.value()); }

Exponent ceil_log2(const mpq_class& y) {
  const Exponent a = a_exponent(y);
  return cmp_with_pow2(y.get_num(), y.get_den(), a) == 0 ? a : a + 1;
}

bool is_power_of_two(const mpz_class& m) {
  return sgn(m) > 0 && mpz_popcount(m.get_mpz_t()) == 1;
}

bool is_power_of_two(const Rational& x) {
  return (x.num() == 1 && is_power_of_two(x.den())) ||
         (x.den() == 1 && is_power_of_two(x.num()));
}

bool is_dyadic(const Rational& x) { return is_power_of_two(x.den()); }

bool in_C3(const Rational& x) {
  return is_dyadic(x) && mpz_popcount(x.num().get_mpz_t()) == 2;
}

bool in_C4(const Rational& x) {
  if (!is_dyadic(x)) return false;
  mpz_class v = x.num();
  const mp_bitcnt_t tz = mpz_scan1(v.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), tz);
  // v is odd; a single run of ones means v + 1 is a power of two.
  return is_power_of_two(mpz_class(v + 1));
}

Ordering cmp_pow2_half(const Rational& x, Exponent k) {
  const Exponent e = checked_exponent(2 * checked_exponent(k) + 1);
  const mpz_class n2 = x.num() * x.num();
  const mpz_class d2 = x.den() * x.den();
  const Ordering o = to_ordering(cmp_with_pow2(n2, d2, e));
  if (o == Ordering::Equal) {
    fail(ErrorKind::InternalInvariant, "rational " + x.str() + " squared equals 2^" +
                                           std::to_string(e));
  }
  return o;
}

Ordering cmp_c5_boundary(const Rational& x, Exponent a, Exponent c) {
  if (c >= a) fail(ErrorKind::Domain, "C5 boundary needs c < a");
  checked_exponent(2 * checked_exponent(a) + 2);
  checked_exponent(a + checked_exponent(c) + 2);
  const mpq_class bound = pow2_q(2 * a + 2) - pow2_q(a + c + 2);
  const mpq_class sq = x.value() * x.value();
  const Ordering o = to_ordering(cmp(sq, bound));
  if (o == Ordering::Equal) {
    fail(ErrorKind::InternalInvariant,
         "rational " + x.str() + " lies on a C5 boundary, which has no rational points");
  }
  return o;
}

std::pair<mpz_class, mpq_class> floor_frac(const Rational& x) {
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  mpq_class frac = x.value() - mpq_class(whole);
  frac.canonicalize();
  return {whole, frac};
}

}  // namespace mono
