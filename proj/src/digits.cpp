#include "mono/digits.hpp"

#include <algorithm>

#include "mono/primes.hpp"

namespace mono {

namespace {

void require_natural(const mpz_class& m, const char* op) {
  if (sgn(m) <= 0) fail(ErrorKind::Domain, std::string(op) + " needs a natural number >= 1");
}

void require_not_pow2(const Rational& x, const char* op) {
  if (is_power_of_two(x)) {
    fail(ErrorKind::Domain, std::string(op) + " is undefined on the power of two " + x.str());
  }
}

// Smallest u >= 0 with den | P^u, where P is squarefree.
Exponent primorial_depth(const mpz_class& den, const mpz_class& base, const Rational& x,
                         std::size_t n) {
  mpz_class rest = den;
  Exponent u = 0;
  while (rest != 1) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    if (g == 1) {
      fail(ErrorKind::UnsupportedPrime,
           x.str() + " has no terminating base P_" + std::to_string(n) + " expansion");
    }
    rest /= g;
    ++u;
  }
  return checked_exponent(u);
}

}  // namespace

BinaryProfile binary_profile(const mpz_class& m) {
  require_natural(m, "binary_profile");
  BinaryProfile p;
  p.end = static_cast<Exponent>(mpz_scan1(m.get_mpz_t(), 0));
  p.start = static_cast<Exponent>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
  p.power_of_two = p.end == p.start;
  p.next_digit = mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(p.end + 1));
  if (!p.power_of_two) {
    mpz_class rest = m;
    mpz_clrbit(rest.get_mpz_t(), static_cast<mp_bitcnt_t>(p.start));
    p.gap = p.start - (static_cast<Exponent>(mpz_sizeinbase(rest.get_mpz_t(), 2)) - 1);
  }
  return p;
}

Exponent e2(const mpz_class& m) {
  require_natural(m, "e2");
  return static_cast<Exponent>(mpz_scan1(m.get_mpz_t(), 0));
}

Exponent s2(const mpz_class& m) {
  require_natural(m, "s2");
  return static_cast<Exponent>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
}

Exponent DigitExpansion::leading() const {
  if (digits.empty()) fail(ErrorKind::InternalInvariant, "empty expansion");
  return digits.rbegin()->first;
}

Exponent DigitExpansion::trailing() const {
  if (digits.empty()) fail(ErrorKind::InternalInvariant, "empty expansion");
  return digits.begin()->first;
}

Rational DigitExpansion::evaluate() const {
  const mpz_class base = primorial(base_index);
  mpq_class sum = 0;
  for (const auto& [pos, digit] : digits) {
    mpz_class scale;
    if (pos >= 0) {
      mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(pos));
      sum += mpq_class(digit * scale);
    } else {
      mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(-pos));
      sum += mpq_class(digit, scale);
    }
  }
  sum.canonicalize();
  return Rational::from_mpq(sum);
}

std::string DigitExpansion::positional() const {
  const mpz_class base = primorial(base_index);
  const bool wide = base > 10;
  const Exponent hi = std::max<Exponent>(leading(), 0);
  const Exponent lo = std::min<Exponent>(trailing(), -1);
  std::string out;
  for (Exponent pos = hi; pos >= lo; --pos) {
    if (pos == -1) out += '.';
    else if (wide && pos != hi) out += ':';
    const auto it = digits.find(pos);
    out += it == digits.end() ? std::string("0") : it->second.get_str();
  }
  return out;
}

DigitExpansion expand(const Rational& x, std::size_t n) {
  const mpz_class base = primorial(n);
  const Exponent u = primorial_depth(x.den(), base, x, n);
  mpz_class scaled;
  mpz_pow_ui(scaled.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(u));
  scaled = scaled * x.num() / x.den();

  DigitExpansion out;
  out.base_index = n;
  Exponent pos = -u;
  mpz_class digit;
  while (scaled != 0) {
    mpz_fdiv_qr(scaled.get_mpz_t(), digit.get_mpz_t(), scaled.get_mpz_t(), base.get_mpz_t());
    if (digit != 0) out.digits.emplace(checked_exponent(pos), digit);
    ++pos;
  }
  return out;
}

Exponent b_exponent(const Rational& x) {
  require_not_pow2(x, "b(x)");
  const Exponent a = a_exponent(x);
  const mpq_class rest = x.value() - pow2_q(a);
  const Exponent b = a_exponent(rest);
  const mpq_class lo = pow2_q(a) + pow2_q(b);
  if (!(lo <= x.value() && x.value() < lo + pow2_q(b))) {
    fail(ErrorKind::InternalInvariant, "b(x) check failed for " + x.str());
  }
  return b;
}

Exponent c_exponent(const Rational& x) {
  require_not_pow2(x, "c(x)");
  const Exponent a = a_exponent(x);
  const mpq_class top = pow2_q(a + 1);
  const Exponent c = ceil_log2(top - x.value()) - 1;
  if (!(top - pow2_q(c + 1) <= x.value() && x.value() < top - pow2_q(c)) || c >= a) {
    fail(ErrorKind::InternalInvariant, "c(x) check failed for " + x.str());
  }
  return c;
}

Exponent epsilon_exponent(const mpq_class& f) {
  if (sgn(f) <= 0 || f >= 1) {
    fail(ErrorKind::OutOfRange, "epsilon needs 0 < f < 1, got " + f.get_str());
  }
  const Exponent eps = ceil_log2(1 - f);
  if (!(1 - pow2_q(eps) <= f && f < 1 - pow2_q(eps - 1))) {
    fail(ErrorKind::InternalInvariant, "epsilon check failed for " + f.get_str());
  }
  return eps;
}

Rational r_ratio(const Rational& x) {
  require_not_pow2(x, "r(x)");
  const mpq_class base = pow2_q(a_exponent(x));
  mpq_class r = (x.value() - base) / base;
  return Rational::from_mpq(r);
}

Exponent s_frac(const Rational& x, std::size_t n) {
  if (x.num() >= x.den()) fail(ErrorKind::OutOfRange, "s_n needs 0 < x < 1, got " + x.str());
  const mpz_class base = primorial(n);
  primorial_depth(x.den(), base, x, n);
  // Largest l <= -1 with P^l <= x, i.e. num * P^(-l) >= den.
  Exponent l = -1;
  mpz_class scaled = x.num() * base;
  while (scaled < x.den()) {
    scaled *= base;
    l = checked_exponent(l - 1);
  }
  return l;
}

Exponent e_frac(const Rational& x, std::size_t n) {
  if (x.num() >= x.den()) fail(ErrorKind::OutOfRange, "e_n needs 0 < x < 1, got " + x.str());
  return -primorial_depth(x.den(), primorial(n), x, n);
}

Exponent e_int(const mpz_class& m, std::size_t n) {
  require_natural(m, "e_int");
  const mpz_class base = primorial(n);
  mpz_class rest = m;
  Exponent k = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), base.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    ++k;
  }
  return k;
}

int right_left_disjoint(const mpz_class& a, const mpz_class& b) {
  return e2(b) > s2(a) ? 0 : 1;
}

}  // namespace mono
