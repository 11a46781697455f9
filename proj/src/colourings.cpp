#include "mono/colourings.hpp"

#include <bit>

#include "mono/digits.hpp"
#include "mono/primes.hpp"

namespace mono {

namespace {

int mod2(Exponent v) { return static_cast<int>(((v % 2) + 2) % 2); }
int mod3(Exponent v) { return static_cast<int>(((v % 3) + 3) % 3); }

Exponent floor_half(Exponent n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

// d(m): the binary digit just left of the last one.
int next_digit(std::uint64_t m) { return static_cast<int>((m >> (std::countr_zero(m) + 1)) & 1U); }

int end_of(std::uint64_t m) { return std::countr_zero(m); }
int start_of(std::uint64_t m) { return 63 - std::countl_zero(m); }

}  // namespace

int phi(Exponent k) {
  // phi(2j) = phi(2j+1) = 1 - phi(j+1) for j >= 2 or j <= -1; each step moves
  // k strictly towards {0, 1, 2, 3}.
  int flips = 0;
  while (k < 0 || k > 3) {
    k = floor_half(k) + 1;
    ++flips;
  }
  const int base = (k == 1 || k == 3) ? 1 : 0;
  return (base + flips) % 2;
}

PhiValue big_phi(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) fail(ErrorKind::Domain, "Phi needs non-negative integers");
  PhiValue v;
  if (a == 0 || b == 0 || a >= b) return v;
  const auto ua = static_cast<std::uint64_t>(a);
  const auto ub = static_cast<std::uint64_t>(b);
  v.zero = false;
  v.c = {end_of(ua) % 2, end_of(ub) % 2, next_digit(ua), next_digit(ub),
         end_of(ub) > start_of(ua) ? 0 : 1};
  return v;
}

PhiValue psi(std::int64_t a, std::int64_t b) {
  if (b == INT64_MAX) fail(ErrorKind::Overflow, "Psi argument overflow");
  return big_phi(a, b + 1);
}

PhiValue psi_prime(std::int64_t a, std::int64_t b) {
  if (a < 1) fail(ErrorKind::Domain, "Psi' needs a >= 1");
  if (a == 1) return big_phi(1, 2);
  return big_phi(a - 1, b);
}

ThetaValue theta(const mpz_class& m) {
  const BinaryProfile p = binary_profile(m);
  ThetaValue v;
  v.power_of_two = p.power_of_two ? 1 : 0;
  v.end_parity = mod2(p.end);
  v.gap_parity = p.gap ? mod2(*p.gap) : 0;
  v.inner = big_phi(p.end, p.start);
  v.inner_shift = big_phi(p.end, p.start + 1);
  v.phi_of_end = phi(p.end);
  v.t = (p.gap && *p.gap != 1) ? 1 : 0;
  return v;
}

std::optional<NuClass> nu_special_class(const Rational& x) {
  if (is_power_of_two(x)) return NuClass::C1;
  const bool c3 = in_C3(x);
  const bool c4 = in_C4(x);
  if (c3 && !c4) return NuClass::C3minusC4;
  if (c4) return NuClass::C4minusC1;
  return std::nullopt;
}

NuValue nu(const Rational& x) {
  NuValue v;
  if (const auto cls = nu_special_class(x)) {
    v.special = true;
    v.cls = *cls;
    return v;
  }
  const Exponent a = a_exponent(x);
  const Exponent b = b_exponent(x);
  const Exponent c = c_exponent(x);
  const int below_b5 = cmp_c5_boundary(x, a, c) == Ordering::Below;
  v.w = {cmp_pow2_half(x, a) == Ordering::Below ? 0 : 1, phi(a), mod3(a - b), mod3(a - c),
         below_b5 ? mod3(a - c) : mod3(a - c - 1)};
  return v;
}

MuValue mu(const Rational& x) {
  MuValue v;
  v.nu = nu(x);
  if (x.num() >= x.den()) return v;
  const std::size_t n = minimal_base_index(x);
  const Exponent lead = -s_frac(x, n);
  const Exponent trail = -e_frac(x, n);
  v.whole = false;
  v.phi = big_phi(lead, trail);
  v.psi_prime = psi_prime(lead, trail);
  return v;
}

AlphaPrimeTuple alpha_prime(const Rational& x) {
  if (x.is_integer() || is_power_of_two(x) || x <= Rational(2)) {
    fail(ErrorKind::Domain, "alpha' is defined only on non-integers above 2, got " + x.str());
  }
  const std::size_t r = minimal_base_index(x);
  const auto [whole, frac] = floor_frac(x);
  const mpz_class next = whole + 1;
  const Exponent a = a_exponent(x);
  const Exponent gap_b = a - b_exponent(x);
  const Exponent gap_c = a - c_exponent(x);
  const Exponent er_whole = e_int(whole, r);
  const Exponent er_next = e_int(next, r);
  AlphaPrimeTuple t;
  t.c = {mod2(a),
         mod2(a_exponent(frac)),
         mod2(epsilon_exponent(frac)),
         mod2(er_whole),
         mod2(e2(whole)),
         mod2(er_next),
         mod2(e2(next)),
         mod3(a_exponent(r_ratio(x))),
         is_power_of_two(whole) ? 0 : 1,
         gap_b > er_whole ? 0 : 1,
         gap_b > er_next ? 0 : 1,
         gap_c > er_whole ? 0 : 1,
         gap_c > er_next ? 0 : 1};
  return t;
}

AlphaValue alpha(const Rational& x) {
  AlphaValue v;
  if (x.is_integer()) {
    v.kind = AlphaCase::Natural;
    v.theta = theta(x.num());
  } else if (x.num() == 1 && is_power_of_two(x.den())) {
    v.kind = AlphaCase::NegativePowerOfTwo;
  } else if (x <= Rational(2)) {
    v.kind = AlphaCase::Small;
  } else {
    v.kind = AlphaCase::Big;
    v.prime = alpha_prime(x);
  }
  return v;
}

const char* colouring_name(ColouringId id) noexcept {
  switch (id) {
    case ColouringId::Phi: return "phi";
    case ColouringId::BigPhi: return "bigphi";
    case ColouringId::Psi: return "psi";
    case ColouringId::PsiPrime: return "psiprime";
    case ColouringId::Theta: return "theta";
    case ColouringId::Nu: return "nu";
    case ColouringId::Mu: return "mu";
    case ColouringId::Alpha: return "alpha";
    case ColouringId::Const: return "const";
  }
  return "?";
}

ColouringId parse_colouring(std::string_view name) {
  for (ColouringId id : {ColouringId::Phi, ColouringId::BigPhi, ColouringId::Psi,
                         ColouringId::PsiPrime, ColouringId::Theta, ColouringId::Nu,
                         ColouringId::Mu, ColouringId::Alpha, ColouringId::Const}) {
    if (name == colouring_name(id)) return id;
  }
  fail(ErrorKind::Parse, "unknown colouring '" + std::string(name) + "'");
}

bool is_pair_colouring(ColouringId id) noexcept {
  return id == ColouringId::BigPhi || id == ColouringId::Psi || id == ColouringId::PsiPrime;
}

ColourValue colour_of(ColouringId id, const Rational& x) {
  switch (id) {
    case ColouringId::Phi:
      if (!x.is_integer() || !x.num().fits_slong_p()) {
        fail(ErrorKind::Domain, "phi needs a machine-sized integer, got " + x.str());
      }
      return BitColour{phi(x.num().get_si())};
    case ColouringId::Theta:
      if (!x.is_integer()) fail(ErrorKind::Domain, "theta needs a natural number, got " + x.str());
      return theta(x.num());
    case ColouringId::Nu: return nu(x);
    case ColouringId::Mu: return mu(x);
    case ColouringId::Alpha: return alpha(x);
    case ColouringId::Const: return ConstColour{};
    case ColouringId::BigPhi:
    case ColouringId::Psi:
    case ColouringId::PsiPrime: break;
  }
  fail(ErrorKind::Domain,
       std::string(colouring_name(id)) + " colours pairs of integers, not single values");
}

ColourValue colour_of_pair(ColouringId id, std::int64_t a, std::int64_t b) {
  switch (id) {
    case ColouringId::BigPhi: return big_phi(a, b);
    case ColouringId::Psi: return psi(a, b);
    case ColouringId::PsiPrime: return psi_prime(a, b);
    default: break;
  }
  fail(ErrorKind::Domain, std::string(colouring_name(id)) + " is not a pair colouring");
}

}  // namespace mono
