#pragma once

// The colourings phi, Phi (extended to degenerate pairs), Psi, Psi', theta,
// nu, mu and alpha, as total functions on their domains.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "mono/colour.hpp"
#include "mono/rational.hpp"

namespace mono {

/// Two-colouring of Z with phi(k+1) != phi(2k), phi(2k+1) for k outside {0,1}.
int phi(Exponent k);

/// Pair colour of non-negative integers; PhiZero when a = 0, b = 0 or a >= b.
PhiValue big_phi(std::int64_t a, std::int64_t b);

/// Psi(a, b) = Phi(a, b + 1).
PhiValue psi(std::int64_t a, std::int64_t b);

/// Psi'(1, b) = Phi(1, 2); Psi'(a, b) = Phi(a - 1, b) for a > 1. Domain error
/// for a < 1.
PhiValue psi_prime(std::int64_t a, std::int64_t b);

ThetaValue theta(const mpz_class& m);

/// The nu special class of x, if any (C2 and C5 never contain rationals).
std::optional<NuClass> nu_special_class(const Rational& x);

NuValue nu(const Rational& x);

MuValue mu(const Rational& x);

/// The 13-tuple alpha'(x) for non-integer x > 2 that is not a power of two.
AlphaPrimeTuple alpha_prime(const Rational& x);

AlphaValue alpha(const Rational& x);

enum class ColouringId { Phi, BigPhi, Psi, PsiPrime, Theta, Nu, Mu, Alpha, Const };

/// CLI name: phi, bigphi, psi, psiprime, theta, nu, mu, alpha, const.
const char* colouring_name(ColouringId id) noexcept;

/// Throws Parse for unknown names.
ColouringId parse_colouring(std::string_view name);

/// True for bigphi, psi and psiprime, whose inputs are pairs of integers.
bool is_pair_colouring(ColouringId id) noexcept;

/// Colour of a positive rational. phi and theta need integer inputs; pair
/// colourings are rejected with a domain error.
ColourValue colour_of(ColouringId id, const Rational& x);

/// Colour of an integer pair under bigphi, psi or psiprime.
ColourValue colour_of_pair(ColouringId id, std::int64_t a, std::int64_t b);

}  // namespace mono
