#pragma once

// Structured colour values for every colouring, with a canonical textual key.
//
// Key grammar. Composite parts are '|'-separated and no part of a '|' list
// contains '|' itself:
//
//   bit:<b>                               phi
//   phi:z | phi:t:c1,c2,c3,c4,c5          Phi, Psi, Psi'
//   theta:p|e|g|<phi>|<phi>|f|t           theta
//   nu:s:<C1|C2|C3mC4|C4mC1|C5mC2>        nu, special class
//   nu:t:w1,w2,w3,w4,w5                   nu, open class
//   mu:w:<nu>  | mu:f:<nu>|<phi>|<phi>    mu
//   alpha:n:<theta> | alpha:neg | alpha:small | alpha:b:<13 comma digits>
//   const

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace mono {

struct BitColour {
  int bit = 0;
  friend bool operator==(const BitColour&, const BitColour&) = default;
};

/// Pair colour (c1..c5), or the zero colour of degenerate pairs.
struct PhiValue {
  bool zero = true;
  std::array<int, 5> c{};
  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

struct ThetaValue {
  int power_of_two = 0;
  int end_parity = 0;
  int gap_parity = 0;
  PhiValue inner;
  PhiValue inner_shift;
  int phi_of_end = 0;
  int t = 0;
  friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
};

enum class NuClass { C1, C2, C3minusC4, C4minusC1, C5minusC2 };

struct NuValue {
  bool special = false;
  NuClass cls = NuClass::C1;
  std::array<int, 5> w{};
  friend bool operator==(const NuValue&, const NuValue&) = default;
};

struct MuValue {
  bool whole = true;
  NuValue nu;
  PhiValue phi;
  PhiValue psi_prime;
  friend bool operator==(const MuValue&, const MuValue&) = default;
};

/// The 13 components of alpha' in order: seven parities, one residue mod 3,
/// then p, q, q', s, s'.
struct AlphaPrimeTuple {
  std::array<int, 13> c{};
  friend bool operator==(const AlphaPrimeTuple&, const AlphaPrimeTuple&) = default;
};

enum class AlphaCase { Natural, NegativePowerOfTwo, Small, Big };

struct AlphaValue {
  AlphaCase kind = AlphaCase::Small;
  ThetaValue theta;        // Natural only
  AlphaPrimeTuple prime;   // Big only
  friend bool operator==(const AlphaValue&, const AlphaValue&) = default;
};

struct ConstColour {
  friend bool operator==(const ConstColour&, const ConstColour&) = default;
};

using ColourValue = std::variant<BitColour, PhiValue, ThetaValue, NuValue, MuValue,
                                 AlphaValue, ConstColour>;

const char* nu_class_name(NuClass c) noexcept;

std::string colour_key(const PhiValue& v);
std::string colour_key(const ThetaValue& v);
std::string colour_key(const NuValue& v);
std::string colour_key(const MuValue& v);
std::string colour_key(const AlphaValue& v);
std::string colour_key(const ColourValue& v);

/// Inverse of colour_key; throws Parse on malformed keys.
ColourValue parse_colour_key(std::string_view key);

}  // namespace mono
