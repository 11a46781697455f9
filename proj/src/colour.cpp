#include "mono/colour.hpp"

#include <type_traits>
#include <vector>

#include "mono/error.hpp"

namespace mono {

namespace {

template <std::size_t N>
std::string join_digits(const std::array<int, N>& values) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

[[noreturn]] void bad_key(std::string_view key) {
  fail(ErrorKind::Parse, "malformed colour key '" + std::string(key) + "'");
}

bool consume(std::string_view& text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) return false;
  text.remove_prefix(prefix.size());
  return true;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t from = 0;
  while (true) {
    const auto at = text.find(sep, from);
    parts.push_back(text.substr(from, at - from));
    if (at == std::string_view::npos) return parts;
    from = at + 1;
  }
}

int parse_digit(std::string_view text, int modulus, std::string_view key) {
  if (text.size() != 1 || text[0] < '0' || text[0] - '0' >= modulus) bad_key(key);
  return text[0] - '0';
}

template <std::size_t N>
std::array<int, N> parse_digits(std::string_view text, const std::array<int, N>& moduli,
                                std::string_view key) {
  const auto parts = split(text, ',');
  if (parts.size() != N) bad_key(key);
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = parse_digit(parts[i], moduli[i], key);
  return out;
}

PhiValue parse_phi(std::string_view text, std::string_view key) {
  PhiValue v;
  if (text == "phi:z") return v;
  if (!consume(text, "phi:t:")) bad_key(key);
  v.zero = false;
  v.c = parse_digits<5>(text, {2, 2, 2, 2, 2}, key);
  return v;
}

ThetaValue parse_theta(std::string_view text, std::string_view key) {
  if (!consume(text, "theta:")) bad_key(key);
  const auto parts = split(text, '|');
  if (parts.size() != 7) bad_key(key);
  ThetaValue v;
  v.power_of_two = parse_digit(parts[0], 2, key);
  v.end_parity = parse_digit(parts[1], 2, key);
  v.gap_parity = parse_digit(parts[2], 2, key);
  v.inner = parse_phi(parts[3], key);
  v.inner_shift = parse_phi(parts[4], key);
  v.phi_of_end = parse_digit(parts[5], 2, key);
  v.t = parse_digit(parts[6], 2, key);
  return v;
}

NuValue parse_nu(std::string_view text, std::string_view key) {
  NuValue v;
  if (consume(text, "nu:s:")) {
    v.special = true;
    for (NuClass c : {NuClass::C1, NuClass::C2, NuClass::C3minusC4, NuClass::C4minusC1,
                      NuClass::C5minusC2}) {
      if (text == nu_class_name(c)) {
        v.cls = c;
        return v;
      }
    }
    bad_key(key);
  }
  if (!consume(text, "nu:t:")) bad_key(key);
  v.w = parse_digits<5>(text, {2, 2, 3, 3, 3}, key);
  return v;
}

}  // namespace

const char* nu_class_name(NuClass c) noexcept {
  switch (c) {
    case NuClass::C1: return "C1";
    case NuClass::C2: return "C2";
    case NuClass::C3minusC4: return "C3mC4";
    case NuClass::C4minusC1: return "C4mC1";
    case NuClass::C5minusC2: return "C5mC2";
  }
  return "?";
}

std::string colour_key(const PhiValue& v) {
  return v.zero ? std::string("phi:z") : "phi:t:" + join_digits(v.c);
}

std::string colour_key(const ThetaValue& v) {
  return "theta:" + std::to_string(v.power_of_two) + '|' + std::to_string(v.end_parity) + '|' +
         std::to_string(v.gap_parity) + '|' + colour_key(v.inner) + '|' +
         colour_key(v.inner_shift) + '|' + std::to_string(v.phi_of_end) + '|' +
         std::to_string(v.t);
}

std::string colour_key(const NuValue& v) {
  return v.special ? std::string("nu:s:") + nu_class_name(v.cls) : "nu:t:" + join_digits(v.w);
}

std::string colour_key(const MuValue& v) {
  if (v.whole) return "mu:w:" + colour_key(v.nu);
  return "mu:f:" + colour_key(v.nu) + '|' + colour_key(v.phi) + '|' + colour_key(v.psi_prime);
}

std::string colour_key(const AlphaValue& v) {
  switch (v.kind) {
    case AlphaCase::Natural: return "alpha:n:" + colour_key(v.theta);
    case AlphaCase::NegativePowerOfTwo: return "alpha:neg";
    case AlphaCase::Small: return "alpha:small";
    case AlphaCase::Big: return "alpha:b:" + join_digits(v.prime.c);
  }
  return "alpha:?";
}

std::string colour_key(const ColourValue& v) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, BitColour>) {
          return "bit:" + std::to_string(value.bit);
        } else if constexpr (std::is_same_v<T, ConstColour>) {
          return "const";
        } else {
          return colour_key(value);
        }
      },
      v);
}

ColourValue parse_colour_key(std::string_view key) {
  std::string_view text = key;
  if (text == "const") return ConstColour{};
  if (consume(text, "bit:")) return BitColour{parse_digit(text, 2, key)};
  if (text.substr(0, 4) == "phi:") return parse_phi(text, key);
  if (text.substr(0, 6) == "theta:") return parse_theta(text, key);
  if (text.substr(0, 3) == "nu:") return parse_nu(text, key);
  if (consume(text, "mu:w:")) {
    MuValue v;
    v.nu = parse_nu(text, key);
    return v;
  }
  if (consume(text, "mu:f:")) {
    const auto parts = split(text, '|');
    if (parts.size() != 3) bad_key(key);
    MuValue v;
    v.whole = false;
    v.nu = parse_nu(parts[0], key);
    v.phi = parse_phi(parts[1], key);
    v.psi_prime = parse_phi(parts[2], key);
    return v;
  }
  if (consume(text, "alpha:")) {
    AlphaValue v;
    if (text == "neg") {
      v.kind = AlphaCase::NegativePowerOfTwo;
    } else if (text == "small") {
      v.kind = AlphaCase::Small;
    } else if (consume(text, "n:")) {
      v.kind = AlphaCase::Natural;
      v.theta = parse_theta(text, key);
    } else if (consume(text, "b:")) {
      v.kind = AlphaCase::Big;
      v.prime.c = parse_digits<13>(text, {2, 2, 2, 2, 2, 2, 2, 3, 2, 2, 2, 2, 2}, key);
    } else {
      bad_key(key);
    }
    return v;
  }
  bad_key(key);
}

}  // namespace mono
