#include "mono/json.hpp"

#include <type_traits>

#include "mono/primes.hpp"

namespace mono {

namespace {

Json phi_json(const PhiValue& v) {
  if (v.zero) return Json{{"kind", "phi"}, {"zero", true}};
  return Json{{"kind", "phi"}, {"zero", false}, {"c", v.c}};
}

Json theta_json(const ThetaValue& v) {
  return Json{{"kind", "theta"},
              {"power_of_two", v.power_of_two},
              {"end_parity", v.end_parity},
              {"gap_parity", v.gap_parity},
              {"inner", phi_json(v.inner)},
              {"inner_shift", phi_json(v.inner_shift)},
              {"phi_of_end", v.phi_of_end},
              {"t", v.t}};
}

Json nu_json(const NuValue& v) {
  if (v.special) return Json{{"kind", "nu"}, {"special", nu_class_name(v.cls)}};
  return Json{{"kind", "nu"}, {"w", v.w}};
}

Json mu_json(const MuValue& v) {
  Json j{{"kind", "mu"}, {"whole", v.whole}, {"nu", nu_json(v.nu)}};
  if (!v.whole) {
    j["phi"] = phi_json(v.phi);
    j["psi_prime"] = phi_json(v.psi_prime);
  }
  return j;
}

Json alpha_json(const AlphaValue& v) {
  switch (v.kind) {
    case AlphaCase::Natural:
      return Json{{"kind", "alpha"}, {"case", "natural"}, {"theta", theta_json(v.theta)}};
    case AlphaCase::NegativePowerOfTwo:
      return Json{{"kind", "alpha"}, {"case", "negative_power_of_two"}};
    case AlphaCase::Small:
      return Json{{"kind", "alpha"}, {"case", "small"}};
    case AlphaCase::Big:
      return Json{{"kind", "alpha"}, {"case", "big"}, {"alpha_prime", v.prime.c}};
  }
  return Json{};
}

Json strings(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

Json checked_json(const std::vector<CheckedCombination>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json{{"tag", c.tag}, {"value", c.value.str()}, {"colour", c.colour}});
  return out;
}

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::Parse, "certificate: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing \"") + key + "\"");
  return *it;
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) schema(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

Rational rational(const Json& v) {
  if (!v.is_string()) schema("rationals must be strings");
  return Rational::parse(v.get<std::string>());
}

std::size_t index(const Json& v) {
  if (!v.is_number_unsigned()) schema("clash entries must be non-negative integers");
  return v.get<std::size_t>();
}

}  // namespace

Json to_json(const ColourValue& v) {
  return std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, BitColour>) return Json{{"kind", "bit"}, {"bit", value.bit}};
        else if constexpr (std::is_same_v<T, PhiValue>) return phi_json(value);
        else if constexpr (std::is_same_v<T, ThetaValue>) return theta_json(value);
        else if constexpr (std::is_same_v<T, NuValue>) return nu_json(value);
        else if constexpr (std::is_same_v<T, MuValue>) return mu_json(value);
        else if constexpr (std::is_same_v<T, AlphaValue>) return alpha_json(value);
        else return Json{{"kind", "const"}};
      },
      v);
}

Json colour_document(const std::string& input, const ColourValue& v) {
  return Json{{"input", input}, {"colour", colour_key(v)}, {"value", to_json(v)}};
}

Json expansion_document(const std::string& input, const DigitExpansion& e) {
  Json digits = Json::array();
  for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
    Json d{{"pos", it->first}};
    if (it->second.fits_ulong_p()) d["digit"] = it->second.get_ui();
    else d["digit"] = it->second.get_str();
    digits.push_back(std::move(d));
  }
  return Json{{"input", input},
              {"base_index", e.base_index},
              {"base", primorial(e.base_index).get_str()},
              {"leading", e.leading()},
              {"trailing", e.trailing()},
              {"positional", e.positional()},
              {"digits", std::move(digits)}};
}

Json to_json(const Certificate& c) {
  Json verdict;
  if (c.monochromatic) {
    verdict = Json{{"monochromatic", c.empty ? Json(nullptr) : Json(c.key)}, {"empty", c.empty}};
  } else {
    verdict = Json{{"clash", {c.clash.first, c.clash.second}}};
  }
  return Json{{"colouring", colouring_name(c.colouring)},
              {"mode", mode_name(c.mode)},
              {"sequence", strings(c.sequence)},
              {"combinations", checked_json(c.combinations)},
              {"verdict", std::move(verdict)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.colouring = parse_colouring(text(j, "colouring"));
  c.mode = parse_mode(text(j, "mode"));
  const Json& seq = field(j, "sequence");
  if (!seq.is_array()) schema("\"sequence\" must be an array");
  for (const auto& x : seq) c.sequence.push_back(rational(x));
  const Json& combos = field(j, "combinations");
  if (!combos.is_array()) schema("\"combinations\" must be an array");
  for (const auto& e : combos) {
    c.combinations.push_back({text(e, "tag"), rational(field(e, "value")), text(e, "colour")});
  }
  const Json& verdict = field(j, "verdict");
  if (!verdict.is_object()) schema("\"verdict\" must be an object");
  if (verdict.contains("clash")) {
    const Json& pair = verdict["clash"];
    if (!pair.is_array() || pair.size() != 2) schema("\"clash\" must be a pair");
    c.monochromatic = false;
    c.clash = {index(pair[0]), index(pair[1])};
  } else {
    const Json& key = field(verdict, "monochromatic");
    const Json& empty = field(verdict, "empty");
    if (!empty.is_boolean()) schema("\"empty\" must be a boolean");
    c.empty = empty.get<bool>();
    if (key.is_string()) c.key = key.get<std::string>();
    else if (!key.is_null()) schema("\"monochromatic\" must be a key or null");
  }
  return c;
}

Json search_document(const UniverseSpec& universe, std::size_t universe_size,
                     const SearchOptions& options, const SearchResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  return Json{{"colouring", colouring_name(options.colouring)},
              {"mode", mode_name(options.mode)},
              {"target", options.target},
              {"budget", options.budget},
              {"universe",
               {{"prime_index", universe.prime_index_bound},
                {"numerator_bound", universe.numerator_bound.get_str()},
                {"denominator_bound", universe.denominator_bound.get_str()},
                {"integers_only", universe.integers_only},
                {"size", universe_size}}},
              {"nodes", r.nodes},
              {"exhaustive", r.exhaustive},
              {"max_size", r.max_size},
              {"max_witness", strings(r.max_witness)},
              {"certificates", std::move(certs)}};
}

Json construct_document(std::size_t m, bool sum_closed, const ConstructOptions& options,
                        const ConstructResult& r) {
  Json blocks = Json::array();
  for (const auto& b : r.system.blocks) blocks.push_back(b);
  Json primes = Json::array();
  for (std::size_t i : r.system.prime_indices) primes.push_back(nth_prime(i));
  Json j{{"terms_requested", m},
         {"kind", sum_closed ? "sum_closed" : "product_subsystem"},
         {"found", r.found},
         {"best_depth", r.best_depth},
         {"nodes", r.nodes},
         {"budget", options.budget},
         {"prime_indices", r.system.prime_indices},
         {"primes", std::move(primes)},
         {"blocks", std::move(blocks)},
         {"terms", strings(r.system.terms)},
         {"nu_key", r.found ? Json(r.nu_key) : Json(nullptr)},
         {"products", checked_json(r.products)}};
  j["certificate"] = r.found && sum_closed ? to_json(r.certificate) : Json(nullptr);
  return j;
}

Json properties_document(const PropertyReport& r) {
  Json laws = Json::array();
  for (const auto& law : r.laws) {
    laws.push_back(Json{{"name", law.name},
                        {"samples", law.samples},
                        {"passed", law.passed},
                        {"counterexample", law.passed ? Json(nullptr) : Json(law.counterexample)}});
  }
  return Json{{"seed", r.seed}, {"samples", r.samples}, {"all_passed", r.all_passed()}, {"laws", std::move(laws)}};
}

Json validation_document(const Validation& v) {
  return Json{{"valid", v.ok}, {"reason", v.ok ? Json(nullptr) : Json(v.reason)}};
}

}  // namespace mono
