#pragma once

// JSON documents for every result type. Keys are emitted in a fixed order so
// serialized output is byte-stable.

#include <string>

#include <json.hpp>

#include "mono/colour.hpp"
#include "mono/constructor.hpp"
#include "mono/digits.hpp"
#include "mono/engine.hpp"
#include "mono/properties.hpp"

namespace mono {

using Json = nlohmann::ordered_json;

/// Structured colour, e.g. {"kind":"nu","w":[0,1,2,1,1]}.
Json to_json(const ColourValue& v);

/// {"input","colour","value"}.
Json colour_document(const std::string& input, const ColourValue& v);

/// {"input","base_index","leading","trailing","positional","digits":[{"pos","digit"}]}.
/// Digits are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json expansion_document(const std::string& input, const DigitExpansion& e);

/// {"colouring","mode","sequence","combinations":[{"tag","value","colour"}],"verdict"}
/// with verdict {"clash":[i,j]} or {"monochromatic":key,"empty":bool}; the
/// key is null for an empty verdict.
Json to_json(const Certificate& c);

/// Inverse of to_json(Certificate); throws Parse on schema violations.
Certificate certificate_from_json(const Json& j);

/// {"colouring","mode","target","budget","universe":{...},"nodes","exhaustive",
///  "max_size","max_witness","certificates"}.
Json search_document(const UniverseSpec& universe, std::size_t universe_size,
                     const SearchOptions& options, const SearchResult& r);

/// {"terms_requested","kind","found","best_depth","nodes","budget","prime_indices",
///  "blocks","terms","nu_key","products","certificate"}.
Json construct_document(std::size_t m, bool sum_closed, const ConstructOptions& options,
                        const ConstructResult& r);

/// {"seed","samples","all_passed","laws":[{"name","samples","passed","counterexample"}]}.
Json properties_document(const PropertyReport& r);

/// {"valid","reason"}; reason is null for valid certificates.
Json validation_document(const Validation& v);

}  // namespace mono
