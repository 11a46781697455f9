#pragma once

// Sums-and-products combination sets, monochromaticity certificates and the
// bounded configuration search.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mono/colourings.hpp"
#include "mono/rational.hpp"

namespace mono {

enum class CombinationMode { Pairwise, FiniteFSFP };

/// "pairwise" or "finite".
const char* mode_name(CombinationMode mode) noexcept;
CombinationMode parse_mode(std::string_view name);

/// One expression over the sequence. Tags are "s:i,j,.." for sums and
/// "p:i,j,.." for products, with 1-based term indices.
struct Combination {
  std::string tag;
  Rational value;
};

/// Pairwise: x_i + x_j then x_i * x_j for i < j. FiniteFSFP: sums then
/// products over nonempty subsets ordered by size, then lexicographically.
/// Throws Domain on repeated terms.
std::vector<Combination> combinations(const std::vector<Rational>& xs, CombinationMode mode);

struct CheckedCombination {
  std::string tag;
  Rational value;
  std::string colour;
};

struct Certificate {
  ColouringId colouring = ColouringId::Const;
  CombinationMode mode = CombinationMode::Pairwise;
  std::vector<Rational> sequence;
  std::vector<CheckedCombination> combinations;
  bool monochromatic = true;
  bool empty = false;          // no combinations at all (vacuous verdict)
  std::string key;             // shared key when monochromatic and not empty
  std::pair<std::size_t, std::size_t> clash{0, 0};
};

/// Colours every combination. A clash cites entry 0 and the first entry whose
/// key differs from it. Domain errors name the offending combination.
Certificate check(ColouringId colouring, const std::vector<Rational>& xs, CombinationMode mode);

struct Validation {
  bool ok = true;
  std::string reason;
};

/// Recomputes every value, colour and the verdict from the sequence.
Validation validate(const Certificate& cert);

/// A finite slice of Q_(k): p/q with q <= denominator_bound built from the
/// first k primes, p <= numerator_bound, gcd(p, q) = 1.
struct UniverseSpec {
  std::size_t prime_index_bound = 1;
  mpz_class numerator_bound = 16;
  mpz_class denominator_bound = 1;
  bool integers_only = false;
};

/// Universe elements ordered by denominator, then numerator.
std::vector<Rational> enumerate_universe(const UniverseSpec& spec);

struct SearchOptions {
  ColouringId colouring = ColouringId::Const;
  CombinationMode mode = CombinationMode::Pairwise;
  std::size_t target = 2;
  std::uint64_t budget = 1'000'000;   // node limit
  unsigned workers = 1;
};

struct SearchResult {
  std::vector<Certificate> certificates;   // every monochromatic set of target size
  std::size_t max_size = 0;
  std::vector<Rational> max_witness;       // first set of maximum size in search order
  std::uint64_t nodes = 0;
  bool exhaustive = true;
};

/// Depth-first search over increasing index sequences of the universe,
/// pruning as soon as the combinations stop sharing one colour key. The
/// result does not depend on the worker count.
SearchResult search(const std::vector<Rational>& universe, const SearchOptions& options);

}  // namespace mono
