#pragma once

// Finite sequences in (0, 1) whose finite sums and finite products are
// monochromatic under mu, built from products of reciprocal primes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mono/engine.hpp"
#include "mono/rational.hpp"

namespace mono {

/// nu is constant on (center, center + radius).
struct OpennessRadius {
  Rational center;
  Rational radius;
  std::string key;
};

/// Radius below every boundary of the nu partition lying above x. Throws
/// Domain when nu(x) is one of the special classes.
OpennessRadius openness_radius(const Rational& x);

/// r_1 = 2 (the term 1/3), then the consecutive prime indices with
/// p > 6 (count - 1), so the reciprocals sum to less than 1/2. Grows the
/// prime table as needed.
std::vector<std::size_t> reciprocal_prime_indices(std::size_t count);

/// s_k(z) = e_k(z) = -1 in the minimal base P_k of z, for 0 < z < 1.
bool minimal_digit_fact(const Rational& z);

struct ConstructOptions {
  std::size_t pool = 400;              // number of reciprocal-prime base terms
  std::size_t max_block = 96;          // largest block H_n
  std::size_t lookahead = 48;          // window for the completion terms of a block
  std::size_t level_cap = 4096;        // admissible candidates tried per term
  std::uint64_t budget = 20'000'000;   // blocks enumerated, over all branches
  unsigned workers = 1;
};

/// Terms y_n = prod over H_n of 1/p_(r_t).
struct BlockSystem {
  std::vector<std::size_t> prime_indices;        // r_1 < r_2 < ...
  std::vector<std::vector<std::size_t>> blocks;  // 1-based positions into the base terms
  std::vector<Rational> terms;
};

struct ConstructResult {
  bool found = false;
  std::size_t best_depth = 0;   // longest prefix reached when not found
  std::uint64_t nodes = 0;
  BlockSystem system;
  std::string nu_key;
  /// Product subsystems: the nu-coloured finite products. Sum-closed
  /// sequences: the mu certificate of all finite sums and products.
  Certificate certificate;
  std::vector<CheckedCombination> products;
};

/// Blocks whose 2^m - 1 finite products share one nu tuple class.
ConstructResult find_product_subsystem(std::size_t m, const ConstructOptions& options = {});

/// Terms whose finite sums and products are all mu-monochromatic: each new
/// term lies below the openness radius of every earlier subset sum and below
/// every earlier term, and keeps the product set nu-monochromatic.
ConstructResult extend_sum_closed(std::size_t m, const ConstructOptions& options = {});

}  // namespace mono
