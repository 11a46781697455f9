#include "mono/engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "mono/primes.hpp"
#include "ordered_runner.hpp"

namespace mono {

namespace {

std::string subset_tag(char kind, const std::vector<std::size_t>& members) {
  std::string tag(1, kind);
  tag += ':';
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) tag += ',';
    tag += std::to_string(members[i] + 1);
  }
  return tag;
}

// Nonempty subsets of {0..k-1}, by size and then lexicographically.
std::vector<std::vector<std::size_t>> ordered_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      out.push_back(pick);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::string colour_or_explain(ColouringId id, const Combination& c) {
  try {
    return colour_key(colour_of(id, c.value));
  } catch (const Error& e) {
    fail(e.kind(), c.tag + " = " + c.value.str() + ": " + e.what());
  }
}

}  // namespace

const char* mode_name(CombinationMode mode) noexcept {
  return mode == CombinationMode::Pairwise ? "pairwise" : "finite";
}

CombinationMode parse_mode(std::string_view name) {
  if (name == "pairwise") return CombinationMode::Pairwise;
  if (name == "finite") return CombinationMode::FiniteFSFP;
  fail(ErrorKind::Parse, "unknown mode '" + std::string(name) + "'");
}

std::vector<Combination> combinations(const std::vector<Rational>& xs, CombinationMode mode) {
  std::unordered_set<Rational, RationalHash> seen;
  for (const Rational& x : xs) {
    if (!seen.insert(x).second) fail(ErrorKind::Domain, "repeated term " + x.str());
  }
  std::vector<Combination> out;
  const std::size_t k = xs.size();
  if (mode == CombinationMode::Pairwise) {
    for (char kind : {'s', 'p'}) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          out.push_back({subset_tag(kind, {i, j}), kind == 's' ? xs[i] + xs[j] : xs[i] * xs[j]});
        }
      }
    }
    return out;
  }
  if (k > 20) fail(ErrorKind::OutOfRange, "finite sums and products need at most 20 terms");
  const auto subsets = ordered_subsets(k);
  for (char kind : {'s', 'p'}) {
    for (const auto& members : subsets) {
      Rational v = xs[members[0]];
      for (std::size_t i = 1; i < members.size(); ++i) {
        v = kind == 's' ? v + xs[members[i]] : v * xs[members[i]];
      }
      out.push_back({subset_tag(kind, members), v});
    }
  }
  return out;
}

Certificate check(ColouringId colouring, const std::vector<Rational>& xs, CombinationMode mode) {
  Certificate cert;
  cert.colouring = colouring;
  cert.mode = mode;
  cert.sequence = xs;
  for (auto& c : combinations(xs, mode)) {
    std::string key = colour_or_explain(colouring, c);
    cert.combinations.push_back({std::move(c.tag), std::move(c.value), std::move(key)});
  }
  cert.empty = cert.combinations.empty();
  if (cert.empty) return cert;
  cert.key = cert.combinations[0].colour;
  for (std::size_t j = 1; j < cert.combinations.size(); ++j) {
    if (cert.combinations[j].colour != cert.key) {
      cert.monochromatic = false;
      cert.key.clear();
      cert.clash = {0, j};
      break;
    }
  }
  return cert;
}

Validation validate(const Certificate& cert) {
  Certificate fresh;
  try {
    fresh = check(cert.colouring, cert.sequence, cert.mode);
  } catch (const Error& e) {
    return {false, std::string("recomputation failed: ") + e.what()};
  }
  if (fresh.combinations.size() != cert.combinations.size()) {
    return {false, "expected " + std::to_string(fresh.combinations.size()) + " combinations, found " +
                       std::to_string(cert.combinations.size())};
  }
  for (std::size_t i = 0; i < fresh.combinations.size(); ++i) {
    const auto& want = fresh.combinations[i];
    const auto& got = cert.combinations[i];
    if (want.tag != got.tag) return {false, "entry " + std::to_string(i) + " has tag " + got.tag};
    if (want.value != got.value) return {false, "wrong value for " + got.tag};
    if (want.colour != got.colour) return {false, "wrong colour for " + got.tag};
  }
  if (fresh.empty != cert.empty) return {false, "wrong empty flag"};
  if (fresh.monochromatic != cert.monochromatic) return {false, "wrong verdict"};
  if (fresh.monochromatic && fresh.key != cert.key) return {false, "wrong monochromatic key"};
  if (!fresh.monochromatic && fresh.clash != cert.clash) return {false, "wrong clash pair"};
  return {};
}

std::vector<Rational> enumerate_universe(const UniverseSpec& spec) {
  if (spec.numerator_bound < 1 || spec.denominator_bound < 1) {
    fail(ErrorKind::Domain, "universe bounds must be at least 1");
  }
  if (spec.prime_index_bound < 1) fail(ErrorKind::Domain, "prime index bound must be at least 1");
  if (!spec.numerator_bound.fits_ulong_p() || !spec.denominator_bound.fits_ulong_p()) {
    fail(ErrorKind::OutOfRange, "universe bounds must fit in 64 bits");
  }
  const auto table = prime_table();
  if (spec.prime_index_bound > table->size()) reserve_primes(spec.prime_index_bound);
  std::vector<unsigned long> primes;
  for (std::size_t n = 1; n <= spec.prime_index_bound; ++n) primes.push_back(nth_prime(n));

  const unsigned long max_den = spec.integers_only ? 1 : spec.denominator_bound.get_ui();
  const unsigned long max_num = spec.numerator_bound.get_ui();
  std::vector<unsigned long> dens{1};
  for (unsigned long p : primes) {
    const std::size_t have = dens.size();
    for (std::size_t i = 0; i < have; ++i) {
      for (unsigned long d = dens[i]; d <= max_den / p;) {
        d *= p;
        dens.push_back(d);
      }
    }
  }
  std::sort(dens.begin(), dens.end());
  std::vector<Rational> out;
  for (unsigned long q : dens) {
    for (unsigned long p = 1; p <= max_num; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(mpz_class(p), mpz_class(q));
    }
  }
  return out;
}

namespace {

struct Found {
  std::uint64_t node;                 // 1-based node index within the branch
  std::vector<std::size_t> members;
};

struct BranchResult {
  std::vector<Found> targets;
  std::vector<Found> records;         // each strictly larger than the last
};

// Depth-first walk of one top-level branch with a per-branch colour cache.
class BranchSearch {
 public:
  BranchSearch(const std::vector<Rational>& universe, const SearchOptions& options,
               std::uint64_t cap, const detail::CancelToken& cancel)
      : u_(universe), opt_(options), cap_(cap), cancel_(cancel) {}

  detail::BranchOutcome run(std::size_t first, BranchResult& out) {
    out_ = &out;
    detail::BranchOutcome outcome;
    if (try_extend(first)) descend();
    outcome.nodes = nodes_;
    outcome.truncated = truncated_;
    return outcome;
  }

 private:
  int key_id(const Rational& v) {
    auto it = colour_cache_.find(v);
    if (it != colour_cache_.end()) return it->second;
    std::string key = colour_key(colour_of(opt_.colouring, v));
    auto [kit, fresh] = key_ids_.emplace(std::move(key), static_cast<int>(key_ids_.size()));
    (void)fresh;
    colour_cache_.emplace(v, kit->second);
    return kit->second;
  }

  // Counts a node and tries to append universe[j]; on success the state is
  // extended and true is returned.
  bool try_extend(std::size_t j) {
    if (nodes_ >= cap_ || (nodes_ % 1024 == 0 && cancel_.cancelled())) {
      truncated_ = true;
      return false;
    }
    ++nodes_;
    const Rational& x = u_[j];
    const std::size_t sums_before = sums_.size();
    const int key_before = key_;
    bool ok = true;
    if (opt_.mode == CombinationMode::Pairwise) {
      for (std::size_t i : chosen_) {
        if (!accept(key_id(u_[i] + x)) || !accept(key_id(u_[i] * x))) {
          ok = false;
          break;
        }
      }
    } else {
      ok = accept(key_id(x));
      for (std::size_t i = 0; ok && i < sums_before; ++i) {
        Rational s = sums_[i] + x;
        Rational p = prods_[i] * x;
        if (!accept(key_id(s)) || !accept(key_id(p))) ok = false;
        else {
          sums_.push_back(std::move(s));
          prods_.push_back(std::move(p));
        }
      }
      if (ok) {
        sums_.push_back(x);
        prods_.push_back(x);
      }
    }
    if (!ok) {
      sums_.resize(sums_before);
      prods_.resize(sums_before);
      key_ = key_before;
      return false;
    }
    chosen_.push_back(j);
    record();
    return true;
  }

  bool accept(int id) {
    if (key_ < 0) key_ = id;
    return key_ == id;
  }

  void record() {
    const std::size_t size = chosen_.size();
    if (size == opt_.target) out_->targets.push_back({nodes_, chosen_});
    if (size > best_) {
      best_ = size;
      out_->records.push_back({nodes_, chosen_});
    }
  }

  void undo(std::size_t sums_before, int key_before) {
    chosen_.pop_back();
    sums_.resize(sums_before);
    prods_.resize(sums_before);
    key_ = key_before;
  }

  void descend() {
    for (std::size_t j = chosen_.back() + 1; j < u_.size(); ++j) {
      const std::size_t sums_before = sums_.size();
      const int key_before = key_;
      if (try_extend(j)) {
        descend();
        undo(sums_before, key_before);
      }
      if (truncated_) return;
    }
  }

  const std::vector<Rational>& u_;
  const SearchOptions& opt_;
  std::uint64_t cap_;
  const detail::CancelToken& cancel_;
  BranchResult* out_ = nullptr;
  std::unordered_map<Rational, int, RationalHash> colour_cache_;
  std::unordered_map<std::string, int> key_ids_;
  std::vector<std::size_t> chosen_;
  std::vector<Rational> sums_, prods_;   // FiniteFSFP only
  int key_ = -1;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
  bool truncated_ = false;
};

std::vector<Rational> pick(const std::vector<Rational>& universe,
                           const std::vector<std::size_t>& members) {
  std::vector<Rational> out;
  out.reserve(members.size());
  for (std::size_t i : members) out.push_back(universe[i]);
  return out;
}

}  // namespace

SearchResult search(const std::vector<Rational>& universe, const SearchOptions& options) {
  if (options.target < 2) fail(ErrorKind::Domain, "search target must be at least 2");
  if (options.budget < 1) fail(ErrorKind::Domain, "search budget must be at least 1");
  if (is_pair_colouring(options.colouring)) {
    fail(ErrorKind::Domain, std::string(colouring_name(options.colouring)) +
                                " colours integer pairs and cannot be searched");
  }
  std::unordered_set<Rational, RationalHash> seen(universe.begin(), universe.end());
  if (seen.size() != universe.size()) fail(ErrorKind::Domain, "universe has repeated elements");

  const std::size_t count = universe.size();
  std::vector<BranchResult> branches(count);
  std::vector<detail::BranchOutcome> outcomes(count);
  const std::size_t last = detail::run_ordered(
      count, options.budget, options.workers,
      [&](std::size_t i, const detail::CancelToken& cancel) {
        BranchSearch walker(universe, options, options.budget, cancel);
        outcomes[i] = walker.run(i, branches[i]);
        return outcomes[i];
      });

  SearchResult result;
  std::uint64_t remaining = options.budget;
  for (std::size_t i = 0; i < count && i <= last; ++i) {
    const auto& o = outcomes[i];
    const bool cut = o.truncated || o.nodes > remaining;
    const std::uint64_t limit = std::min(o.nodes, remaining);
    for (const auto& f : branches[i].targets) {
      if (f.node <= limit) result.certificates.push_back(check(options.colouring, pick(universe, f.members), options.mode));
    }
    for (const auto& f : branches[i].records) {
      if (f.node <= limit && f.members.size() > result.max_size) {
        result.max_size = f.members.size();
        result.max_witness = pick(universe, f.members);
      }
    }
    result.nodes += limit;
    remaining -= limit;
    if (cut || (remaining == 0 && i + 1 < count)) {
      result.exhaustive = false;
      break;
    }
  }
  return result;
}

}  // namespace mono
