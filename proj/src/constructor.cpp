#include "mono/constructor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "mono/colourings.hpp"
#include "mono/digits.hpp"
#include "mono/primes.hpp"
#include "ordered_runner.hpp"

namespace mono {

namespace {

// Under-approximates sqrt(s) - x for x^2 < s: (x + d)^2 < s is checked exactly.
mpq_class surd_gap(const mpq_class& x, const mpq_class& s) {
  mpq_class d = (s - x * x) / (4 * x);
  while ((x + d) * (x + d) >= s) d /= 2;
  return d;
}

constexpr std::size_t kMaxPrimeTable = std::size_t{1} << 22;

}  // namespace

OpennessRadius openness_radius(const Rational& x) {
  const NuValue colour = nu(x);
  if (colour.special) {
    fail(ErrorKind::Domain, x.str() + " lies in the special class " +
                                nu_class_name(colour.cls) + " and has no open neighbourhood");
  }
  const Exponent a = a_exponent(x);
  const Exponent b = b_exponent(x);
  const Exponent c = c_exponent(x);
  const mpq_class& v = x.value();
  mpq_class gap = pow2_q(a + 1) - v;
  gap = std::min(gap, mpq_class(pow2_q(a) + pow2_q(b + 1) - v));
  gap = std::min(gap, mpq_class(pow2_q(a + 1) - pow2_q(c) - v));
  mpq_class radius = gap / 2;
  for (const mpq_class& square : {pow2_q(2 * a + 1), mpq_class(pow2_q(2 * a + 2) - pow2_q(a + c + 2))}) {
    if (v * v < square) radius = std::min(radius, surd_gap(v, square));
  }
  radius.canonicalize();
  return {x, Rational::from_mpq(radius), colour_key(colour)};
}

std::vector<std::size_t> reciprocal_prime_indices(std::size_t count) {
  if (count < 1) fail(ErrorKind::Domain, "at least one reciprocal prime is needed");
  std::vector<std::size_t> out{2};
  const std::uint64_t floor_prime = 6 * static_cast<std::uint64_t>(count - 1);
  std::size_t n = 3;
  while (out.size() < count) {
    if (n > prime_table_size()) {
      if (n > kMaxPrimeTable) fail(ErrorKind::OutOfRange, "prime table exhausted");
      reserve_primes(std::min(kMaxPrimeTable, std::max<std::size_t>(2 * n, 256)));
    }
    if (nth_prime(n) > floor_prime) out.push_back(n);
    ++n;
  }
  return out;
}

bool minimal_digit_fact(const Rational& z) {
  if (z.num() >= z.den()) fail(ErrorKind::OutOfRange, "the digit fact needs 0 < z < 1, got " + z.str());
  const std::size_t k = minimal_base_index(z);
  return s_frac(z, k) == -1 && e_frac(z, k) == -1;
}

namespace {

struct Pool {
  std::vector<std::size_t> prime_indices;
  std::vector<mpz_class> primes;
  std::vector<double> log2p;
};

Pool make_pool(std::size_t count) {
  Pool pool;
  pool.prime_indices = reciprocal_prime_indices(count);
  for (std::size_t r : pool.prime_indices) {
    const std::uint64_t p = nth_prime(r);
    pool.primes.emplace_back(static_cast<unsigned long>(p));
    pool.log2p.push_back(std::log2(static_cast<double>(p)));
  }
  return pool;
}

struct DepthEvent {
  std::uint64_t node;
  std::size_t depth;
};

struct Solution {
  std::vector<std::vector<std::size_t>> blocks;   // 0-based pool positions
  std::vector<Rational> terms;
  std::string key;
};

// Backtracking over block choices for terms y_1, y_2, ... in order.
class Builder {
 public:
  Builder(const Pool& pool, std::size_t m, bool with_sums, const ConstructOptions& opt,
          std::uint64_t cap, const detail::CancelToken* cancel)
      : pool_(pool), m_(m), with_sums_(with_sums), opt_(opt), cap_(cap), cancel_(cancel) {}

  // Visits admissible next blocks in order; stops when visit returns true.
  // A block is a run of k consecutive unused base terms followed by at most
  // two completion terms from the next `lookahead` positions.
  bool each_candidate(const std::function<bool(std::vector<std::size_t>&, Rational&)>& visit) {
    const std::size_t pos = blocks_.empty() ? 0 : blocks_.back().back() + 1;
    const std::size_t n = pool_.primes.size();
    const bool bounded = !bound_.empty();
    const double log_bound = bounded ? log2_of(bound_.back()) : 0.0;
    std::size_t tried = 0;
    std::vector<std::size_t> block;
    double fill = 0.0;
    for (std::size_t k = 0; pos + k <= n && k <= opt_.max_block; ++k) {
      if (k > 0) fill -= pool_.log2p[pos + k - 1];
      const std::size_t w0 = pos + k;
      const std::size_t w1 = std::min(n, w0 + opt_.lookahead);
      for (std::size_t extra = 0; extra <= 2 && k + extra <= opt_.max_block; ++extra) {
        if (k + extra == 0) continue;
        std::array<std::size_t, 2> t{w0, w0 + 1};
        if (extra > w1 - w0) break;
        while (true) {
          if (!count_node()) return false;
          double ly = fill;
          for (std::size_t i = 0; i < extra; ++i) ly -= pool_.log2p[t[i]];
          if ((!bounded || ly < log_bound + 1e-9) && admissible(ly)) {
            block.clear();
            for (std::size_t i = pos; i < w0; ++i) block.push_back(i);
            for (std::size_t i = 0; i < extra; ++i) block.push_back(t[i]);
            mpz_class denominator = 1;
            for (std::size_t i : block) denominator *= pool_.primes[i];
            Rational y(mpz_class(1), denominator);
            if (!bounded || y < bound_.back()) {
              if (++tried > opt_.level_cap) return false;
              if (visit(block, y)) return true;
              if (truncated_) return false;
            }
          }
          if (extra == 0) break;
          if (extra == 1) {
            if (++t[0] >= w1) break;
          } else if (++t[1] >= w1) {
            if (++t[0] + 1 >= w1) break;
            t[1] = t[0] + 1;
          }
        }
      }
    }
    return false;
  }

  // Tries y as the next term; on success the state is extended.
  bool push(const std::vector<std::size_t>& block, const Rational& y) {
    const NuValue colour = nu(y);
    if (colour.special) return false;
    const std::string key = colour_key(colour);
    if (!key_.empty() && key != key_) return false;
    std::vector<Rational> new_products{y};
    for (const Rational& p : products_) {
      Rational q = p * y;
      if (colour_key(nu(q)) != key) return false;
      new_products.push_back(std::move(q));
    }
    std::vector<Rational> new_sums;
    Rational bound = y;
    if (with_sums_) {
      new_sums.push_back(y);
      for (const Rational& s : sums_) new_sums.push_back(s + y);
      for (const Rational& s : new_sums) {
        const OpennessRadius open = openness_radius(s);
        if (open.key != key) {
          fail(ErrorKind::InternalInvariant, "sum " + s.str() + " left the colour class " + key);
        }
        bound = std::min(bound, open.radius);
      }
      if (!bound_.empty()) bound = std::min(bound, bound_.back());
    }
    if (key_.empty()) {
      key_ = key;
      phi_ = colour.w[1];
    }
    const Exponent a = a_exponent(y);
    const std::size_t known = exponent_sums_.size();
    if (known == 0) exponent_sums_.push_back(0);
    for (std::size_t i = 0; i < std::max<std::size_t>(known, 1); ++i) {
      exponent_sums_.push_back(exponent_sums_[i] + a);
    }
    cells_.push_back(cell_of(log2_of(y)));
    blocks_.push_back(block);
    terms_.push_back(y);
    products_.insert(products_.end(), new_products.begin(), new_products.end());
    sums_.insert(sums_.end(), new_sums.begin(), new_sums.end());
    bound_.push_back(std::move(bound));
    if (blocks_.size() > best_) {
      best_ = blocks_.size();
      events_.push_back({nodes_, best_});
    }
    return true;
  }

  void pop() {
    const std::size_t k = terms_.size();
    blocks_.pop_back();
    terms_.pop_back();
    products_.resize(products_.size() - (std::size_t{1} << (k - 1)));
    if (with_sums_) sums_.resize(sums_.size() - (std::size_t{1} << (k - 1)));
    bound_.pop_back();
    cells_.pop_back();
    exponent_sums_.resize(terms_.empty() ? 0 : exponent_sums_.size() / 2);
    if (terms_.empty()) key_.clear();
  }

  bool descend() {
    if (terms_.size() == m_) return true;
    return each_candidate([&](std::vector<std::size_t>& block, Rational& y) {
      if (!push(block, y)) return false;
      if (descend()) return true;
      pop();
      return false;
    });
  }

  Solution solution() const { return {blocks_, terms_, key_}; }
  std::uint64_t nodes() const { return nodes_; }
  bool truncated() const { return truncated_; }
  const std::vector<DepthEvent>& events() const { return events_; }

 private:
  // Cheap floating-point screen: y = 2^a (1 + r) with 2^-j <= r < 1.5 * 2^-j,
  // j >= 3 in the residue class mod 3 of the earlier terms and not yet used,
  // and phi constant on a plus every earlier subset exponent sum. Exact
  // colours decide afterwards.
  bool admissible(double log2y) const {
    if (m_ == 1) return true;
    const double a = std::floor(log2y);
    const double r = std::exp2(log2y - a) - 1.0;
    if (r <= 0.0) return false;
    const auto j = static_cast<int>(std::floor(-std::log2(r)));
    if (j < 3 || r * std::exp2(j) >= 1.5) return false;
    if (cells_.empty()) return true;
    if (j % 3 != cells_.front() % 3) return false;
    if (std::find(cells_.begin(), cells_.end(), j) != cells_.end()) return false;
    const auto e = static_cast<Exponent>(a);
    for (Exponent s : exponent_sums_) {
      if (phi(e + s) != phi_) return false;
    }
    return true;
  }

  static int cell_of(double log2y) {
    const double r = std::exp2(log2y - std::floor(log2y)) - 1.0;
    return r > 0.0 ? static_cast<int>(std::floor(-std::log2(r))) : 0;
  }

  static double log2_of(const Rational& x) {
    long exp_num = 0, exp_den = 0;
    const double num = mpz_get_d_2exp(&exp_num, x.num().get_mpz_t());
    const double den = mpz_get_d_2exp(&exp_den, x.den().get_mpz_t());
    return std::log2(num / den) + static_cast<double>(exp_num - exp_den);
  }

  bool count_node() {
    if (nodes_ >= cap_ || (cancel_ && nodes_ % 4096 == 0 && cancel_->cancelled())) {
      truncated_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  const Pool& pool_;
  std::size_t m_;
  bool with_sums_;
  const ConstructOptions& opt_;
  std::uint64_t cap_;
  const detail::CancelToken* cancel_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<Rational> terms_;
  std::vector<Rational> products_;   // all subset products, grouped by newest term
  std::vector<Rational> sums_;
  std::vector<Rational> bound_;      // admissible upper bound for the next term
  std::string key_;
  int phi_ = 0;
  std::vector<Exponent> exponent_sums_;   // sums of a over every subset of the terms
  std::vector<int> cells_;                // j of each term
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
  bool truncated_ = false;
  std::vector<DepthEvent> events_;
};

struct FirstChoice {
  std::vector<std::size_t> block;
  Rational y;
  std::uint64_t node;   // enumeration nodes spent up to and including this choice
};

struct BranchState {
  bool found = false;
  Solution solution;
  std::vector<DepthEvent> events;
};

ConstructResult run_construction(std::size_t m, bool with_sums, const ConstructOptions& opt) {
  if (m < 1) fail(ErrorKind::Domain, "at least one term is needed");
  if (m > 12) fail(ErrorKind::OutOfRange, "at most 12 terms are supported");
  if (opt.max_block < 1 || opt.level_cap < 1 || opt.budget < 1) {
    fail(ErrorKind::Domain, "block size, level cap and budget must be positive");
  }
  const Pool pool = make_pool(std::max<std::size_t>(opt.pool, 1));

  // The first term's candidates are enumerated up front; each one roots an
  // independent branch.
  std::vector<FirstChoice> firsts;
  Builder scout(pool, m, with_sums, opt, opt.budget, nullptr);
  scout.each_candidate([&](std::vector<std::size_t>& block, Rational& y) {
    firsts.push_back({block, y, scout.nodes()});
    return false;
  });
  const std::uint64_t scout_nodes = scout.nodes();

  std::vector<BranchState> states(firsts.size());
  std::vector<detail::BranchOutcome> outcomes(firsts.size());
  const std::size_t last = detail::run_ordered(
      firsts.size(), opt.budget, opt.workers,
      [&](std::size_t i, const detail::CancelToken& cancel) {
        Builder builder(pool, m, with_sums, opt, opt.budget, &cancel);
        detail::BranchOutcome out;
        if (builder.push(firsts[i].block, firsts[i].y)) {
          states[i].found = builder.descend();
        }
        if (states[i].found) states[i].solution = builder.solution();
        states[i].events = builder.events();
        out.nodes = builder.nodes();
        out.truncated = builder.truncated();
        out.finished = states[i].found;
        outcomes[i] = out;
        return out;
      });

  ConstructResult result;
  std::uint64_t spent = 0;
  bool exhausted = scout.truncated();
  for (std::size_t i = 0; i < firsts.size() && i <= last && !exhausted; ++i) {
    const std::uint64_t start = firsts[i].node + spent;
    if (start > opt.budget) {
      exhausted = true;
      break;
    }
    const std::uint64_t remaining = opt.budget - start;
    const auto& o = outcomes[i];
    result.best_depth = std::max<std::size_t>(result.best_depth, 1);
    for (const auto& e : states[i].events) {
      if (e.node <= remaining) result.best_depth = std::max(result.best_depth, e.depth);
    }
    if (states[i].found && o.nodes <= remaining) {
      result.found = true;
      result.nodes = start + o.nodes;
      const Solution& s = states[i].solution;
      result.nu_key = s.key;
      result.system.terms = s.terms;
      for (const auto& block : s.blocks) {
        std::vector<std::size_t> positions;
        for (std::size_t p : block) positions.push_back(p + 1);
        result.system.blocks.push_back(std::move(positions));
      }
      result.system.prime_indices = pool.prime_indices;
      return result;
    }
    if (o.truncated || o.nodes > remaining) exhausted = true;
    spent += o.nodes;
  }
  result.nodes = std::min(opt.budget, scout_nodes + spent);
  return result;
}

// Trims the base terms to those the blocks use.
void trim_pool(BlockSystem& system) {
  std::size_t used = 0;
  for (const auto& block : system.blocks) used = std::max(used, block.back());
  system.prime_indices.resize(used);
}

std::vector<CheckedCombination> colour_products(const std::vector<Rational>& terms) {
  std::vector<CheckedCombination> out;
  for (auto& c : combinations(terms, CombinationMode::FiniteFSFP)) {
    if (c.tag[0] != 'p') continue;
    std::string key = colour_key(nu(c.value));
    out.push_back({std::move(c.tag), std::move(c.value), std::move(key)});
  }
  return out;
}

}  // namespace

ConstructResult find_product_subsystem(std::size_t m, const ConstructOptions& options) {
  ConstructResult result = run_construction(m, false, options);
  if (!result.found) return result;
  trim_pool(result.system);
  result.products = colour_products(result.system.terms);
  for (const auto& p : result.products) {
    if (p.colour != result.nu_key) {
      fail(ErrorKind::InternalInvariant, "product " + p.tag + " left the colour class");
    }
  }
  return result;
}

ConstructResult extend_sum_closed(std::size_t m, const ConstructOptions& options) {
  ConstructResult result = run_construction(m, true, options);
  if (!result.found) return result;
  trim_pool(result.system);
  result.products = colour_products(result.system.terms);
  result.certificate = check(ColouringId::Mu, result.system.terms, CombinationMode::FiniteFSFP);
  if (!result.certificate.monochromatic) {
    fail(ErrorKind::InternalInvariant, "constructed sequence is not mu-monochromatic");
  }
  for (const auto& c : result.certificate.combinations) {
    if (!minimal_digit_fact(c.value)) {
      fail(ErrorKind::InternalInvariant, c.tag + " = " + c.value.str() + " breaks the digit fact");
    }
  }
  return result;
}

}  // namespace mono
