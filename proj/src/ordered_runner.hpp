#pragma once

// Runs independent top-level search branches on a worker pool while keeping
// the observable outcome identical to a sequential left-to-right run.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mono::detail {

struct BranchOutcome {
  std::uint64_t nodes = 0;
  bool truncated = false;   // stopped at the node cap
  bool finished = false;    // later branches are not needed
};

class CancelToken {
 public:
  CancelToken(const std::atomic<std::size_t>& cutoff, std::size_t index)
      : cutoff_(cutoff), index_(index) {}
  bool cancelled() const { return cutoff_.load(std::memory_order_relaxed) < index_; }

 private:
  const std::atomic<std::size_t>& cutoff_;
  std::size_t index_;
};

/// Calls fn(i, cancel) for i in [0, count). Each branch may spend up to
/// `budget` nodes; once the in-order prefix of completed branches exhausts
/// the budget or finishes, later branches are cancelled. An exception thrown
/// by a branch that a sequential run would reach is rethrown. Returns the
/// index of the last branch that matters (count - 1 when none cut the run
/// short).
template <class Fn>
std::size_t run_ordered(std::size_t count, std::uint64_t budget, unsigned workers, Fn&& fn) {
  if (count == 0) return 0;
  std::atomic<std::size_t> cutoff{count};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<BranchOutcome> outcomes(count);
  std::vector<char> done(count, 0);
  std::vector<std::exception_ptr> errors(count);
  std::size_t prefix = 0;
  std::uint64_t spent = 0;

  auto settle = [&](std::size_t i, const BranchOutcome& out) {
    std::lock_guard lock(mu);
    outcomes[i] = out;
    done[i] = 1;
    while (prefix < count && done[prefix] && cutoff.load() == count) {
      const BranchOutcome& o = outcomes[prefix];
      spent += o.nodes;
      if (o.truncated || o.finished || spent >= budget) cutoff.store(prefix);
      ++prefix;
    }
  };

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > cutoff.load()) return;
      BranchOutcome out;
      try {
        out = fn(i, CancelToken(cutoff, i));
      } catch (...) {
        errors[i] = std::current_exception();
        out.finished = true;
      }
      settle(i, out);
    }
  };

  const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  const std::size_t last = std::min(cutoff.load(), count - 1);
  for (std::size_t i = 0; i <= last; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  return last;
}

}  // namespace mono::detail
