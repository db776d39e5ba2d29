#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "streamsub/types.hpp"

namespace streamsub {

// Set-function oracle.  evaluate() must be order-insensitive in its argument,
// return a non-negative value, and treat repeated ids as a caller bug (callers
// here never pass duplicates).  Implementations must be safe for concurrent
// read-only evaluation.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;
  virtual Val evaluate(const IdVec& s) const = 0;
  virtual bool is_monotone() const = 0;
  // Sorted, duplicate-free declared universe.
  virtual const IdVec& domain() const = 0;
};

// Counting wrapper.  Each algorithm instance owns one of these around the
// shared function so call counts can be reported per instance and merged;
// verification code uses a separate wrapper over the same function.  The
// counter is atomic so instances may evaluate concurrently.  Memoization is
// off by default: it changes call counts, which several tests pin down.
class InstrumentedOracle {
 public:
  explicit InstrumentedOracle(const SubmodularFunction& fn, bool memoize = false)
      : fn_(fn), memoize_(memoize) {}

  Val eval(const IdVec& s) const;

  const SubmodularFunction& fn() const { return fn_; }
  std::uint64_t calls() const { return calls_.load(); }
  std::uint64_t cache_hits() const { return hits_.load(); }

 private:
  const SubmodularFunction& fn_;
  bool memoize_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::mutex memo_mu_;
  mutable std::map<IdVec, Val> memo_;
};

// f_base(e) = f(base + e) - f(base).  Exactly two eval() calls (fewer only on
// memo hits).  Throws PreconditionError if e is already in base.
Val marginal(const InstrumentedOracle& oracle, const IdVec& base, ElemId e);

// Contraction f_Z: A -> f(Z u A) - f(Z), over domain() \ Z.  Submodular and
// possibly negative-free only if f is; used by the lemma checks.
class ContractedFunction : public SubmodularFunction {
 public:
  ContractedFunction(const SubmodularFunction& fn, IdVec z);
  Val evaluate(const IdVec& s) const override;
  bool is_monotone() const override { return fn_.is_monotone(); }
  const IdVec& domain() const override { return domain_; }

 private:
  const SubmodularFunction& fn_;
  IdVec z_;
  Val f_z_;
  IdVec domain_;
};

// Exhaustive check of f(A|B) + f(A&B) <= f(A) + f(B) over every pair of
// subsets of `ground`, plus non-negativity of every value.  Evaluates each of
// the 2^n subsets once, then compares by table lookup.  Throws LimitError if
// |ground| exceeds `limit` (default keeps this sub-second).
bool verify_submodular(const SubmodularFunction& fn, const IdVec& ground,
                       std::size_t limit = 12);

}  // namespace streamsub
