#include "streamsub/oracle.hpp"

#include <algorithm>

#include "streamsub/errors.hpp"

namespace streamsub {

Val InstrumentedOracle::eval(const IdVec& s) const {
  if (memoize_) {
    IdVec key = sorted_copy(s);
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
    calls_.fetch_add(1, std::memory_order_relaxed);
    Val v = fn_.evaluate(key);
    memo_.emplace(std::move(key), v);
    return v;
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return fn_.evaluate(s);
}

Val marginal(const InstrumentedOracle& oracle, const IdVec& base, ElemId e) {
  if (contains(base, e))
    throw PreconditionError("marginal: element " + std::to_string(e) +
                            " already in base set");
  IdVec with = base;
  with.push_back(e);
  return oracle.eval(with) - oracle.eval(base);
}

ContractedFunction::ContractedFunction(const SubmodularFunction& fn, IdVec z)
    : fn_(fn), z_(std::move(z)) {
  f_z_ = fn_.evaluate(z_);
  for (ElemId e : fn_.domain())
    if (!contains(z_, e)) domain_.push_back(e);
}

Val ContractedFunction::evaluate(const IdVec& s) const {
  IdVec u = z_;
  for (ElemId e : s) {
    if (contains(z_, e))
      throw PreconditionError("contracted evaluate: element overlaps Z");
    u.push_back(e);
  }
  return fn_.evaluate(u) - f_z_;
}

bool verify_submodular(const SubmodularFunction& fn, const IdVec& ground,
                       std::size_t limit) {
  const std::size_t n = ground.size();
  if (n > limit)
    throw LimitError("verify_submodular: ground of " + std::to_string(n) +
                     " exceeds exhaustive limit " + std::to_string(limit));
  const std::size_t total = std::size_t{1} << n;
  std::vector<Val> table(total);
  IdVec subset;
  for (std::size_t mask = 0; mask < total; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(ground[i]);
    table[mask] = fn.evaluate(subset);
    if (table[mask] < 0) return false;  // oracle contract: non-negative
  }
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b)
      if (table[a | b] + table[a & b] > table[a] + table[b]) return false;
  return true;
}

}  // namespace streamsub
