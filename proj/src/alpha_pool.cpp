#include "streamsub/alpha_pool.hpp"

#include <string>

#include "streamsub/errors.hpp"
#include "streamsub/rng.hpp"

namespace streamsub {

GridConfig matchoid_grid(const Rat& epsilon, int k) {
  if (epsilon <= 0 || epsilon >= 1)
    throw PreconditionError("grid: epsilon must be in (0,1)");
  if (k < 1) throw PreconditionError("grid: k must be >= 1");
  return {Rat(2), epsilon / Rat(4 * k), epsilon / Rat(2)};
}

GridConfig cardinality_grid(const Rat& epsilon, int k) {
  if (epsilon <= 0 || epsilon >= 1)
    throw PreconditionError("grid: epsilon must be in (0,1)");
  if (k < 1) throw PreconditionError("grid: k must be >= 1");
  return {Rat(1) + epsilon, (Rat(1) - epsilon) / Rat(5 * k),
          Rat(11, 50) * (Rat(1) + epsilon)};
}

namespace {

// Smallest i with base^i >= bound (base > 1, bound > 0).
long ceil_log(const Rat& base, const Rat& bound) {
  long i = 0;
  Rat p(1);
  if (p >= bound) {
    while (p >= bound && i > -4096) {
      p /= base;
      --i;
    }
    if (i <= -4096) throw InternalError("grid exponent underflow");
    return i + 1;
  }
  while (p < bound && i < 4096) {
    p *= base;
    ++i;
  }
  if (i >= 4096) throw InternalError("grid exponent overflow");
  return i;
}

// Largest i with base^i <= bound.
long floor_log(const Rat& base, const Rat& bound) {
  long c = ceil_log(base, bound);
  return rat_pow(base, c) == bound ? c : c - 1;
}

}  // namespace

AlphaPool::AlphaPool(GridConfig grid, InstanceFactory factory,
                     const InstrumentedOracle& oracle,
                     std::uint64_t master_seed, int k,
                     std::size_t per_instance_budget)
    : grid_(std::move(grid)),
      factory_(std::move(factory)),
      oracle_(&oracle),
      master_seed_(master_seed),
      k_(k),
      budget_(per_instance_budget) {
  if (grid_.base <= 1) throw PreconditionError("grid: base must exceed 1");
  if (grid_.low_coef <= 0 || grid_.high_coef < grid_.base * grid_.low_coef)
    throw PreconditionError(
        "grid: need 0 < low_coef and high_coef >= base * low_coef");
  if (k_ < 1) throw PreconditionError("pool: k must be >= 1");
  // Most powers the bracket can ever hold at once, independent of f(z).
  live_cap_ = static_cast<std::size_t>(
                  floor_log(grid_.base, grid_.high_coef / grid_.low_coef)) +
              1;
}

void AlphaPool::refresh_grid() {
  const Rat lo = grid_.low_coef * Rat(z_value_);
  const Rat hi = grid_.high_coef * Rat(z_value_);
  const long i_lo = ceil_log(grid_.base, lo);
  const long i_hi = floor_log(grid_.base, hi);
  if (i_lo > i_hi)
    throw InternalError("threshold bracket contains no grid power");
  // z only improves, so the bracket only moves up: retire below, create the
  // newly covered exponents, keep everything in the overlap untouched.
  for (auto it = live_.begin(); it != live_.end();) {
    if (it->first < i_lo) {
      stats_.identity_checks += it->second.algo->identity_checks();
      it = live_.erase(it);
      ++stats_.retired;
    } else {
      ++it;
    }
  }
  for (long i = i_lo; i <= i_hi; ++i) {
    if (live_.count(i)) continue;
    Rat alpha = rat_pow(grid_.base, i);
    std::uint64_t sub_seed = derive_seed(master_seed_, mix_rat(alpha));
    live_.emplace(i, Entry{alpha, factory_(alpha, sub_seed)});
    ++stats_.created;
  }
}

void AlphaPool::step(ElemId e) {
  if (finished_) throw ProtocolError("pool already finished");
  const Val singleton = oracle_->eval({e});
  if (singleton > 0 && (!has_z_ || singleton > z_value_)) {
    has_z_ = true;
    z_ = e;
    z_value_ = singleton;
    refresh_grid();
  }
  for (auto& [exp, entry] : live_) entry.algo->process(e);
  // Eager termination: a taken set larger than k*f(z)/alpha certifies the
  // threshold sits below every useful guess (cannot happen with a correct
  // oracle; see class comment).
  for (auto it = live_.begin(); it != live_.end();) {
    if (Rat(static_cast<long long>(it->second.algo->taken_count())) *
            it->second.alpha >
        Rat(k_) * Rat(z_value_)) {
      stats_.identity_checks += it->second.algo->identity_checks();
      it = live_.erase(it);
      ++stats_.killed;
    } else {
      ++it;
    }
  }
  audit();
}

void AlphaPool::audit() {
  stats_.live_peak = std::max(stats_.live_peak, live_.size());
  const std::size_t retained = retained_total();
  stats_.retained_peak = std::max(stats_.retained_peak, retained);
  if (live_.size() > live_cap_)
    throw InternalError("live instances (" + std::to_string(live_.size()) +
                        ") exceed grid capacity " + std::to_string(live_cap_));
  if (retained > live_cap_ * budget_ + 1)
    throw InternalError("retained elements (" + std::to_string(retained) +
                        ") exceed space budget " +
                        std::to_string(live_cap_ * budget_ + 1));
}

std::size_t AlphaPool::retained_total() const {
  std::size_t total = has_z_ ? 1 : 0;  // z itself is one retained id
  for (const auto& [exp, entry] : live_)
    total += entry.algo->retained_elements();
  return total;
}

PoolOutcome AlphaPool::finish() {
  if (finished_) throw ProtocolError("pool already finished");
  finished_ = true;
  PoolOutcome out;
  for (auto& [exp, entry] : live_) {
    PoolInstanceRow row;
    row.exponent = exp;
    row.alpha = entry.alpha;
    row.taken = entry.algo->taken_count();
    row.outcome = entry.algo->finish();
    stats_.identity_checks += entry.algo->identity_checks();
    // Strict improvement keeps the smallest qualifying threshold on ties.
    if (!out.any || row.outcome.value > out.best.value) {
      out.any = true;
      out.best = row.outcome;
      out.best_alpha = entry.alpha;
    }
    out.instances.push_back(std::move(row));
  }
  return out;
}

}  // namespace streamsub
