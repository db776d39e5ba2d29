#pragma once

#include <cstdint>
#include <vector>

namespace streamsub {

// Ground-set elements are small integer ids.  All declared-universe ids are
// distinct; the harness assigns stream positions, algorithms assign their own
// delivery indices (the two coincide for single-instance runs).
using ElemId = int;

// Function values.  Every function shipped here is integer-valued, so exact
// arithmetic on values needs nothing wider; thresholds and bounds use Rat.
using Val = long long;

using IdVec = std::vector<ElemId>;

// True if `id` occurs in `v` (linear scan; sets here are desk-scale).
inline bool contains(const IdVec& v, ElemId id) {
  for (ElemId x : v)
    if (x == id) return true;
  return false;
}

// Copy of `v` sorted ascending, for canonical set comparisons.
IdVec sorted_copy(const IdVec& v);

// Set equality ignoring order.
bool same_set(const IdVec& a, const IdVec& b);

}  // namespace streamsub
