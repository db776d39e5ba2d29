#include "streamsub/types.hpp"

#include <algorithm>

namespace streamsub {

IdVec sorted_copy(const IdVec& v) {
  IdVec out = v;
  std::sort(out.begin(), out.end());
  return out;
}

bool same_set(const IdVec& a, const IdVec& b) {
  return sorted_copy(a) == sorted_copy(b);
}

}  // namespace streamsub
