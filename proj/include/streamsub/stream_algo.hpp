#pragma once

#include <cstdint>
#include <functional>

#include "streamsub/types.hpp"

namespace streamsub {

// Final answer of one algorithm run: ids sorted ascending, plus f(ids).
struct Outcome {
  IdVec ids;
  Val value = 0;
};

// Common face of every single-pass algorithm, so threshold pools and the
// harness can drive any of them.  Contract: each element is processed at most
// once per instance (ProtocolError otherwise); finish() is called exactly
// once, after the stream ends; retained_elements() counts the ids the
// algorithm is actually holding (solution, buffer, first-phase taken ids) --
// the audit the space checks assert against.
class StreamAlgo {
 public:
  virtual ~StreamAlgo() = default;
  virtual void process(ElemId e) = 0;
  virtual Outcome finish() = 0;
  virtual std::size_t retained_elements() const = 0;
  // Elements ever accepted past the alpha gate (feeds the per-instance
  // |U| <= OPT/alpha budget and the pool's eager-termination rule).
  virtual std::size_t taken_count() const = 0;
  virtual std::uint64_t identity_checks() const = 0;
};

}  // namespace streamsub
