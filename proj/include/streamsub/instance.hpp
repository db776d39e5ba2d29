#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "streamsub/functions.hpp"
#include "streamsub/matchoid.hpp"

namespace streamsub {

// A function plus a constraint over the same universe.  Loading validates the
// two against each other: every constraint-ground id must be in the function
// domain, and every domain element must sit in at least one matroid ground
// (an uncovered element would be unconstrained, which the exchange machinery
// treats as an unknown element, so it is rejected up front with a clear
// message).
struct InstanceBundle {
  std::unique_ptr<SubmodularFunction> fn;
  Matchoid matchoid;
  IdVec universe;  // = fn->domain(), ascending
};

InstanceBundle make_bundle(std::unique_ptr<SubmodularFunction> fn,
                           Matchoid matchoid);
InstanceBundle load_bundle(const std::string& function_path,
                           const std::string& constraint_path);

enum class StreamOrder { given, reversed, shuffled, script };

StreamOrder stream_order_from_string(const std::string& s);
std::string stream_order_to_string(StreamOrder o);

// Delivery order for one pass.  `given` is ascending id; `shuffled` is a
// seeded Fisher-Yates permutation; `script` replays caller-supplied ids and
// must be a permutation of the universe (duplicates or strays are errors).
IdVec make_stream(const IdVec& universe, StreamOrder order, std::uint64_t seed,
                  const IdVec* script = nullptr);

}  // namespace streamsub
