#include "streamsub/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "streamsub/errors.hpp"
#include "streamsub/rng.hpp"

namespace streamsub {

InstanceBundle make_bundle(std::unique_ptr<SubmodularFunction> fn,
                           Matchoid matchoid) {
  const IdVec& domain = fn->domain();
  std::unordered_set<ElemId> domain_set(domain.begin(), domain.end());
  for (ElemId e : matchoid.ground())
    if (!domain_set.count(e))
      throw PreconditionError("constraint ground id " + std::to_string(e) +
                              " does not appear in the function domain");
  for (ElemId e : domain)
    if (!matchoid.in_some_ground(e))
      throw PreconditionError("function element " + std::to_string(e) +
                              " is not covered by any matroid ground");
  IdVec universe = sorted_copy(domain);
  return {std::move(fn), std::move(matchoid), std::move(universe)};
}

InstanceBundle load_bundle(const std::string& function_path,
                           const std::string& constraint_path) {
  return make_bundle(load_function(function_path),
                     load_matchoid(constraint_path));
}

StreamOrder stream_order_from_string(const std::string& s) {
  if (s == "given") return StreamOrder::given;
  if (s == "reversed") return StreamOrder::reversed;
  if (s == "shuffled") return StreamOrder::shuffled;
  if (s == "script" || s == "adversarial-script") return StreamOrder::script;
  throw PreconditionError("unknown stream order '" + s + "'");
}

std::string stream_order_to_string(StreamOrder o) {
  switch (o) {
    case StreamOrder::given: return "given";
    case StreamOrder::reversed: return "reversed";
    case StreamOrder::shuffled: return "shuffled";
    case StreamOrder::script: return "script";
  }
  return "?";
}

IdVec make_stream(const IdVec& universe, StreamOrder order, std::uint64_t seed,
                  const IdVec* script) {
  IdVec stream = sorted_copy(universe);
  switch (order) {
    case StreamOrder::given:
      return stream;
    case StreamOrder::reversed:
      std::reverse(stream.begin(), stream.end());
      return stream;
    case StreamOrder::shuffled: {
      Rng rng(seed);
      for (std::size_t i = stream.size(); i > 1; --i)
        std::swap(stream[i - 1], stream[rng.index(i)]);
      return stream;
    }
    case StreamOrder::script: {
      if (script == nullptr)
        throw PreconditionError("script order requires a script");
      if (!same_set(*script, stream) || script->size() != stream.size())
        throw PreconditionError(
            "stream script must be a permutation of the universe");
      return *script;
    }
  }
  throw PreconditionError("unknown stream order");
}

}  // namespace streamsub
