#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "streamsub/json_util.hpp"
#include "streamsub/rational.hpp"
#include "streamsub/types.hpp"

namespace streamsub {

// Everything one run (or one aggregated batch of trials) reports.  The JSON
// form is versioned and structurally validated before it is written, so a
// malformed report is a bug caught at emission, not downstream.  Wall time is
// attached only when explicitly requested: default reports depend on nothing
// but the inputs and are byte-identical across reruns.
struct RunReport {
  int schema_version = 1;
  std::string algorithm;
  Json params = Json::object();
  Json constraint_summary = Json::object();  // {p, k, q, n}
  Json stream_info = Json::object();         // {order, n, passes}
  IdVec result_ids;
  Rat result_value;
  std::size_t taken = 0;
  std::optional<std::size_t> buffer_peak;
  std::optional<std::size_t> selections;
  std::optional<Json> pool;
  std::uint64_t algorithm_calls = 0;
  std::uint64_t verification_calls = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t identity_checks = 0;
  std::optional<Json> logs;
  std::optional<Json> bound_check;
  std::optional<Json> trials;
  std::optional<double> wall_ms;
};

Json report_to_json(const RunReport& r);

// Structural schema check; InternalError on any missing/mistyped field.
void validate_report(const Json& j);

}  // namespace streamsub
