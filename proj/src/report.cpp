#include "streamsub/report.hpp"

#include "streamsub/errors.hpp"

namespace streamsub {

Json report_to_json(const RunReport& r) {
  Json j{{"schema_version", r.schema_version},
         {"algorithm", r.algorithm},
         {"params", r.params},
         {"constraint", r.constraint_summary},
         {"stream", r.stream_info},
         {"result",
          Json{{"ids", r.result_ids}, {"value", rat_to_json(r.result_value)}}},
         {"taken_count", r.taken},
         {"oracle_calls", Json{{"algorithm", r.algorithm_calls},
                               {"verification", r.verification_calls},
                               {"cache_hits", r.cache_hits}}},
         {"identity_checks", r.identity_checks}};
  if (r.buffer_peak) j["buffer_peak"] = *r.buffer_peak;
  if (r.selections) j["selection_count"] = *r.selections;
  if (r.pool) j["pool"] = *r.pool;
  if (r.logs) j["logs"] = *r.logs;
  if (r.bound_check) j["bound_check"] = *r.bound_check;
  if (r.trials) j["trials"] = *r.trials;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  validate_report(j);
  return j;
}

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw InternalError("malformed report: " + what);
}

}  // namespace

void validate_report(const Json& j) {
  need(j.is_object(), "not an object");
  need(j.value("schema_version", -1) == 1, "schema_version must be 1");
  need(j.contains("algorithm") && j["algorithm"].is_string() &&
           !j["algorithm"].get<std::string>().empty(),
       "algorithm id missing");
  need(j.contains("params") && j["params"].is_object(), "params missing");
  need(j.contains("constraint") && j["constraint"].is_object(),
       "constraint summary missing");
  for (const char* key : {"p", "k", "q", "n"})
    need(j["constraint"].contains(key) &&
             j["constraint"][key].is_number_integer() &&
             j["constraint"][key].get<long long>() >= 0,
         std::string("constraint.") + key);
  need(j.contains("stream") && j["stream"].is_object() &&
           j["stream"].contains("order") && j["stream"].contains("n") &&
           j["stream"].value("passes", 0) == 1,
       "stream info missing or not single-pass");
  need(j.contains("result") && j["result"].is_object(), "result missing");
  need(j["result"].contains("ids") && j["result"]["ids"].is_array(),
       "result.ids");
  need(j["result"].contains("value"), "result.value");
  rat_from_json(j["result"]["value"]);  // throws if malformed
  need(j.contains("taken_count") && j["taken_count"].is_number_integer(),
       "taken_count");
  need(j.contains("oracle_calls") && j["oracle_calls"].is_object() &&
           j["oracle_calls"].contains("algorithm") &&
           j["oracle_calls"].contains("verification"),
       "oracle_calls split");
  need(j.contains("identity_checks") &&
           j["identity_checks"].is_number_integer(),
       "identity_checks");
  if (j.contains("bound_check")) {
    const Json& b = j["bound_check"];
    need(b.is_object() && b.contains("satisfied") &&
             b["satisfied"].is_boolean() && b.contains("checks") &&
             b["checks"].is_array(),
         "bound_check block");
  }
}

}  // namespace streamsub
