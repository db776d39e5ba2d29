#pragma once

#include <string>
#include <vector>

#include "streamsub/json_util.hpp"

namespace streamsub {

// argv-style entry point without the program name.  Returns the process exit
// code: 0 success, 1 usage/input error, 2 a requested verification (bound
// check or self-test) failed.
int run_cli(const std::vector<std::string>& args);

// In-process variant for bindings and tests: same semantics as the flag
// interface, but function/constraint come in as parsed JSON and the knobs in
// an options object {algorithm, alpha, beta, epsilon, gamma, offline, seed,
// trials, stream_order, stream_script, cardinality, capacity, verify,
// timing, memoize} (all optional, same defaults as the flags).  Returns the
// full run report; errors throw.
Json run_from_json(const Json& function_json, const Json& constraint_json,
                   const Json& options);

}  // namespace streamsub
