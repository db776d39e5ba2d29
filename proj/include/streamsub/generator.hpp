#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "streamsub/instance.hpp"
#include "streamsub/json_util.hpp"

namespace streamsub {

// Reproducible desk-scale instances.  All randomness flows through the
// portable generator, object keys serialize sorted, and every parameter is
// derived from (kind, n, k, seed) alone, so the emitted files are stable
// across platforms and runs.
struct GeneratedInstance {
  std::string kind;
  Json function;
  Json constraint;
  std::string warning;  // set when sizes leave the exhaustive-check envelope
};

// Kinds:
//   coverage-uniform    monotone coverage, one uniform matroid of rank k
//   coverage-partition  monotone coverage, one partition matroid (k blocks)
//   cut-cardinality     directed cut (non-monotone), uniform matroid rank k
//   modular-matching    modular weights on bipartite edges, two partition
//                       matroids (left/right degree 1); n is the edge count
//   coverage-2matroid   monotone coverage, two overlapping partition matroids
const std::vector<std::string>& generator_kinds();

GeneratedInstance generate_instance(const std::string& kind, int n, int k,
                                    std::uint64_t seed);

// Directed cut under two overlapping partition matroids (p = 2).  Not part of
// generator_kinds(): the file-format kind list stays fixed, this one feeds the
// deeper property batteries directly.
GeneratedInstance generate_cut_2matroid(int n, int k, std::uint64_t seed);

// Writes <prefix>.function.json and <prefix>.constraint.json.
void write_instance(const GeneratedInstance& gen, const std::string& prefix);

// Convenience: generate and load in one go.
InstanceBundle generate_bundle(const std::string& kind, int n, int k,
                               std::uint64_t seed);

}  // namespace streamsub
