#include "streamsub/generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "streamsub/errors.hpp"
#include "streamsub/rng.hpp"

namespace streamsub {

namespace {

int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

// First `take` entries of a seeded partial shuffle of [0, pool).
IdVec sample_distinct(Rng& rng, int pool, int take) {
  IdVec ids(static_cast<std::size_t>(pool));
  for (int i = 0; i < pool; ++i) ids[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < take; ++j) {
    std::size_t pick = static_cast<std::size_t>(j) +
                       rng.index(static_cast<std::size_t>(pool - j));
    std::swap(ids[static_cast<std::size_t>(j)], ids[pick]);
  }
  ids.resize(static_cast<std::size_t>(take));
  return ids;
}

std::map<int, Val> random_weights(Rng& rng, int count) {
  std::map<int, Val> w;
  for (int i = 0; i < count; ++i) w[i] = rng.range(1, 9);
  return w;
}

Json coverage_json(Rng& rng, int n) {
  const int m = n + static_cast<int>(rng.index(
                        static_cast<std::size_t>(std::max(2, n / 2))));
  std::map<int, Val> weights = random_weights(rng, m);
  Json sets = Json::object(), wj = Json::object();
  for (const auto& [item, w] : weights) wj[std::to_string(item)] = w;
  for (int e = 0; e < n; ++e) {
    int c = static_cast<int>(rng.range(1, std::min(3, m)));
    sets[std::to_string(e)] = sample_distinct(rng, m, c);
  }
  return Json{{"type", "coverage"}, {"universe_weights", wj}, {"sets", sets}};
}

// Random partition of 0..n-1 into `blocks` blocks with capacities in 1..2.
// Returns the matroid json and its rank.
std::pair<Json, int> partition_json(Rng& rng, int n, int blocks) {
  std::vector<IdVec> grounds(static_cast<std::size_t>(blocks));
  for (int e = 0; e < n; ++e)
    grounds[rng.index(static_cast<std::size_t>(blocks))].push_back(e);
  Json bj = Json::array();
  int rank = 0;
  for (const auto& g : grounds) {
    if (g.empty()) continue;
    int cap = static_cast<int>(rng.range(1, 2));
    rank += std::min<int>(cap, static_cast<int>(g.size()));
    bj.push_back(Json{{"ground", g}, {"capacity", cap}});
  }
  return {Json{{"type", "partition"}, {"blocks", bj}}, rank};
}

}  // namespace

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {
      "coverage-uniform", "coverage-partition", "cut-cardinality",
      "modular-matching", "coverage-2matroid"};
  return kinds;
}

GeneratedInstance generate_instance(const std::string& kind, int n, int k,
                                    std::uint64_t seed) {
  const auto& kinds = generator_kinds();
  auto it = std::find(kinds.begin(), kinds.end(), kind);
  if (it == kinds.end())
    throw PreconditionError("unknown instance kind '" + kind + "'");
  if (n < 1) throw PreconditionError("instance size must be >= 1");
  Rng rng(derive_seed(seed, 7000 + static_cast<std::uint64_t>(it - kinds.begin())));

  GeneratedInstance out;
  out.kind = kind;
  if (kind == "coverage-uniform") {
    out.function = coverage_json(rng, n);
    const int rank = clamp_int(k, 1, n);
    IdVec ground(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = i;
    out.constraint =
        Json{{"k", rank},
             {"matroids", Json::array({Json{{"type", "uniform"},
                                            {"ground", ground},
                                            {"rank", rank}}})}};
  } else if (kind == "coverage-partition") {
    out.function = coverage_json(rng, n);
    auto [mj, rank] = partition_json(rng, n, clamp_int(k, 1, n));
    out.constraint = Json{{"k", rank}, {"matroids", Json::array({mj})}};
  } else if (kind == "cut-cardinality") {
    IdVec vertices(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
    Json arcs = Json::array();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (rng.range(0, 99) < 45)
          arcs.push_back(Json::array({u, v, rng.range(1, 9)}));
      }
    if (arcs.empty() && n >= 2) arcs.push_back(Json::array({0, 1, 1}));
    out.function = Json{{"type", "cut"}, {"vertices", vertices}, {"arcs", arcs}};
    const int rank = clamp_int(k, 1, n);
    out.constraint =
        Json{{"k", rank},
             {"matroids", Json::array({Json{{"type", "uniform"},
                                            {"ground", vertices},
                                            {"rank", rank}}})}};
  } else if (kind == "modular-matching") {
    const int side = std::max(2, static_cast<int>(std::ceil(std::sqrt(
                                     static_cast<double>(n)))));
    IdVec pairs = sample_distinct(rng, side * side, n);  // pair codes
    Json weights = Json::object(), left_blocks = Json::array(),
         right_blocks = Json::array();
    std::map<int, IdVec> by_left, by_right;
    for (int e = 0; e < n; ++e) {
      weights[std::to_string(e)] = rng.range(1, 9);
      by_left[pairs[static_cast<std::size_t>(e)] / side].push_back(e);
      by_right[pairs[static_cast<std::size_t>(e)] % side].push_back(e);
    }
    for (const auto& [u, g] : by_left)
      left_blocks.push_back(Json{{"ground", g}, {"capacity", 1}});
    for (const auto& [v, g] : by_right)
      right_blocks.push_back(Json{{"ground", g}, {"capacity", 1}});
    out.function = Json{{"type", "modular"}, {"weights", weights}};
    out.constraint =
        Json{{"k", std::min(side, n)},
             {"matroids",
              Json::array({Json{{"type", "partition"}, {"blocks", left_blocks}},
                           Json{{"type", "partition"},
                                {"blocks", right_blocks}}})}};
  } else {  // coverage-2matroid
    out.function = coverage_json(rng, n);
    auto [ma, rank_a] = partition_json(rng, n, clamp_int(k, 2, n));
    auto [mb, rank_b] = partition_json(rng, n, clamp_int(k + 1, 2, n));
    out.constraint = Json{{"k", std::min(rank_a, rank_b)},
                          {"matroids", Json::array({ma, mb})}};
  }
  if (n > 16)
    out.warning =
        "instance has " + std::to_string(n) +
        " elements; exact verification is limited to 16";
  return out;
}

GeneratedInstance generate_cut_2matroid(int n, int k, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("instance size must be >= 2");
  Rng rng(derive_seed(seed, 7100));
  GeneratedInstance out;
  out.kind = "cut-2matroid";
  IdVec vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  Json arcs = Json::array();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.range(0, 99) < 45)
        arcs.push_back(Json::array({u, v, rng.range(1, 9)}));
    }
  if (arcs.empty()) arcs.push_back(Json::array({0, 1, 1}));
  out.function = Json{{"type", "cut"}, {"vertices", vertices}, {"arcs", arcs}};
  auto [ma, rank_a] = partition_json(rng, n, clamp_int(k, 2, n));
  auto [mb, rank_b] = partition_json(rng, n, clamp_int(k + 1, 2, n));
  out.constraint = Json{{"k", std::min(rank_a, rank_b)},
                        {"matroids", Json::array({ma, mb})}};
  if (n > 16)
    out.warning = "instance has " + std::to_string(n) +
                  " elements; exact verification is limited to 16";
  return out;
}

void write_instance(const GeneratedInstance& gen, const std::string& prefix) {
  write_json_file(prefix + ".function.json", gen.function);
  write_json_file(prefix + ".constraint.json", gen.constraint);
}

InstanceBundle generate_bundle(const std::string& kind, int n, int k,
                               std::uint64_t seed) {
  GeneratedInstance gen = generate_instance(kind, n, k, seed);
  return make_bundle(function_from_json(gen.function),
                     matchoid_from_json(gen.constraint));
}

}  // namespace streamsub
