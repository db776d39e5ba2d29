#include "streamsub/matroid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "streamsub/errors.hpp"

namespace streamsub {

namespace {

void require_known(const IdVec& sorted_ground, ElemId e, const char* who) {
  if (!std::binary_search(sorted_ground.begin(), sorted_ground.end(), e))
    throw UnknownElementError(std::string(who) + ": unknown element " +
                              std::to_string(e));
}

}  // namespace

UniformMatroid::UniformMatroid(IdVec ground, int rank)
    : ground_(sorted_copy(ground)), rank_(rank) {
  if (rank_ < 0) throw PreconditionError("uniform matroid: negative rank");
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
    throw PreconditionError("uniform matroid: duplicate ground ids");
}

bool UniformMatroid::independent(const IdVec& s) const {
  for (ElemId e : s) require_known(ground_, e, "uniform matroid");
  return s.size() <= static_cast<std::size_t>(rank_);
}

PartitionMatroid::PartitionMatroid(std::vector<Block> blocks)
    : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].capacity < 0)
      throw PreconditionError("partition matroid: negative capacity");
    for (ElemId e : blocks_[i].ground) {
      if (!block_of_.emplace(e, static_cast<int>(i)).second)
        throw PreconditionError("partition matroid: element " +
                                std::to_string(e) + " in two blocks");
      ground_.push_back(e);
    }
  }
  std::sort(ground_.begin(), ground_.end());
}

bool PartitionMatroid::independent(const IdVec& s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (ElemId e : s) {
    auto it = block_of_.find(e);
    if (it == block_of_.end())
      throw UnknownElementError("partition matroid: unknown element " +
                                std::to_string(e));
    if (++used[it->second] > blocks_[it->second].capacity) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(IdVec vertices,
                               std::map<ElemId, std::pair<int, int>> edges)
    : vertices_(sorted_copy(vertices)), edges_(std::move(edges)) {
  for (const auto& [e, uv] : edges_) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), uv.first) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), uv.second))
      throw UnknownElementError("graphic matroid: edge " + std::to_string(e) +
                                " touches an undeclared vertex");
    ground_.push_back(e);
  }
}

bool GraphicMatroid::independent(const IdVec& s) const {
  // Union-find over vertices; a closing edge means a cycle.
  std::map<int, int> parent;
  auto find = [&](int v) {
    parent.try_emplace(v, v);
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (ElemId e : s) {
    auto it = edges_.find(e);
    if (it == edges_.end())
      throw UnknownElementError("graphic matroid: unknown element " +
                                std::to_string(e));
    int ru = find(it->second.first), rv = find(it->second.second);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool verify_matroid_axioms(const MatroidOracle& m, std::size_t limit) {
  const IdVec& ground = m.ground();
  const std::size_t n = ground.size();
  if (n > limit)
    throw LimitError("verify_matroid_axioms: ground of " + std::to_string(n) +
                     " exceeds exhaustive limit " + std::to_string(limit));
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> indep(total);
  IdVec subset;
  for (std::size_t mask = 0; mask < total; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(ground[i]);
    indep[mask] = m.independent(subset) ? 1 : 0;
  }
  if (!indep[0]) return false;
  // Downward closure: dropping any one element keeps independence (full
  // closure follows by induction).
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!indep[mask]) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        if (!indep[mask & ~(std::size_t{1} << i)]) return false;
  }
  // Exchange.
  for (std::size_t a = 0; a < total; ++a) {
    if (!indep[a]) continue;
    for (std::size_t b = 0; b < total; ++b) {
      if (!indep[b] || std::popcount(a) >= std::popcount(b)) continue;
      bool extended = false;
      std::size_t diff = b & ~a;
      for (std::size_t i = 0; i < n && !extended; ++i)
        if (diff & (std::size_t{1} << i))
          extended = indep[a | (std::size_t{1} << i)];
      if (!extended) return false;
    }
  }
  return true;
}

}  // namespace streamsub
