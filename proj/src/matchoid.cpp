#include "streamsub/matchoid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "streamsub/errors.hpp"

namespace streamsub {

Matchoid::Matchoid(std::vector<std::unique_ptr<MatroidOracle>> matroids, int k)
    : matroids_(std::move(matroids)), k_(k) {
  if (k_ < 0) throw PreconditionError("matchoid: negative rank bound k");
  std::set<ElemId> all;
  for (std::size_t i = 0; i < matroids_.size(); ++i) {
    const IdVec& g = matroids_[i]->ground();
    ground_sets_.emplace_back(g.begin(), g.end());
    for (ElemId e : g) {
      membership_[e].push_back(static_cast<int>(i));
      all.insert(e);
    }
  }
  ground_.assign(all.begin(), all.end());
  p_ = 0;
  for (const auto& [e, idx] : membership_)
    p_ = std::max(p_, static_cast<int>(idx.size()));
}

const std::vector<int>& Matchoid::memberships_of(ElemId e) const {
  auto it = membership_.find(e);
  if (it == membership_.end())
    throw UnknownElementError("matchoid: element " + std::to_string(e) +
                              " is outside every matroid ground");
  return it->second;
}

int Matchoid::membership_count(ElemId e) const {
  return static_cast<int>(memberships_of(e).size());
}

bool Matchoid::independent(const IdVec& s) const {
  // Only matroids actually touched by s can be violated.
  std::set<int> touched;
  for (ElemId e : s)
    for (int i : memberships_of(e)) touched.insert(i);
  IdVec restricted;
  for (int i : touched) {
    restricted.clear();
    for (ElemId e : s)
      if (ground_sets_[i].count(e)) restricted.push_back(e);
    if (!matroids_[i]->independent(restricted)) return false;
  }
  return true;
}

IdVec Matchoid::exchange_candidates(const IdVec& s_ordered,
                                    const std::function<Val(ElemId)>& nu,
                                    ElemId e, TieBreak tie) const {
  for (ElemId x : s_ordered) memberships_of(x);  // unknown-member guard
  std::set<ElemId> picked;
  for (int l : memberships_of(e)) {
    IdVec restricted;  // S restricted to this sub-ground, delivery order kept
    for (ElemId x : s_ordered)
      if (ground_sets_[l].count(x)) restricted.push_back(x);
    IdVec with = restricted;
    with.push_back(e);
    if (matroids_[l]->independent(with)) continue;
    // Among members whose removal restores independence, take the cheapest
    // by incremental value; ties go by delivery position.
    bool found = false;
    ElemId best = 0;
    Val best_nu = 0;
    std::size_t best_pos = 0;
    for (std::size_t i = 0; i < restricted.size(); ++i) {
      IdVec trial;
      trial.reserve(restricted.size());
      for (std::size_t j = 0; j < restricted.size(); ++j)
        if (j != i) trial.push_back(restricted[j]);
      trial.push_back(e);
      if (!matroids_[l]->independent(trial)) continue;
      Val v = nu(restricted[i]);
      bool better =
          !found || v < best_nu ||
          (v == best_nu && (tie == TieBreak::prefer_earliest ? i < best_pos
                                                             : i > best_pos));
      if (better) {
        found = true;
        best = restricted[i];
        best_nu = v;
        best_pos = i;
      }
    }
    if (!found)
      throw OracleError(
          "matchoid: no single-element exchange restores independence in "
          "matroid " + std::to_string(l) +
          " (broken independence oracle, or element " + std::to_string(e) +
          " is a loop)");
    picked.insert(best);
  }
  return IdVec(picked.begin(), picked.end());
}

namespace {

ElemId id_from_key(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError("element id keys must be integers, got '" + key + "'");
  }
}

std::unique_ptr<MatroidOracle> matroid_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform")
    return std::make_unique<UniformMatroid>(j.at("ground").get<IdVec>(),
                                            j.at("rank").get<int>());
  if (type == "partition") {
    std::vector<PartitionMatroid::Block> blocks;
    for (const auto& b : j.at("blocks"))
      blocks.push_back({b.at("ground").get<IdVec>(), b.at("capacity").get<int>()});
    return std::make_unique<PartitionMatroid>(std::move(blocks));
  }
  if (type == "graphic") {
    std::map<ElemId, std::pair<int, int>> edges;
    for (const auto& [key, val] : j.at("edges").items()) {
      if (!val.is_array() || val.size() != 2)
        throw PreconditionError("graphic edges must map id -> [u, v]");
      edges[id_from_key(key)] = {val[0].get<int>(), val[1].get<int>()};
    }
    return std::make_unique<GraphicMatroid>(j.at("vertices").get<IdVec>(),
                                            std::move(edges));
  }
  throw PreconditionError("unknown matroid type '" + type + "'");
}

Json matroid_to_json(const MatroidOracle& m) {
  if (auto* u = dynamic_cast<const UniformMatroid*>(&m))
    return Json{{"type", "uniform"}, {"ground", u->ground()}, {"rank", u->rank()}};
  if (auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    Json blocks = Json::array();
    for (const auto& b : p->blocks())
      blocks.push_back(Json{{"ground", b.ground}, {"capacity", b.capacity}});
    return Json{{"type", "partition"}, {"blocks", blocks}};
  }
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    Json edges = Json::object();
    for (const auto& [e, uv] : g->edges())
      edges[std::to_string(e)] = Json::array({uv.first, uv.second});
    return Json{{"type", "graphic"}, {"vertices", g->vertices()}, {"edges", edges}};
  }
  throw PreconditionError("matroid_to_json: unknown matroid class");
}

}  // namespace

Matchoid matchoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("matroids"))
    throw PreconditionError("constraint file must be {k, matroids}");
  std::vector<std::unique_ptr<MatroidOracle>> ms;
  for (const auto& mj : j.at("matroids")) ms.push_back(matroid_from_json(mj));
  return Matchoid(std::move(ms), j.at("k").get<int>());
}

Json matchoid_to_json(const Matchoid& m) {
  Json ms = Json::array();
  for (std::size_t i = 0; i < m.num_matroids(); ++i)
    ms.push_back(matroid_to_json(m.matroid(i)));
  return Json{{"k", m.k()}, {"matroids", ms}};
}

Matchoid load_matchoid(const std::string& path) {
  return matchoid_from_json(load_json_file(path));
}

}  // namespace streamsub
