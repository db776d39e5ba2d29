#include "streamsub/functions.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "streamsub/errors.hpp"

namespace streamsub {

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

void require_nonneg(Val w, const std::string& what) {
  if (w < 0) throw PreconditionError(what + " must be non-negative");
}

}  // namespace

WeightedCoverage::WeightedCoverage(std::map<int, Val> universe_weights,
                                   std::map<ElemId, IdVec> covers)
    : weights_(std::move(universe_weights)), covers_(std::move(covers)) {
  for (const auto& [item, w] : weights_) require_nonneg(w, "universe weight");
  for (const auto& [e, items] : covers_) {
    for (int item : items)
      if (!weights_.count(item))
        throw UnknownElementError("coverage: element " + std::to_string(e) +
                                  " covers unknown universe item " +
                                  std::to_string(item));
    domain_.push_back(e);
  }
}

Val WeightedCoverage::evaluate(const IdVec& s) const {
  std::set<int> covered;
  for (ElemId e : s) {
    auto it = covers_.find(e);
    if (it == covers_.end())
      throw UnknownElementError("coverage: unknown element " + std::to_string(e));
    covered.insert(it->second.begin(), it->second.end());
  }
  Val total = 0;
  for (int item : covered) total += weights_.at(item);
  return total;
}

DirectedCut::DirectedCut(IdVec vertices,
                         std::vector<std::tuple<ElemId, ElemId, Val>> arcs)
    : domain_(sorted_copy(vertices)), arcs_(std::move(arcs)) {
  std::unordered_set<ElemId> known(domain_.begin(), domain_.end());
  if (known.size() != domain_.size())
    throw PreconditionError("cut: duplicate vertex ids");
  for (const auto& [u, v, w] : arcs_) {
    if (!known.count(u) || !known.count(v))
      throw UnknownElementError("cut: arc endpoint not a declared vertex");
    require_nonneg(w, "arc weight");
  }
}

Val DirectedCut::evaluate(const IdVec& s) const {
  std::unordered_set<ElemId> in(s.begin(), s.end());
  for (ElemId e : s)
    if (!contains(domain_, e))
      throw UnknownElementError("cut: unknown element " + std::to_string(e));
  Val total = 0;
  for (const auto& [u, v, w] : arcs_)
    if (in.count(u) && !in.count(v)) total += w;
  return total;
}

Modular::Modular(std::map<ElemId, Val> weights) : weights_(std::move(weights)) {
  for (const auto& [e, w] : weights_) {
    require_nonneg(w, "modular weight");
    domain_.push_back(e);
  }
}

Val Modular::evaluate(const IdVec& s) const {
  Val total = 0;
  for (ElemId e : s) {
    auto it = weights_.find(e);
    if (it == weights_.end())
      throw UnknownElementError("modular: unknown element " + std::to_string(e));
    total += it->second;
  }
  return total;
}

std::unique_ptr<SubmodularFunction> function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw PreconditionError("function file must be an object with a 'type' field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "coverage") {
    std::map<int, Val> weights;
    for (const auto& [key, val] : j.at("universe_weights").items())
      weights[id_from_key(key)] = val.get<Val>();
    std::map<ElemId, IdVec> covers;
    for (const auto& [key, val] : j.at("sets").items())
      covers[id_from_key(key)] = val.get<IdVec>();
    return std::make_unique<WeightedCoverage>(std::move(weights), std::move(covers));
  }
  if (type == "cut") {
    IdVec vertices = j.at("vertices").get<IdVec>();
    std::vector<std::tuple<ElemId, ElemId, Val>> arcs;
    for (const auto& arc : j.at("arcs")) {
      if (!arc.is_array() || arc.size() != 3)
        throw PreconditionError("cut arcs must be [tail, head, weight] triples");
      arcs.emplace_back(arc[0].get<ElemId>(), arc[1].get<ElemId>(), arc[2].get<Val>());
    }
    return std::make_unique<DirectedCut>(std::move(vertices), std::move(arcs));
  }
  if (type == "modular") {
    std::map<ElemId, Val> weights;
    for (const auto& [key, val] : j.at("weights").items())
      weights[id_from_key(key)] = val.get<Val>();
    return std::make_unique<Modular>(std::move(weights));
  }
  throw PreconditionError("unknown function type '" + type + "'");
}

Json function_to_json(const SubmodularFunction& fn) {
  if (auto* cov = dynamic_cast<const WeightedCoverage*>(&fn)) {
    Json weights = Json::object(), sets = Json::object();
    for (const auto& [item, w] : cov->universe_weights())
      weights[std::to_string(item)] = w;
    for (const auto& [e, items] : cov->covers()) sets[std::to_string(e)] = items;
    return Json{{"type", "coverage"},
                {"universe_weights", weights},
                {"sets", sets}};
  }
  if (auto* cut = dynamic_cast<const DirectedCut*>(&fn)) {
    Json arcs = Json::array();
    for (const auto& [u, v, w] : cut->arcs()) arcs.push_back(Json::array({u, v, w}));
    return Json{{"type", "cut"}, {"vertices", cut->domain()}, {"arcs", arcs}};
  }
  if (auto* mod = dynamic_cast<const Modular*>(&fn)) {
    Json weights = Json::object();
    for (const auto& [e, w] : mod->weights()) weights[std::to_string(e)] = w;
    return Json{{"type", "modular"}, {"weights", weights}};
  }
  throw PreconditionError("function_to_json: unknown function class");
}

std::unique_ptr<SubmodularFunction> load_function(const std::string& path) {
  return function_from_json(load_json_file(path));
}

}  // namespace streamsub
