#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "streamsub/json_util.hpp"
#include "streamsub/oracle.hpp"
#include "streamsub/types.hpp"

namespace streamsub {

// f(S) = total weight of universe items covered by at least one member.
// Monotone.  Element ids are the keys of `covers`.
class WeightedCoverage : public SubmodularFunction {
 public:
  WeightedCoverage(std::map<int, Val> universe_weights,
                   std::map<ElemId, IdVec> covers);
  Val evaluate(const IdVec& s) const override;
  bool is_monotone() const override { return true; }
  const IdVec& domain() const override { return domain_; }

  const std::map<int, Val>& universe_weights() const { return weights_; }
  const std::map<ElemId, IdVec>& covers() const { return covers_; }

 private:
  std::map<int, Val> weights_;
  std::map<ElemId, IdVec> covers_;
  IdVec domain_;
};

// f(S) = total weight of arcs leaving S (tail in S, head outside).
// Non-monotone; marginals go negative once heads join S.  Element ids are
// the vertices.
class DirectedCut : public SubmodularFunction {
 public:
  DirectedCut(IdVec vertices, std::vector<std::tuple<ElemId, ElemId, Val>> arcs);
  Val evaluate(const IdVec& s) const override;
  bool is_monotone() const override { return false; }
  const IdVec& domain() const override { return domain_; }

  const std::vector<std::tuple<ElemId, ElemId, Val>>& arcs() const { return arcs_; }

 private:
  IdVec domain_;
  std::vector<std::tuple<ElemId, ElemId, Val>> arcs_;
};

// f(S) = sum of per-element weights.  Monotone for the non-negative weights
// accepted here; the fully modular baseline.
class Modular : public SubmodularFunction {
 public:
  explicit Modular(std::map<ElemId, Val> weights);
  Val evaluate(const IdVec& s) const override;
  bool is_monotone() const override { return true; }
  const IdVec& domain() const override { return domain_; }

  const std::map<ElemId, Val>& weights() const { return weights_; }

 private:
  std::map<ElemId, Val> weights_;
  IdVec domain_;
};

// File format: {"type": "coverage"|"cut"|"modular", ...}.  Ids serialize as
// JSON object keys (strings) or array entries (numbers); stream order is the
// harness's business, never the file's.
std::unique_ptr<SubmodularFunction> function_from_json(const Json& j);
Json function_to_json(const SubmodularFunction& fn);
std::unique_ptr<SubmodularFunction> load_function(const std::string& path);

}  // namespace streamsub
