#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "streamsub/types.hpp"

namespace streamsub {

// Independence oracle over a declared ground set.  independent() must accept
// any duplicate-free subset of ground(); ids outside the ground are an
// UnknownElementError.  Implementations are immutable after construction and
// safe to query concurrently.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  // Sorted, duplicate-free.
  virtual const IdVec& ground() const = 0;
  virtual bool independent(const IdVec& s) const = 0;
};

// Independent iff |S| <= rank.
class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(IdVec ground, int rank);
  const IdVec& ground() const override { return ground_; }
  bool independent(const IdVec& s) const override;
  int rank() const { return rank_; }

 private:
  IdVec ground_;
  int rank_;
};

// Disjoint blocks with per-block capacities; independent iff no block is
// over capacity.
class PartitionMatroid : public MatroidOracle {
 public:
  struct Block {
    IdVec ground;
    int capacity;
  };
  explicit PartitionMatroid(std::vector<Block> blocks);
  const IdVec& ground() const override { return ground_; }
  bool independent(const IdVec& s) const override;
  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  std::vector<Block> blocks_;
  IdVec ground_;
  std::map<ElemId, int> block_of_;
};

// Elements are edges of an undirected graph; independent iff they form a
// forest (checked by union-find).  Parallel edges and self-loops are legal
// inputs: a self-loop is a one-edge cycle, parallel edges a two-edge cycle.
class GraphicMatroid : public MatroidOracle {
 public:
  GraphicMatroid(IdVec vertices, std::map<ElemId, std::pair<int, int>> edges);
  const IdVec& ground() const override { return ground_; }
  bool independent(const IdVec& s) const override;
  const std::map<ElemId, std::pair<int, int>>& edges() const { return edges_; }
  const IdVec& vertices() const { return vertices_; }

 private:
  IdVec vertices_;
  std::map<ElemId, std::pair<int, int>> edges_;
  IdVec ground_;
};

// Exhaustively checks the three axioms: empty set independent, downward
// closure, and exchange (for independent A, B with |A| < |B| some b in B\A
// keeps A+b independent).  Throws LimitError when |ground| exceeds `limit`.
bool verify_matroid_axioms(const MatroidOracle& m, std::size_t limit = 10);

}  // namespace streamsub
