#pragma once

#include <cstdint>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Mutable cut with O(deg(v)) single-vertex flips. Maintains, exactly and
/// eagerly, the current objective and for every vertex the gain: the change
/// in cut value a flip of that vertex would cause. Holds a reference to its
/// (immutable) graph; one CutState must not be shared across threads.
class CutState {
 public:
  /// All vertices on shore +1: objective 0, gain[v] = total incident weight.
  explicit CutState(const Graph& g);

  /// Builds gains and objective from scratch by direct evaluation.
  static CutState recompute(const Graph& g, CutAssignment a);

  /// Moves v to the other shore, updating objective and the gains of v and
  /// its neighbors. Exact inverse of itself.
  void flip(std::uint32_t v);

  std::int64_t objective() const { return objective_; }
  std::int64_t gain(std::uint32_t v) const { return gain_[v]; }
  const std::vector<std::int64_t>& gains() const { return gain_; }
  const CutAssignment& assignment() const { return side_; }
  const Graph& graph() const { return *graph_; }

  friend bool operator==(const CutState& a, const CutState& b) {
    return a.objective_ == b.objective_ && a.side_ == b.side_ && a.gain_ == b.gain_;
  }

 private:
  CutState(const Graph& g, CutAssignment side);

  const Graph* graph_;
  CutAssignment side_;
  std::vector<std::int64_t> gain_;
  std::int64_t objective_ = 0;
};

}  // namespace maxcut
