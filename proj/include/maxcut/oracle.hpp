#pragma once

#include <cstdint>

#include "maxcut/graph.hpp"

namespace maxcut {

struct ExactResult {
  std::int64_t optimum = 0;
  CutAssignment witness;
};

/// Exact maximum cut by Gray-code enumeration of all 2^(n-1) assignments
/// with vertex 0 fixed on shore +1 (complement symmetry). Deterministic
/// tie-break: the lexicographically smallest optimal witness (entries
/// compared as -1 < +1). Throws for n > 24.
ExactResult brute_force_maxcut(const Graph& g);

}  // namespace maxcut
