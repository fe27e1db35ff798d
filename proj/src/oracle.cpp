#include "maxcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "maxcut/cut_state.hpp"

namespace maxcut {

ExactResult brute_force_maxcut(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("brute_force_maxcut handles at most 24 vertices");
  if (n == 0) return {0, {}};

  CutState state(g);
  ExactResult best{state.objective(), state.assignment()};

  // Reflected Gray code over vertices 1..n-1: step i flips vertex ctz(i)+1,
  // visiting each assignment with side[0] = +1 exactly once.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    state.flip(static_cast<std::uint32_t>(std::countr_zero(i)) + 1);
    if (state.objective() > best.optimum ||
        (state.objective() == best.optimum &&
         std::lexicographical_compare(state.assignment().begin(), state.assignment().end(),
                                      best.witness.begin(), best.witness.end()))) {
      best.optimum = state.objective();
      best.witness = state.assignment();
    }
  }
  return best;
}

}  // namespace maxcut
