#include "maxcut/cut_state.hpp"

#include <stdexcept>

namespace maxcut {

CutState::CutState(const Graph& g)
    : graph_(&g), side_(g.num_vertices(), 1), gain_(g.num_vertices(), 0) {
  for (const Edge& e : g.edges()) {
    gain_[e.u] += e.w;
    gain_[e.v] += e.w;
  }
}

CutState::CutState(const Graph& g, CutAssignment side)
    : graph_(&g), side_(std::move(side)), gain_(g.num_vertices(), 0) {
  objective_ = cut_value(g, side_);
  // Flipping v cuts its currently-uncut edges and uncuts its cut ones.
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    for (const Graph::Incidence& inc : g.neighbors(v))
      gain_[v] += side_[v] == side_[inc.neighbor] ? inc.weight : -inc.weight;
}

CutState CutState::recompute(const Graph& g, CutAssignment a) {
  if (a.size() != g.num_vertices()) throw std::invalid_argument("assignment length mismatch");
  for (std::int8_t s : a)
    if (s != -1 && s != 1) throw std::invalid_argument("assignment entries must be -1 or 1");
  return CutState(g, std::move(a));
}

void CutState::flip(std::uint32_t v) {
  if (v >= side_.size()) throw std::out_of_range("vertex index out of range");
  objective_ += gain_[v];
  side_[v] = static_cast<std::int8_t>(-side_[v]);
  gain_[v] = -gain_[v];
  const std::int8_t sv = side_[v];
  for (const Graph::Incidence& inc : graph_->neighbors(v))
    gain_[inc.neighbor] += sv == side_[inc.neighbor] ? 2 * inc.weight : -2 * inc.weight;
}

}  // namespace maxcut
