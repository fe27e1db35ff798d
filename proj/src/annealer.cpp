#include "maxcut/annealer.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "maxcut/cut_state.hpp"
#include "maxcut/rng.hpp"

namespace maxcut {

namespace {

void validate(const LinearSchedule& s) {
  if (!(s.heat_max > 0.0) || !(s.heat_step > 0.0))
    throw std::invalid_argument("schedule requires heat_max > 0 and heat_step > 0");
}

// exp underflows to exactly 0.0 below this, so such proposals are certain
// rejections and consume no acceptance draw.
constexpr double kCertainReject = -746.0;

}  // namespace

std::uint64_t iteration_count(const LinearSchedule& s) {
  validate(s);
  double ratio = s.heat_max / s.heat_step;
  if (ratio >= 1.8e19) throw std::invalid_argument("schedule implies more than 2^64 iterations");
  double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) <= ratio * 1e-9) return static_cast<std::uint64_t>(rounded);
  return static_cast<std::uint64_t>(std::ceil(ratio));
}

double acceptance_probability(double heat, std::int64_t delta, std::int64_t best) {
  if (best <= 0 || delta >= 0) return 1.0;
  double arg = heat * static_cast<double>(delta) / static_cast<double>(best);
  return arg >= 0.0 ? 1.0 : std::exp(arg);
}

RunResult anneal(const Graph& g, const AnnealParams& params,
                 const ImprovementCallback& on_improvement) {
  if (g.num_vertices() == 0) throw std::invalid_argument("cannot anneal an empty graph");
  validate(params.schedule);

  const std::uint64_t total = iteration_count(params.schedule);
  const std::uint64_t n = g.num_vertices();
  const double step = params.schedule.heat_step;

  CutState state(g);
  RunResult result;
  result.best_assignment = state.assignment();

  rng::Engine eng(params.seed);
  const auto t_start = std::chrono::steady_clock::now();
  constexpr std::uint64_t kPollMask = (1u << 16) - 1;

  std::uint64_t it = 0;
  for (; it < total; ++it) {
    if ((it & kPollMask) == 0 && it != 0) {
      if (params.cancel && params.cancel->load(std::memory_order_relaxed)) {
        result.completed = false;
        break;
      }
      if (params.time_limit_seconds &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count() >=
              *params.time_limit_seconds) {
        result.completed = false;
        break;
      }
    }

    const auto k = static_cast<std::uint32_t>(rng::bounded(eng, n));
    const std::int64_t delta = state.gain(k);
    if (delta < 0 && result.best_objective > 0) {
      const double arg = static_cast<double>(it) * step * static_cast<double>(delta) /
                         static_cast<double>(result.best_objective);
      if (arg <= kCertainReject) continue;
      if (!(rng::uniform01(eng) < std::exp(arg))) continue;
    }

    state.flip(k);
    ++result.accepted_moves;
    if (state.objective() > result.best_objective) {
      result.best_objective = state.objective();
      result.best_assignment = state.assignment();
      result.improvement_trace.push_back({it, result.best_objective});
      if (params.report_improvements && on_improvement)
        on_improvement(it, result.best_objective);
    }
  }

  result.iterations_executed = it;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

}  // namespace maxcut
