#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Linear inverse-temperature ramp: heat(i) = i * heat_step for iterations
/// i = 0, 1, ... while heat < heat_max. Heat is computed by multiplication,
/// not repeated addition, so it cannot drift over billions of steps.
struct LinearSchedule {
  double heat_max = 10000.0;
  double heat_step = 2e-6;
};

/// Number of iterations the schedule implies: ceil(heat_max / heat_step) on
/// the exact rational reading. Quotients within 1e-9 relative of an integer
/// snap to it, absorbing the division's rounding error.
std::uint64_t iteration_count(const LinearSchedule& s);

struct AnnealParams {
  LinearSchedule schedule{};
  std::uint64_t seed = 0;
  /// When true, the callback passed to anneal() is invoked on each new best.
  bool report_improvements = false;
  /// Optional wall-clock budget; expiring mid-schedule returns the partial
  /// result with completed = false.
  std::optional<double> time_limit_seconds{};
  /// Cooperative cancellation, polled at a coarse stride.
  const std::atomic<bool>* cancel = nullptr;
};

struct Improvement {
  std::uint64_t iteration;
  std::int64_t objective;

  friend bool operator==(const Improvement&, const Improvement&) = default;
};

struct RunResult {
  std::int64_t best_objective = 0;
  CutAssignment best_assignment;
  std::uint64_t iterations_executed = 0;
  std::uint64_t accepted_moves = 0;
  std::vector<Improvement> improvement_trace;
  double wall_time_seconds = 0.0;
  /// False when the run was stopped by the time limit or cancellation.
  bool completed = true;
};

/// Probability of accepting a flip with objective change delta at the given
/// heat, normalized by the best objective found so far:
///   1                              when best <= 0 or delta >= 0,
///   min(1, exp(heat * delta / best))  otherwise.
/// The best <= 0 rule keeps the rule total and deterministic before a
/// positive cut has been found (everything is accepted, a plain random walk).
double acceptance_probability(double heat, std::int64_t delta, std::int64_t best);

using ImprovementCallback = std::function<void(std::uint64_t iteration, std::int64_t objective)>;

/// Runs simulated annealing from the all-ones start. Each iteration draws a
/// uniform vertex, accepts its flip with acceptance_probability, and records
/// a new best whenever the objective exceeds it. Identical (graph, params)
/// produce identical results; the random stream is documented in rng.hpp.
/// Draw order per iteration: one vertex draw, then one uniform acceptance
/// draw for a degrading proposal unless heat*delta/best <= -746 (where exp
/// underflows to 0, a certain rejection, and no draw is consumed).
RunResult anneal(const Graph& g, const AnnealParams& params,
                 const ImprovementCallback& on_improvement = {});

}  // namespace maxcut
