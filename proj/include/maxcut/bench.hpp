#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxcut/annealer.hpp"
#include "maxcut/known_best.hpp"

namespace maxcut {

/// The solver produced an assignment that does not re-evaluate to its
/// reported objective. Always a bug, never a reportable result.
class VerificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BenchmarkRecord {
  std::string instance;
  std::uint64_t seed = 0;
  LinearSchedule schedule{};
  std::uint64_t iterations = 0;
  std::int64_t best_objective = 0;
  std::optional<std::int64_t> best_known;
  std::optional<std::int64_t> gap;  // best_known - best_objective; negative = improved
  double wall_time_seconds = 0.0;
};

struct InstanceRunOptions {
  /// Display name; defaults to the instance file stem.
  std::string name;
  std::optional<std::filesystem::path> assignment_path;
  /// Improvement events are streamed here live, one "iteration objective"
  /// line per new best.
  std::optional<std::filesystem::path> trace_path;
  const KnownBestTable* known_best = nullptr;
};

/// Loads the instance, runs one anneal, re-verifies the best assignment
/// against an independent cut evaluation (VerificationError on mismatch),
/// writes the requested output files, and returns the record.
BenchmarkRecord run_instance(const std::filesystem::path& instance_path,
                             const AnnealParams& params, const InstanceRunOptions& opts = {});

struct SuiteParams {
  AnnealParams base;  // per-instance seed = base.seed + instance index
  unsigned jobs = 1;
  const KnownBestTable* known_best = nullptr;
  /// When set, per-instance assignment (.sol) and trace (.trace) files are
  /// written here.
  std::optional<std::filesystem::path> out_dir;
  /// Serialized progress callbacks.
  std::function<void(const BenchmarkRecord&)> on_record;
  std::function<void(const std::filesystem::path&, const std::string&)> on_skip;
};

struct SuiteSummary {
  std::size_t instances = 0;
  std::size_t with_known_best = 0;
  std::size_t matched_or_beat = 0;  // gap <= 0
  std::size_t improved = 0;         // gap < 0
  std::size_t skipped_files = 0;
};

struct SuiteResult {
  std::vector<BenchmarkRecord> records;
  SuiteSummary summary;
};

/// Recomputes the summary from records alone (skipped_files excepted, which
/// is not a record property).
SuiteSummary summarize(const std::vector<BenchmarkRecord>& records);

/// Runs every parsable instance file in the directory, one anneal per
/// instance, optionally across several worker threads. Files that fail to
/// parse are skipped and reported. Instances run in sorted-filename order
/// and records are returned in that order.
SuiteResult run_suite(const std::filesystem::path& directory, const SuiteParams& params);

/// Header "instance,seed,heat_max,heat_step,iterations,best_objective,
/// best_known,gap,wall_time_s", one RFC-4180 row per record, input order.
std::string emit_csv(const std::vector<BenchmarkRecord>& records);

}  // namespace maxcut
