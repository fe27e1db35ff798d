#include "maxcut/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "maxcut/csv.hpp"
#include "maxcut/graph.hpp"

namespace maxcut {
namespace {

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open instance file: " + path.string());
  }
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    // Keep the line-numbered message but anchor it to the file it came from.
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

BenchmarkRecord run_loaded(const Graph& g, std::string name, const AnnealParams& params,
                           const InstanceRunOptions& opts) {
  std::ofstream trace;
  AnnealParams run_params = params;
  ImprovementCallback callback;
  if (opts.trace_path) {
    trace.open(*opts.trace_path, std::ios::trunc);
    if (!trace) {
      throw std::runtime_error("cannot open trace file: " + opts.trace_path->string());
    }
    run_params.report_improvements = true;
    callback = [&trace](std::uint64_t iteration, std::int64_t objective) {
      trace << iteration << ' ' << objective << '\n';
      trace.flush();  // keep the file tail-able during long runs
    };
  }

  RunResult result = anneal(g, run_params, callback);

  // Never trust the incremental bookkeeping in a reported result: the best
  // assignment must re-evaluate to the claimed objective from scratch.
  const std::int64_t recomputed = cut_value(g, result.best_assignment);
  if (recomputed != result.best_objective) {
    throw VerificationError("objective verification failed for " + name + ": reported " +
                            std::to_string(result.best_objective) + " but assignment cuts " +
                            std::to_string(recomputed));
  }

  if (opts.assignment_path) {
    std::ofstream out(*opts.assignment_path, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open assignment file: " + opts.assignment_path->string());
    }
    write_assignment(result.best_assignment, out);
    out << '\n';
  }

  BenchmarkRecord record;
  record.instance = std::move(name);
  record.seed = params.seed;
  record.schedule = params.schedule;
  record.iterations = result.iterations_executed;
  record.best_objective = result.best_objective;
  record.wall_time_seconds = result.wall_time_seconds;
  if (opts.known_best != nullptr) {
    if (const KnownBestEntry* entry = opts.known_best->find(record.instance)) {
      record.best_known = entry->best_known;
      record.gap = entry->best_known - record.best_objective;
    }
  }
  return record;
}

/// Shortest decimal form that round-trips, so repeated runs and re-parses
/// agree byte for byte.
std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_seconds(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 3);
  return std::string(buf.data(), ptr);
}

}  // namespace

BenchmarkRecord run_instance(const std::filesystem::path& instance_path,
                             const AnnealParams& params, const InstanceRunOptions& opts) {
  Graph g = load_graph(instance_path);
  std::string name = opts.name.empty() ? instance_path.stem().string() : opts.name;
  return run_loaded(g, std::move(name), params, opts);
}

SuiteSummary summarize(const std::vector<BenchmarkRecord>& records) {
  SuiteSummary s;
  s.instances = records.size();
  for (const BenchmarkRecord& r : records) {
    if (!r.gap) {
      continue;
    }
    ++s.with_known_best;
    if (*r.gap <= 0) {
      ++s.matched_or_beat;
    }
    if (*r.gap < 0) {
      ++s.improved;
    }
  }
  return s;
}

SuiteResult run_suite(const std::filesystem::path& directory, const SuiteParams& params) {
  if (!std::filesystem::is_directory(directory)) {
    throw std::runtime_error("not a directory: " + directory.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file()) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  struct Job {
    std::filesystem::path path;
    Graph graph;
  };
  std::vector<Job> jobs;
  SuiteSummary summary;
  for (const auto& path : files) {
    try {
      jobs.push_back({path, load_graph(path)});
    } catch (const std::exception& e) {
      ++summary.skipped_files;
      if (params.on_skip) {
        params.on_skip(path, e.what());
      }
    }
  }
  if (jobs.empty()) {
    throw std::runtime_error("no parsable instance files in " + directory.string());
  }

  if (params.out_dir) {
    std::filesystem::create_directories(*params.out_dir);
  }

  std::vector<BenchmarkRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex mu;  // guards first_error and the progress callback

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) {
        return;
      }
      const Job& job = jobs[i];
      InstanceRunOptions opts;
      opts.name = job.path.stem().string();
      opts.known_best = params.known_best;
      if (params.out_dir) {
        opts.assignment_path = *params.out_dir / (opts.name + ".sol");
        opts.trace_path = *params.out_dir / (opts.name + ".trace");
      }
      AnnealParams run_params = params.base;
      run_params.seed = params.base.seed + i;
      try {
        BenchmarkRecord record = run_loaded(job.graph, opts.name, run_params, opts);
        std::lock_guard<std::mutex> lock(mu);
        if (params.on_record) {
          params.on_record(record);
        }
        records[i] = std::move(record);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) {
          first_error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(params.jobs, jobs.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }

  const SuiteSummary from_records = summarize(records);
  summary.instances = from_records.instances;
  summary.with_known_best = from_records.with_known_best;
  summary.matched_or_beat = from_records.matched_or_beat;
  summary.improved = from_records.improved;
  return {std::move(records), summary};
}

std::string emit_csv(const std::vector<BenchmarkRecord>& records) {
  std::ostringstream out;
  out << "instance,seed,heat_max,heat_step,iterations,best_objective,best_known,gap,wall_time_s\n";
  for (const BenchmarkRecord& r : records) {
    out << csv::quote(r.instance) << ',' << r.seed << ',' << format_double(r.schedule.heat_max)
        << ',' << format_double(r.schedule.heat_step) << ',' << r.iterations << ','
        << r.best_objective << ',';
    if (r.best_known) {
      out << *r.best_known;
    }
    out << ',';
    if (r.gap) {
      out << *r.gap;
    }
    out << ',' << format_seconds(r.wall_time_seconds) << '\n';
  }
  return out.str();
}

}  // namespace maxcut
