// Command-line front end: solve one instance, benchmark a directory of
// instances, fetch benchmark files against a checksum manifest, or solve a
// small instance exactly.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 solution verification
// failure, 3 fetch/checksum failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maxcut/annealer.hpp"
#include "maxcut/bench.hpp"
#include "maxcut/fetch.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/known_best.hpp"
#include "maxcut/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitFetch = 3;

struct ScheduleOptions {
  double heat_max = 10000.0;
  double heat_step = 2e-6;
  std::uint64_t seed = 0;
};

void add_schedule_options(CLI::App& cmd, ScheduleOptions& opts) {
  cmd.add_option("--heat-max", opts.heat_max, "Final inverse temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--heat-step", opts.heat_step, "Inverse-temperature increment per iteration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--seed", opts.seed, "Random seed")->capture_default_str();
}

maxcut::AnnealParams to_params(const ScheduleOptions& opts) {
  maxcut::AnnealParams params;
  params.schedule.heat_max = opts.heat_max;
  params.schedule.heat_step = opts.heat_step;
  params.seed = opts.seed;
  return params;
}

int run_solve(const std::string& instance, const ScheduleOptions& sched,
              std::optional<double> time_limit, const std::string& out_file,
              const std::string& trace_file) {
  maxcut::AnnealParams params = to_params(sched);
  params.time_limit_seconds = time_limit;

  maxcut::InstanceRunOptions opts;
  if (!out_file.empty()) {
    opts.assignment_path = out_file;
  }
  if (!trace_file.empty()) {
    opts.trace_path = trace_file;
  }

  const maxcut::BenchmarkRecord record = maxcut::run_instance(instance, params, opts);
  const std::uint64_t planned = maxcut::iteration_count(params.schedule);

  std::cout << "instance " << record.instance << '\n';
  std::cout << "schedule: heat_max " << record.schedule.heat_max << ", heat_step "
            << record.schedule.heat_step << ", seed " << record.seed << '\n';
  std::cout << "iterations " << record.iterations;
  if (record.iterations < planned) {
    std::cout << " of " << planned << " (stopped at time limit)";
  }
  std::cout << '\n';
  std::cout << "best objective " << record.best_objective << '\n';
  std::cout << "wall time " << record.wall_time_seconds << " s";
  if (record.wall_time_seconds > 0) {
    std::cout << " (" << static_cast<double>(record.iterations) / record.wall_time_seconds
              << " iterations/s)";
  }
  std::cout << '\n';
  return kExitOk;
}

int run_bench(const std::string& dir, const ScheduleOptions& sched, unsigned jobs,
              const std::string& known_best_file, const std::string& csv_file,
              const std::string& out_dir) {
  maxcut::SuiteParams params;
  params.base = to_params(sched);
  params.jobs = jobs;

  maxcut::KnownBestTable table;
  if (!known_best_file.empty()) {
    table = maxcut::load_known_best(known_best_file);
    params.known_best = &table;
  }
  if (!out_dir.empty()) {
    params.out_dir = out_dir;
  }
  params.on_record = [](const maxcut::BenchmarkRecord& r) {
    std::cerr << r.instance << ": best " << r.best_objective;
    if (r.best_known) {
      std::cerr << " (known " << *r.best_known << ", gap " << *r.gap << ")";
    }
    std::cerr << " in " << r.wall_time_seconds << " s\n";
  };
  params.on_skip = [](const std::filesystem::path& path, const std::string& reason) {
    std::cerr << "skipping " << path.string() << ": " << reason << '\n';
  };

  const maxcut::SuiteResult result = maxcut::run_suite(dir, params);

  std::cerr << "ran " << result.summary.instances << " instances";
  if (result.summary.skipped_files > 0) {
    std::cerr << " (" << result.summary.skipped_files << " files skipped)";
  }
  if (result.summary.with_known_best > 0) {
    std::cerr << "; matched or beat known best on " << result.summary.matched_or_beat << "/"
              << result.summary.with_known_best;
    if (result.summary.improved > 0) {
      std::cerr << ", improved on " << result.summary.improved;
    }
  }
  std::cerr << '\n';

  const std::string csv = maxcut::emit_csv(result.records);
  if (csv_file.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(csv_file, std::ios::trunc);
    if (!out) {
      std::cerr << "cannot open " << csv_file << " for writing\n";
      return kExitUsage;
    }
    out << csv;
  }
  return kExitOk;
}

int run_fetch(const std::string& manifest, const std::string& dest, bool offline) {
  const maxcut::FetchReport report = maxcut::fetch_instances(manifest, dest, offline);
  for (const maxcut::FetchOutcome& o : report.outcomes) {
    std::string status;
    switch (o.status) {
      case maxcut::FetchStatus::AlreadyVerified:
        status = "already present (verified)";
        break;
      case maxcut::FetchStatus::Downloaded:
        status = "downloaded (verified)";
        break;
      case maxcut::FetchStatus::ChecksumMismatch:
        status = "CHECKSUM MISMATCH";
        break;
      case maxcut::FetchStatus::DownloadFailed:
        status = "DOWNLOAD FAILED";
        break;
      case maxcut::FetchStatus::MissingOffline:
        status = "missing (offline mode)";
        break;
    }
    std::cout << o.entry.name << ": " << status;
    if (!o.detail.empty()) {
      std::cout << " - " << o.detail;
    }
    std::cout << '\n';
  }
  return report.ok() ? kExitOk : kExitFetch;
}

int run_exact(const std::string& instance) {
  std::ifstream in(instance);
  if (!in) {
    std::cerr << "cannot open instance file: " << instance << '\n';
    return kExitUsage;
  }
  const maxcut::Graph g = maxcut::parse_graph(in);
  const maxcut::ExactResult result = maxcut::brute_force_maxcut(g);
  std::cout << "optimum " << result.optimum << '\n';
  maxcut::write_assignment(result.witness, std::cout);
  std::cout << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulated-annealing max-cut solver"};
  app.require_subcommand(1);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "Anneal one instance");
  std::string solve_instance;
  ScheduleOptions solve_sched;
  double time_limit = 0.0;
  std::string out_file;
  std::string trace_file;
  solve->add_option("instance", solve_instance, "Instance file")->required();
  add_schedule_options(*solve, solve_sched);
  CLI::Option* time_limit_opt =
      solve->add_option("--time-limit", time_limit, "Stop after this many seconds")
          ->check(CLI::PositiveNumber);
  solve->add_option("--out", out_file, "Write the best assignment to this file");
  solve->add_option("--trace", trace_file, "Stream improvement events to this file");

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Anneal every instance in a directory");
  std::string bench_dir;
  ScheduleOptions bench_sched;
  unsigned jobs = 1;
  std::string known_best_file;
  std::string csv_file;
  std::string out_dir;
  bench->add_option("directory", bench_dir, "Directory of instance files")->required();
  add_schedule_options(*bench, bench_sched);
  bench->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  bench->add_option("--known-best", known_best_file, "CSV table of known best values");
  bench->add_option("--csv", csv_file, "Write the results CSV here instead of stdout");
  bench->add_option("--out-dir", out_dir, "Write per-instance assignment and trace files here");

  // fetch
  CLI::App* fetch = app.add_subcommand("fetch", "Download instances against a checksum manifest");
  std::string manifest;
  std::string dest;
  bool offline = false;
  fetch->add_option("--manifest", manifest, "Manifest file")->required();
  fetch->add_option("--dest", dest, "Destination directory")->required();
  fetch->add_flag("--offline", offline, "Verify existing files only; never touch the network");

  // exact
  CLI::App* exact = app.add_subcommand("exact", "Brute-force optimum for a small instance");
  std::string exact_instance;
  exact->add_option("instance", exact_instance, "Instance file (at most 24 vertices)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) {
      std::optional<double> limit;
      if (time_limit_opt->count() > 0) {
        limit = time_limit;
      }
      return run_solve(solve_instance, solve_sched, limit, out_file, trace_file);
    }
    if (app.got_subcommand(bench)) {
      return run_bench(bench_dir, bench_sched, jobs, known_best_file, csv_file, out_dir);
    }
    if (app.got_subcommand(fetch)) {
      return run_fetch(manifest, dest, offline);
    }
    if (app.got_subcommand(exact)) {
      return run_exact(exact_instance);
    }
  } catch (const maxcut::VerificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
