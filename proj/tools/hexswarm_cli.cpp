// hexswarm: run target-seeking swarm scenarios and write traces and metrics.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexswarm/config.hpp"
#include "hexswarm/engine.hpp"
#include "hexswarm/report.hpp"

namespace fs = std::filesystem;
using namespace hexswarm;

namespace {

constexpr int kUsageError = 1;

void write_run(const fs::path& dir, const RunResult& result, bool with_tracker) {
  std::ostringstream trace;
  write_trace_csv(trace, result.trace);
  write_file_atomic(dir / "trace.csv", trace.str());
  write_file_atomic(dir / "summary.json", summary_json(result.summary).dump(2) + "\n");
  if (result.field) {
    std::ostringstream field;
    write_field_csv(field, result.field_tick, *result.field);
    write_file_atomic(dir / "field.csv", field.str());
  }
  if (with_tracker) {
    std::ostringstream tracker;
    result.tracker.write_csv(tracker);
    write_file_atomic(dir / "tracker.csv", tracker.str());
  }
}

int batch_status(const std::vector<RunSummary>& runs) {
  int code = 0;
  for (const auto& s : runs) code = std::max(code, exit_code(s.status));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic hexagonal-grid swarm simulator (GA / ACO / BCO controllers)"};

  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> controller;
  std::optional<int> ticks;
  std::string out_dir = ".";
  int batch = 0;
  bool tracker = false;

  app.add_option("--scenario", scenario, "Scenario file (key = value, [ga]/[aco]/[bco] sections)");
  app.add_option("--seed", seed, "Root seed; overrides the scenario");
  app.add_option("--controller", controller, "ga, aco or bco; overrides the scenario");
  app.add_option("--ticks", ticks, "Maximum ticks; overrides the scenario");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--batch", batch, "Run this many consecutive seeds and write batch_summary.csv")
      ->check(CLI::PositiveNumber);
  app.add_flag("--tracker", tracker, "Also write the multi-hop tracker log (tracker.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  ScenarioConfig cfg;
  try {
    if (scenario) cfg = load_config(*scenario);
    if (seed) cfg.seed = *seed;
    if (controller) cfg.controller = parse_controller(*controller);
    if (ticks) cfg.max_ticks = *ticks;
    cfg.validate();
    fs::create_directories(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "hexswarm: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (batch > 0) {
      std::vector<std::future<RunSummary>> jobs;
      for (int i = 0; i < batch; ++i) {
        ScenarioConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
        jobs.push_back(std::async(std::launch::async,
                                  [run_cfg] { return run(run_cfg).summary; }));
      }
      std::vector<RunSummary> summaries;
      for (auto& j : jobs) summaries.push_back(j.get());
      std::ostringstream csv;
      write_batch_csv(csv, summaries);
      write_file_atomic(fs::path(out_dir) / "batch_summary.csv", csv.str());
      return batch_status(summaries);
    }

    const RunResult result = run(cfg, tracker);
    write_run(out_dir, result, tracker);
    std::cerr << "hexswarm: " << to_string(result.summary.status) << " after "
              << result.summary.ticks << " ticks, " << result.summary.arrived << '/'
              << result.summary.robots << " arrived\n";
    return exit_code(result.summary.status);
  } catch (const std::exception& e) {
    std::cerr << "hexswarm: " << e.what() << '\n';
    return kUsageError;
  }
}
