// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
//
// ransim command-line tool.  Everything goes through the shared library's C
// API; this file only parses flags and maps statuses to exit codes.
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ransim/ransim.h"

namespace {

int fail(ransim_status rc) {
  std::fprintf(stderr, "error: %s\n", ransim_last_error());
  return static_cast<int>(rc);
}

ransim_config* load_config_or_exit(const std::string& path, int& exit_code) {
  ransim_config* cfg = nullptr;
  const ransim_status rc =
      path.empty() ? ransim_config_create(&cfg) : ransim_config_load(path.c_str(), &cfg);
  if (rc != RANSIM_OK) {
    exit_code = fail(rc);
    return nullptr;
  }
  return cfg;
}

struct SeedRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 99;
};

bool parse_seed_range(const std::string& text, SeedRange& out) {
  const size_t pos = text.find("..");
  if (pos == std::string::npos) return false;
  try {
    out.begin = std::stoull(text.substr(0, pos));
    out.end = std::stoull(text.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return out.end >= out.begin;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ransim — macro-cell RAN energy/throughput simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (omit for defaults)");

  // run -----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "one simulation run, logs to --out");
  std::string run_scenario = "baseline";
  double run_power_dbm = 0.0;
  double run_power_watts = 0.0;
  bool run_sleep = false;
  std::uint64_t run_seed = 0;
  std::string run_out = "out";
  run_cmd->add_option("--scenario", run_scenario, "built-in name or cell-id list");
  auto* opt_dbm = run_cmd->add_option("--power-dbm", run_power_dbm,
                                      "K^v transmit power (dBm)");
  auto* opt_watts = run_cmd->add_option("--power-watts", run_power_watts,
                                        "K^v transmit power (W)");
  auto* opt_sleep = run_cmd->add_flag("--sleep", run_sleep, "put K^v cells to sleep");
  opt_dbm->excludes(opt_watts)->excludes(opt_sleep);
  opt_watts->excludes(opt_sleep);
  run_cmd->add_option("--seed", run_seed, "run seed");
  run_cmd->add_option("--out", run_out, "output directory");

  // sweep ---------------------------------------------------------------
  auto* sweep_cmd =
      app.add_subcommand("sweep", "power grid x seed batch for one scenario");
  std::string sweep_scenario;
  std::string sweep_seeds = "0..99";
  int sweep_jobs = 0;
  bool sweep_full_logs = false;
  std::string sweep_out = "sweep";
  sweep_cmd->add_option("--scenario", sweep_scenario, "built-in name or cell-id list")
      ->required();
  sweep_cmd->add_option("--seeds", sweep_seeds, "seed range A..B (default 0..99)");
  sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads (default: cpu count)");
  sweep_cmd->add_flag("--full-logs", sweep_full_logs, "also write per-run ue_log.csv");
  sweep_cmd->add_option("--out", sweep_out, "output directory");

  // aggregate -----------------------------------------------------------
  auto* agg_cmd = app.add_subcommand("aggregate", "rebuild summary from per-run metrics");
  std::string agg_out;
  agg_cmd->add_option("--out", agg_out, "sweep directory")->required();

  // replay --------------------------------------------------------------
  auto* replay_cmd =
      app.add_subcommand("replay", "recompute metrics from raw logs and verify");
  std::string replay_out;
  replay_cmd->add_option("--out", replay_out, "sweep or run directory")->required();

  // plot ----------------------------------------------------------------
  auto* plot_cmd = app.add_subcommand("plot", "render SVG panels from summaries");
  std::vector<std::string> plot_inputs;
  std::string plot_out = "plots";
  plot_cmd->add_option("summaries", plot_inputs, "summary.json files")->required();
  plot_cmd->add_option("--out", plot_out, "output directory");

  // topology ------------------------------------------------------------
  auto* topo_cmd = app.add_subcommand("topology", "dump grid and region CSV");
  std::string topo_out = "topology";
  std::uint64_t topo_seed = 0;
  topo_cmd->add_option("--out", topo_out, "output directory");
  auto* opt_topo_seed =
      topo_cmd->add_option("--seed", topo_seed, "also dump the UE placement for a seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help path
    app.exit(e);
    return static_cast<int>(RANSIM_E_CONFIG);
  }

  int exit_code = 0;
  ransim_config* cfg = nullptr;

  if (run_cmd->parsed()) {
    cfg = load_config_or_exit(config_path, exit_code);
    if (!cfg) return exit_code;
    double dbm = 43.0;
    if (opt_watts->count() > 0) {
      if (run_power_watts > 0.0)
        dbm = 10.0 * std::log10(run_power_watts * 1000.0);
      else
        run_sleep = true;  // 0 W is sleep
    } else if (opt_dbm->count() > 0) {
      dbm = run_power_dbm;
    }
    const ransim_status rc = ransim_run_to_files(
        cfg, run_scenario.c_str(), run_sleep ? 1 : 0, dbm, run_seed, run_out.c_str());
    if (rc != RANSIM_OK) exit_code = fail(rc);
  } else if (sweep_cmd->parsed()) {
    cfg = load_config_or_exit(config_path, exit_code);
    if (!cfg) return exit_code;
    SeedRange seeds;
    if (!parse_seed_range(sweep_seeds, seeds)) {
      std::fprintf(stderr, "error: --seeds expects A..B with B >= A\n");
      ransim_config_free(cfg);
      return static_cast<int>(RANSIM_E_CONFIG);
    }
    const ransim_status rc =
        ransim_sweep(cfg, sweep_scenario.c_str(), nullptr, 0, 0, seeds.begin, seeds.end,
                     sweep_jobs, sweep_full_logs ? 1 : 0, sweep_out.c_str());
    if (rc != RANSIM_OK) exit_code = fail(rc);
  } else if (agg_cmd->parsed()) {
    const ransim_status rc = ransim_aggregate(agg_out.c_str());
    if (rc != RANSIM_OK) exit_code = fail(rc);
  } else if (replay_cmd->parsed()) {
    const ransim_status rc = ransim_replay_verify(replay_out.c_str());
    if (rc != RANSIM_OK)
      exit_code = fail(rc);
    else
      std::printf("replay OK: %s\n", replay_out.c_str());
  } else if (plot_cmd->parsed()) {
    std::vector<const char*> paths;
    paths.reserve(plot_inputs.size());
    for (const std::string& p : plot_inputs) paths.push_back(p.c_str());
    const ransim_status rc = ransim_plot(paths.data(), paths.size(), plot_out.c_str());
    if (rc != RANSIM_OK) exit_code = fail(rc);
  } else if (topo_cmd->parsed()) {
    cfg = load_config_or_exit(config_path, exit_code);
    if (!cfg) return exit_code;
    ransim_status rc = ransim_write_topology_csv(cfg, topo_out.c_str());
    if (rc == RANSIM_OK && opt_topo_seed->count() > 0)
      rc = ransim_write_ue_csv(cfg, topo_seed, topo_out.c_str());
    if (rc != RANSIM_OK) exit_code = fail(rc);
  }

  ransim_config_free(cfg);
  return exit_code;
}
