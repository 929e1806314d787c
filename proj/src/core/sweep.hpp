// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/metrics.hpp"
#include "core/scenario.hpp"

namespace ransim {

// One (scenario, power, seed) run written to out_dir: ue_log.csv,
// cell_log.csv and metrics.json.  Returns the run's metrics.
RunMetrics run_to_files(const RunConfig& cfg, const ScenarioSpec& scenario,
                        PowerLevel level, std::uint64_t seed,
                        const std::string& out_dir, bool write_ue_log = true);

struct SweepOptions {
  std::vector<PowerLevel> levels;  // empty -> default grid
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 99;
  int jobs = 0;  // 0 -> hardware concurrency
  bool full_logs = false;
  std::string out_dir;
};

// Runs the whole grid for one scenario; per-run outputs land under
// out_dir/runs/<level>/s<seed>/ and are skipped when already present (the
// manifest pins the grid and the config fingerprint).  Emits summary.json,
// summary.csv and manifest.json.  Deterministic regardless of `jobs`.
SweepSummary run_sweep(const RunConfig& cfg, const ScenarioSpec& scenario,
                       const SweepOptions& options);

// Rebuild summary.json/summary.csv from the per-run metrics under sweep_dir.
SweepSummary aggregate_sweep(const std::string& sweep_dir);

// Recompute everything from raw cell logs alone and require the stored
// metrics.json / summary.json values to match exactly.  Accepts a sweep dir
// (manifest.json) or a single-run dir (cell_log.csv + metrics.json).
void replay_verify(const std::string& dir);

// Directory of one run inside a sweep tree.
std::string run_dir(const std::string& sweep_dir, const std::string& level_label,
                    std::uint64_t seed);

}  // namespace ransim
