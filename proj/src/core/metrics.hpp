// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/engine.hpp"

namespace ransim {

// Set-level aggregates of one run: mean throughput, mean consumption, and the
// derived spectrum (t/B) and energy (t/pc) efficiencies.
struct SetMetrics {
  double t_mbps = 0.0;
  double pc_w = 0.0;
  double pc_kw = 0.0;
  double se_bps_hz = 0.0;
  double ee_mb_per_j = 0.0;
};

// Eq.-style per-cell mean over the UEs attached to cell_id at one time slice;
// 0 when nothing is attached.
double mean_bs_throughput_mbps(int cell_id, const std::vector<UEState>& ues);

// Arithmetic mean of per-cell values over a non-empty member set.
double set_mean(const std::vector<double>& per_cell, const std::vector<int>& members);

double set_se_bps_hz(double t_mbps, double bandwidth_hz);
double set_ee_mb_per_j(double t_mbps, double pc_w);

// Complete per-run record: per-cell run means plus the three set aggregates.
struct RunMetrics {
  std::string scenario;
  std::string level_label;  // "-inf" for sleep, else the dBm value
  std::uint64_t seed = 0;
  double tau_s = 0.0;
  double interval_s = 0.0;
  double bandwidth_hz = 0.0;
  std::uint64_t n_ues = 0;

  std::vector<double> cell_mean_tp_mbps;   // per cell, run mean of interval means
  std::vector<double> cell_mean_p_cons_w;  // per cell
  std::vector<bool> cell_variable;         // K^v membership

  bool has_kv = false;
  SetMetrics kv, ks, all;

  void compute_sets();  // fills kv/ks/all from the per-cell vectors
  std::string to_json() const;
  static RunMetrics from_json(const std::string& text, const std::string& context);
};

// LogSink that folds interval cell rows into run means (same arithmetic and
// order as a replay of the written cell_log.csv).
class MetricsAccumulator : public LogSink {
 public:
  explicit MetricsAccumulator(const Simulation& sim);
  void on_ue_row(double, const UEState&) override {}
  void on_cell_row(double t_s, const CellState& cell,
                   const CellIntervalStats& stats) override;
  void on_run_end() override;

  const RunMetrics& result() const { return metrics_; }

 private:
  RunMetrics metrics_;
  std::vector<double> tp_sums_;
  std::vector<double> pc_sums_;
  int n_cells_ = 0;
  long long n_intervals_ = 0;
  bool finished_ = false;
};

// Recompute a RunMetrics from a written cell_log.csv alone (bandwidth_hz is
// needed to derive SE; everything else comes from the log).
RunMetrics replay_cell_log(const std::string& cell_log_path, double bandwidth_hz);

// Mean and sample standard deviation (n-1; zero when n < 2), in input order.
struct Stat {
  double mean = 0.0;
  double std = 0.0;
};
Stat mean_std(const std::vector<double>& values);

struct SetAggregate {
  Stat t_mbps, pc_kw, se_bps_hz, ee_mb_per_j;
};

struct LevelAggregate {
  std::string level_label;
  int n_seeds = 0;
  bool has_kv = false;
  SetAggregate kv, ks, all;
};

// Per-(scenario, level) mean/std over seeds.  `runs` must hold every seed of
// every level; a missing (level, seed) pair raises IncompleteSweepError.
std::vector<LevelAggregate> aggregate_seeds(const std::vector<RunMetrics>& runs,
                                            const std::vector<std::string>& level_labels,
                                            const std::vector<std::uint64_t>& seeds);

// Sweep-level summary document (summary.json / summary.csv).
struct SweepSummary {
  std::string scenario;
  std::vector<int> variable_cells;
  std::uint64_t seed_begin = 0, seed_end = 0;
  double tau_s = 0.0, interval_s = 0.0, bandwidth_hz = 0.0;
  std::string config_fingerprint;
  std::vector<LevelAggregate> levels;  // sleep first, then ascending dBm

  std::string to_json() const;
  std::string to_csv() const;
  static SweepSummary from_json(const std::string& text, const std::string& context);
};

// Orders level labels for presentation: sleep ("-inf") first, then ascending dBm.
std::vector<std::string> presentation_order(std::vector<std::string> level_labels);

}  // namespace ransim
