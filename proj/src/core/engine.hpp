// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/csv.hpp"
#include "core/scenario.hpp"

namespace ransim {

struct CellState {
  int cell_id = 0;
  Vec3 position;
  double p_tx_w = 0.0;  // 0 while sleeping
  bool active = false;
  bool variable_group = false;  // K^v membership
};

struct UEState {
  int ue_id = 0;
  Vec3 position;
  int serving_cell = -1;  // -1 = unattached
  double sinr_db = 0.0;
  int cqi = 0;
  int mcs = -1;
  double se_bps_hz = 0.0;
  double throughput_mbps = 0.0;
};

// Interval aggregates logged per cell.
struct CellIntervalStats {
  double p_cons_w = 0.0;
  int n_attached = 0;
  double mean_tp_mbps = 0.0;
};

struct HandoverEvent {
  int ue_id;
  int from_cell;  // -1 if previously unattached
  int to_cell;    // -1 if no active cell remains
};

// Static per-run radio context: the linear gain factor of every (UE, cell)
// link (gains minus pathloss) plus the receiver noise power.  With it,
// received power is p_tx_w[cell] * gain_lin(ue, cell).
struct LinkContext {
  int n_cells = 0;
  std::vector<double> gain_lin;  // row-major [ue][cell]
  double noise_w = 0.0;

  double gain(int ue, int cell) const {
    return gain_lin[static_cast<size_t>(ue) * n_cells + cell];
  }
};

// Eq.-defined SINR of one candidate link: received power over the sum of all
// other active cells' received powers (ascending cell order) plus noise.
double link_sinr_linear(const LinkContext& ctx, const std::vector<CellState>& cells,
                        int ue_index, int cell_id);

// Highest-SINR active cell for one UE; ties break to the lowest cell id;
// -1 when no cell is active.
int best_cell(const LinkContext& ctx, const std::vector<CellState>& cells, int ue_index);

// Attach every UE to its highest-SINR active cell.
void attach_all(const LinkContext& ctx, const std::vector<CellState>& cells,
                std::vector<UEState>& ues);

// UEs whose serving cell is beaten by more than hysteresis_db (or whose
// serving cell went inactive) are listed for re-attachment; does not mutate.
std::vector<HandoverEvent> handover_check(const LinkContext& ctx,
                                          const std::vector<CellState>& cells,
                                          const std::vector<UEState>& ues,
                                          double hysteresis_db);

// Receives one total row per UE and per cell each interval.
class LogSink {
 public:
  virtual ~LogSink() = default;
  virtual void on_ue_row(double t_s, const UEState& ue) = 0;
  virtual void on_cell_row(double t_s, const CellState& cell,
                           const CellIntervalStats& stats) = 0;
  virtual void on_run_end() {}
};

// Streams the ue_log.csv / cell_log.csv schemas.
class CsvLogSink : public LogSink {
 public:
  CsvLogSink(const std::string& out_dir, std::uint64_t seed,
             const std::string& scenario_name, bool write_ue_log);
  void on_ue_row(double t_s, const UEState& ue) override;
  void on_cell_row(double t_s, const CellState& cell,
                   const CellIntervalStats& stats) override;
  void on_run_end() override;

 private:
  std::uint64_t seed_;
  std::string scenario_;
  std::unique_ptr<csv::Writer> ue_writer_;
  std::unique_ptr<csv::Writer> cell_writer_;
};

// One seeded run: owns cell/UE state, advances the loop clock, applies hook
// commands, maintains attachment, recomputes the link chain and streams rows.
class Simulation {
 public:
  using Hook = std::function<void(Simulation&, double t_s)>;

  Simulation(const RunConfig& cfg, const ScenarioSpec& scenario, PowerLevel level,
             std::uint64_t seed);

  void add_sink(LogSink* sink) { sinks_.push_back(sink); }
  void set_hook(Hook hook) { hook_ = std::move(hook); }

  // Commands take effect at the start of the next stepped interval; invalid
  // ones are recorded and dropped without side effects.
  void cmd_set_power_w(int cell_id, double p_tx_w);
  void cmd_sleep(int cell_id);
  void cmd_wake(int cell_id, double p_tx_w);

  void step();      // one interval; throws if the run already finished
  void run();       // all remaining intervals
  bool finished() const { return step_index_ >= n_steps_; }

  double now_s() const { return step_index_ * cfg_.interval_s; }
  double interval_s() const { return cfg_.interval_s; }
  double duration_s() const { return cfg_.duration_s; }
  int n_steps() const { return n_steps_; }

  const RunConfig& config() const { return cfg_; }
  const ScenarioSpec& scenario() const { return scenario_; }
  PowerLevel level() const { return level_; }
  std::uint64_t seed() const { return seed_; }

  const std::vector<CellState>& cells() const { return cells_; }
  const std::vector<UEState>& ues() const { return ues_; }
  const std::vector<CellIntervalStats>& cell_stats() const { return cell_stats_; }
  const LinkContext& link_context() const { return ctx_; }
  const Region& region() const { return region_; }

  const std::vector<std::string>& rejected_commands() const { return rejected_; }

 private:
  struct Command {
    enum class Kind { SetPower, Sleep, Wake } kind;
    int cell_id;
    double p_tx_w;
  };

  void apply_pending_commands();
  void apply_handovers();
  void refresh_link_state();
  void refresh_cell_stats();

  RunConfig cfg_;
  ScenarioSpec scenario_;
  PowerLevel level_;
  std::uint64_t seed_;

  Region region_;
  std::vector<CellState> cells_;
  std::vector<UEState> ues_;
  LinkContext ctx_;
  std::vector<CellIntervalStats> cell_stats_;

  std::vector<Command> pending_;
  std::vector<std::string> rejected_;
  std::vector<LogSink*> sinks_;
  Hook hook_;

  int step_index_ = 0;
  int n_steps_ = 0;
};

}  // namespace ransim
