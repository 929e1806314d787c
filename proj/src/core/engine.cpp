// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/engine.hpp"

#include <cmath>

#include "core/energy.hpp"
#include "core/pathloss.hpp"
#include "core/radio.hpp"
#include "core/units.hpp"

namespace ransim {

double link_sinr_linear(const LinkContext& ctx, const std::vector<CellState>& cells,
                        int ue_index, int cell_id) {
  const CellState& serving = cells[static_cast<size_t>(cell_id)];
  const double rx_w = serving.active ? serving.p_tx_w * ctx.gain(ue_index, cell_id) : 0.0;
  double interference_w = 0.0;
  for (int k = 0; k < ctx.n_cells; ++k) {
    if (k == cell_id) continue;
    const CellState& other = cells[static_cast<size_t>(k)];
    if (!other.active) continue;
    interference_w += other.p_tx_w * ctx.gain(ue_index, k);
  }
  return sinr_linear(rx_w, interference_w, ctx.noise_w);
}

int best_cell(const LinkContext& ctx, const std::vector<CellState>& cells, int ue_index) {
  int best = -1;
  double best_sinr = -1.0;
  for (int j = 0; j < ctx.n_cells; ++j) {
    if (!cells[static_cast<size_t>(j)].active) continue;
    const double s = link_sinr_linear(ctx, cells, ue_index, j);
    if (s > best_sinr) {  // strict: ties keep the lowest cell id
      best_sinr = s;
      best = j;
    }
  }
  return best;
}

void attach_all(const LinkContext& ctx, const std::vector<CellState>& cells,
                std::vector<UEState>& ues) {
  for (size_t i = 0; i < ues.size(); ++i)
    ues[i].serving_cell = best_cell(ctx, cells, static_cast<int>(i));
}

std::vector<HandoverEvent> handover_check(const LinkContext& ctx,
                                          const std::vector<CellState>& cells,
                                          const std::vector<UEState>& ues,
                                          double hysteresis_db) {
  std::vector<HandoverEvent> events;
  const double hysteresis_lin = db_to_linear(hysteresis_db);
  for (size_t i = 0; i < ues.size(); ++i) {
    const int ue = static_cast<int>(i);
    const int serving = ues[i].serving_cell;
    const bool serving_alive =
        serving >= 0 && cells[static_cast<size_t>(serving)].active;
    if (!serving_alive) {
      const int target = best_cell(ctx, cells, ue);
      if (target != serving) events.push_back(HandoverEvent{ue, serving, target});
      continue;
    }
    const double serving_sinr = link_sinr_linear(ctx, cells, ue, serving);
    int target = -1;
    double target_sinr = 0.0;
    for (int j = 0; j < ctx.n_cells; ++j) {
      if (j == serving || !cells[static_cast<size_t>(j)].active) continue;
      const double s = link_sinr_linear(ctx, cells, ue, j);
      if (s > serving_sinr * hysteresis_lin && s > target_sinr) {
        target_sinr = s;
        target = j;
      }
    }
    if (target >= 0) events.push_back(HandoverEvent{ue, serving, target});
  }
  return events;
}

// ---- CsvLogSink -------------------------------------------------------------

CsvLogSink::CsvLogSink(const std::string& out_dir, std::uint64_t seed,
                       const std::string& scenario_name, bool write_ue_log)
    : seed_(seed), scenario_(scenario_name) {
  csv::ensure_dir(out_dir);
  if (write_ue_log) {
    ue_writer_ = std::make_unique<csv::Writer>(out_dir + "/ue_log.csv");
    ue_writer_->write_line(
        "t_s,seed,scenario,ue_id,serving_cell,sinr_db,cqi,mcs,se_bps_hz,throughput_mbps");
  }
  cell_writer_ = std::make_unique<csv::Writer>(out_dir + "/cell_log.csv");
  cell_writer_->write_line(
      "t_s,seed,scenario,cell_id,group,p_tx_dbm,p_cons_w,n_attached,mean_tp_mbps");
}

void CsvLogSink::on_ue_row(double t_s, const UEState& ue) {
  if (!ue_writer_) return;
  std::string& row = ue_writer_->row_buffer();
  csv::append_double(row, t_s);
  row += ',';
  csv::append_uint(row, seed_);
  row += ',';
  row += scenario_;
  row += ',';
  csv::append_int(row, ue.ue_id);
  row += ',';
  csv::append_int(row, ue.serving_cell);
  row += ',';
  csv::append_double(row, ue.sinr_db);
  row += ',';
  csv::append_int(row, ue.cqi);
  row += ',';
  csv::append_int(row, ue.mcs);
  row += ',';
  csv::append_double(row, ue.se_bps_hz);
  row += ',';
  csv::append_double(row, ue.throughput_mbps);
  ue_writer_->commit_row();
}

void CsvLogSink::on_cell_row(double t_s, const CellState& cell,
                             const CellIntervalStats& stats) {
  std::string& row = cell_writer_->row_buffer();
  csv::append_double(row, t_s);
  row += ',';
  csv::append_uint(row, seed_);
  row += ',';
  row += scenario_;
  row += ',';
  csv::append_int(row, cell.cell_id);
  row += ',';
  row += cell.variable_group ? "variable" : "static";
  row += ',';
  csv::append_double(row, w_to_dbm(cell.p_tx_w));  // "-inf" while sleeping
  row += ',';
  csv::append_double(row, stats.p_cons_w);
  row += ',';
  csv::append_int(row, stats.n_attached);
  row += ',';
  csv::append_double(row, stats.mean_tp_mbps);
  cell_writer_->commit_row();
}

void CsvLogSink::on_run_end() {
  if (ue_writer_) ue_writer_->close();
  cell_writer_->close();
}

// ---- Simulation -------------------------------------------------------------

Simulation::Simulation(const RunConfig& cfg, const ScenarioSpec& scenario,
                       PowerLevel level, std::uint64_t seed)
    : cfg_(cfg), scenario_(scenario), level_(level), seed_(seed) {
  cfg_.validate();
  scenario_.validate(cfg_.network.n_bs);

  const SitePlan plan = build_hex_grid(cfg_.network);
  region_ = default_region(plan, cfg_.network);
  const std::vector<Vec3> positions =
      cfg_.network.fixed_ue_count
          ? place_ues_fixed(region_, *cfg_.network.fixed_ue_count,
                            cfg_.network.ue_height_m, seed_)
          : place_ues(region_, cfg_.network.ue_density_per_km2,
                      cfg_.network.ue_height_m, seed_);

  // Cells start at p_max; scenario settings then apply to the variable set.
  cells_.resize(plan.sites.size());
  for (size_t j = 0; j < plan.sites.size(); ++j) {
    const Site& s = plan.sites[j];
    cells_[j] = CellState{s.cell_id, Vec3{s.x_m, s.y_m, s.z_m}, cfg_.network.p_max_w,
                          true, false};
  }
  if (!level_.sleep && !scenario_.variable_cells.empty()) {
    const double resolved_w =
        scenario_power_w_from_dbm(level_.dbm, cfg_.network.p_max_w);
    // Levels that snap to p_max are labelled by its nominal integer rating
    // (20 W <-> "43"), so requests in dBm and in watts name identical runs.
    if (resolved_w == cfg_.network.p_max_w)
      level_.dbm = std::round(w_to_dbm(cfg_.network.p_max_w));
  }
  for (int id : scenario_.variable_cells) {
    CellState& cell = cells_[static_cast<size_t>(id)];
    cell.variable_group = true;
    if (level_.sleep) {
      cell.p_tx_w = 0.0;
      cell.active = false;
    } else {
      cell.p_tx_w = scenario_power_w_from_dbm(level_.dbm, cfg_.network.p_max_w);
    }
  }

  ues_.resize(positions.size());
  for (size_t i = 0; i < positions.size(); ++i) {
    ues_[i].ue_id = static_cast<int>(i);
    ues_[i].position = positions[i];
  }

  // Static link gains: UEs are stationary, so pathloss is computed once.
  ctx_.n_cells = static_cast<int>(cells_.size());
  ctx_.noise_w = cfg_.budget.noise_w(cfg_.network.bandwidth_hz);
  ctx_.gain_lin.resize(ues_.size() * cells_.size());
  const double gain_db = cfg_.budget.g_mimo_db + cfg_.budget.g_ant_db;
  for (size_t i = 0; i < ues_.size(); ++i) {
    for (size_t j = 0; j < cells_.size(); ++j) {
      const double pl =
          pathloss_db(cfg_.pathloss, cells_[j].position, ues_[i].position,
                      cfg_.network.carrier_freq_hz);
      ctx_.gain_lin[i * cells_.size() + j] = db_to_linear(gain_db - pl);
    }
  }

  const double steps = cfg_.duration_s / cfg_.interval_s;
  n_steps_ = static_cast<int>(std::floor(steps + 1e-9));
  if (n_steps_ < 1) throw ConfigError("run.duration_s must cover at least one interval");

  cell_stats_.resize(cells_.size());
  attach_all(ctx_, cells_, ues_);
  refresh_link_state();
  refresh_cell_stats();
}

void Simulation::cmd_set_power_w(int cell_id, double p_tx_w) {
  pending_.push_back(Command{Command::Kind::SetPower, cell_id, p_tx_w});
}

void Simulation::cmd_sleep(int cell_id) {
  pending_.push_back(Command{Command::Kind::Sleep, cell_id, 0.0});
}

void Simulation::cmd_wake(int cell_id, double p_tx_w) {
  pending_.push_back(Command{Command::Kind::Wake, cell_id, p_tx_w});
}

void Simulation::apply_pending_commands() {
  for (const Command& cmd : pending_) {
    std::string reason;
    if (cmd.cell_id < 0 || cmd.cell_id >= ctx_.n_cells) {
      reason = "unknown cell " + std::to_string(cmd.cell_id);
    } else if (cmd.kind != Command::Kind::Sleep &&
               !(cmd.p_tx_w >= 0.0 && cmd.p_tx_w <= cfg_.network.p_max_w)) {
      reason = "power " + csv::format_double(cmd.p_tx_w) + " W outside 0..p_max";
    } else if (cmd.kind == Command::Kind::Wake && !(cmd.p_tx_w > 0.0)) {
      reason = "wake requires power > 0 W";
    }
    if (!reason.empty()) {
      std::string label =
          cmd.kind == Command::Kind::Sleep
              ? "sleep"
              : (cmd.kind == Command::Kind::Wake ? "wake" : "set_power");
      rejected_.push_back("t=" + csv::format_double(now_s()) + " " + label + "(" +
                          std::to_string(cmd.cell_id) + "): " + reason);
      continue;
    }
    CellState& cell = cells_[static_cast<size_t>(cmd.cell_id)];
    const double p = cmd.kind == Command::Kind::Sleep ? 0.0 : cmd.p_tx_w;
    cell.p_tx_w = p;
    cell.active = p > 0.0;
  }
  pending_.clear();
}

void Simulation::apply_handovers() {
  const auto events = handover_check(ctx_, cells_, ues_, cfg_.handover_hysteresis_db);
  for (const HandoverEvent& ev : events)
    ues_[static_cast<size_t>(ev.ue_id)].serving_cell = ev.to_cell;
}

void Simulation::refresh_link_state() {
  const double bandwidth = cfg_.network.bandwidth_hz;
  for (size_t i = 0; i < ues_.size(); ++i) {
    UEState& ue = ues_[i];
    if (ue.serving_cell < 0) {
      ue.sinr_db = -std::numeric_limits<double>::infinity();
      ue.cqi = 0;
      ue.mcs = kNoTransmission;
      ue.se_bps_hz = 0.0;
      ue.throughput_mbps = 0.0;
      continue;
    }
    const double sinr =
        link_sinr_linear(ctx_, cells_, static_cast<int>(i), ue.serving_cell);
    ue.sinr_db = linear_to_db(sinr);
    ue.cqi = sinr_to_cqi(ue.sinr_db, cfg_.tables);
    ue.mcs = cqi_to_mcs(ue.cqi, cfg_.cqi_to_mcs_map);
    ue.se_bps_hz = mcs_to_se(ue.mcs, cfg_.tables);
    ue.throughput_mbps = ue_throughput_bps(ue.se_bps_hz, bandwidth) / 1e6;
  }
  if (cfg_.share_bandwidth) {
    std::vector<int> counts(cells_.size(), 0);
    for (const UEState& ue : ues_)
      if (ue.serving_cell >= 0 && ue.cqi >= 1)
        ++counts[static_cast<size_t>(ue.serving_cell)];
    for (UEState& ue : ues_) {
      if (ue.serving_cell < 0) continue;
      const int n = counts[static_cast<size_t>(ue.serving_cell)];
      ue.throughput_mbps =
          ue_throughput_bps(ue.se_bps_hz, bandwidth / std::max(1, n)) / 1e6;
    }
  }
}

void Simulation::refresh_cell_stats() {
  for (size_t j = 0; j < cells_.size(); ++j) {
    cell_stats_[j].n_attached = 0;
    cell_stats_[j].mean_tp_mbps = 0.0;
    cell_stats_[j].p_cons_w =
        cells_[j].active
            ? bs_power_w(cells_[j].p_tx_w, cfg_.energy, cfg_.network.p_max_w)
            : sleeping_power_w(cfg_.energy, cfg_.network.p_max_w);
  }
  // A camped UE at CQI 0 has no usable link (out of range), so it does not
  // count as a connection.  Sums accumulate in UE-id order so replays
  // reproduce them bit-exactly.
  for (const UEState& ue : ues_) {
    if (ue.serving_cell < 0 || ue.cqi < 1) continue;
    CellIntervalStats& stats = cell_stats_[static_cast<size_t>(ue.serving_cell)];
    ++stats.n_attached;
    stats.mean_tp_mbps += ue.throughput_mbps;
  }
  for (CellIntervalStats& stats : cell_stats_)
    if (stats.n_attached > 0) stats.mean_tp_mbps /= stats.n_attached;
}

void Simulation::step() {
  if (finished()) throw RuntimeError("simulation already ran to duration_s");
  const double t = now_s();
  if (hook_) hook_(*this, t);
  apply_pending_commands();
  apply_handovers();
  refresh_link_state();
  refresh_cell_stats();
  for (LogSink* sink : sinks_) {
    for (const UEState& ue : ues_) sink->on_ue_row(t, ue);
    for (size_t j = 0; j < cells_.size(); ++j)
      sink->on_cell_row(t, cells_[j], cell_stats_[j]);
  }
  ++step_index_;
  if (finished())
    for (LogSink* sink : sinks_) sink->on_run_end();
}

void Simulation::run() {
  while (!finished()) step();
}

}  // namespace ransim
