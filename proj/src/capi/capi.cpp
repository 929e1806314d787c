// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface of the shared library.  Exceptions from the core are
// converted to status codes; the message of the last failure is kept
// thread-locally for ransim_last_error().
#include "ransim/ransim.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/energy.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/metrics.hpp"
#include "core/pathloss.hpp"
#include "core/plot.hpp"
#include "core/sweep.hpp"
#include "core/units.hpp"

namespace {

thread_local std::string g_last_error;

ransim_status to_status(const std::exception& e) {
  g_last_error = e.what();
  if (const auto* err = dynamic_cast<const ransim::Error*>(&e))
    return static_cast<ransim_status>(static_cast<int>(err->status()));
  return RANSIM_E_RUNTIME;
}

template <typename Fn>
ransim_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RANSIM_OK;
  } catch (const std::exception& e) {
    return to_status(e);
  } catch (...) {
    g_last_error = "unknown error";
    return RANSIM_E_RUNTIME;
  }
}

ransim_status invalid_arg(const char* what) {
  g_last_error = what;
  return RANSIM_E_INVALID_ARG;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct ransim_config {
  ransim::RunConfig cfg;
};

struct ransim_sim {
  std::unique_ptr<ransim::Simulation> sim;
  std::unique_ptr<ransim::CsvLogSink> csv_sink;
  std::unique_ptr<ransim::MetricsAccumulator> metrics;
  ransim_hook_fn hook = nullptr;
  void* hook_user = nullptr;
};

extern "C" {

const char* ransim_version(void) { return "1.0.0"; }

const char* ransim_last_error(void) { return g_last_error.c_str(); }

ransim_status ransim_config_create(ransim_config** out) {
  if (!out) return invalid_arg("out is null");
  return guarded([&] {
    auto cfg = std::make_unique<ransim_config>();
    cfg->cfg.validate();
    *out = cfg.release();
  });
}

ransim_status ransim_config_load(const char* path, ransim_config** out) {
  if (!out || !path) return invalid_arg("path/out is null");
  return guarded([&] {
    auto cfg = std::make_unique<ransim_config>();
    cfg->cfg = ransim::RunConfig::from_file(path);
    *out = cfg.release();
  });
}

ransim_status ransim_config_load_json(const char* json_text, ransim_config** out) {
  if (!out || !json_text) return invalid_arg("json_text/out is null");
  return guarded([&] {
    auto cfg = std::make_unique<ransim_config>();
    cfg->cfg = ransim::RunConfig::from_json_text(json_text, "");
    *out = cfg.release();
  });
}

void ransim_config_free(ransim_config* cfg) { delete cfg; }

ransim_status ransim_config_to_json(const ransim_config* cfg, char** out) {
  if (!cfg || !out) return invalid_arg("cfg/out is null");
  return guarded([&] { *out = dup_string(cfg->cfg.to_json_text()); });
}

ransim_status ransim_bs_power_w(const ransim_config* cfg, double p_tx_w, double* out_w) {
  if (!cfg || !out_w) return invalid_arg("cfg/out_w is null");
  return guarded([&] {
    *out_w = ransim::bs_power_w(p_tx_w, cfg->cfg.energy, cfg->cfg.network.p_max_w);
  });
}

ransim_status ransim_pathloss_db(const ransim_config* cfg, double tx_x_m, double tx_y_m,
                                 double tx_z_m, double rx_x_m, double rx_y_m,
                                 double rx_z_m, double* out_db) {
  if (!cfg || !out_db) return invalid_arg("cfg/out_db is null");
  return guarded([&] {
    *out_db = ransim::pathloss_db(cfg->cfg.pathloss, ransim::Vec3{tx_x_m, tx_y_m, tx_z_m},
                                  ransim::Vec3{rx_x_m, rx_y_m, rx_z_m},
                                  cfg->cfg.network.carrier_freq_hz);
  });
}

ransim_status ransim_write_topology_csv(const ransim_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return invalid_arg("cfg/out_dir is null");
  return guarded([&] {
    const ransim::SitePlan plan = ransim::build_hex_grid(cfg->cfg.network);
    const ransim::Region region = ransim::default_region(plan, cfg->cfg.network);
    ransim::csv::ensure_dir(out_dir);
    ransim::write_sites_csv(plan, std::string(out_dir) + "/sites.csv");
    ransim::write_region_csv(region, std::string(out_dir) + "/region.csv");
  });
}

ransim_status ransim_write_ue_csv(const ransim_config* cfg, uint64_t seed,
                                  const char* out_dir) {
  if (!cfg || !out_dir) return invalid_arg("cfg/out_dir is null");
  return guarded([&] {
    const ransim::SitePlan plan = ransim::build_hex_grid(cfg->cfg.network);
    const ransim::Region region = ransim::default_region(plan, cfg->cfg.network);
    const auto ues =
        cfg->cfg.network.fixed_ue_count
            ? ransim::place_ues_fixed(region, *cfg->cfg.network.fixed_ue_count,
                                      cfg->cfg.network.ue_height_m, seed)
            : ransim::place_ues(region, cfg->cfg.network.ue_density_per_km2,
                                cfg->cfg.network.ue_height_m, seed);
    ransim::csv::ensure_dir(out_dir);
    ransim::write_ues_csv(ues, std::string(out_dir) + "/ues.csv");
  });
}

ransim_status ransim_sim_create(const ransim_config* cfg, const char* scenario,
                                int sleep, double power_dbm, uint64_t seed,
                                ransim_sim** out) {
  if (!cfg || !scenario || !out) return invalid_arg("cfg/scenario/out is null");
  return guarded([&] {
    const ransim::ScenarioSpec spec = ransim::parse_scenario(scenario);
    ransim::PowerLevel level;
    level.sleep = sleep != 0;
    level.dbm = power_dbm;
    auto sim = std::make_unique<ransim_sim>();
    sim->sim = std::make_unique<ransim::Simulation>(cfg->cfg, spec, level, seed);
    sim->metrics = std::make_unique<ransim::MetricsAccumulator>(*sim->sim);
    sim->sim->add_sink(sim->metrics.get());
    *out = sim.release();
  });
}

void ransim_sim_free(ransim_sim* sim) { delete sim; }

ransim_status ransim_sim_enable_csv_logs(ransim_sim* sim, const char* out_dir) {
  if (!sim || !out_dir) return invalid_arg("sim/out_dir is null");
  if (sim->csv_sink) return invalid_arg("csv logs already enabled");
  return guarded([&] {
    sim->csv_sink = std::make_unique<ransim::CsvLogSink>(
        out_dir, sim->sim->seed(), sim->sim->scenario().name, true);
    sim->sim->add_sink(sim->csv_sink.get());
  });
}

ransim_status ransim_sim_step(ransim_sim* sim) {
  if (!sim) return invalid_arg("sim is null");
  return guarded([&] {
    if (sim->hook) {
      // Bridge the C callback through the core hook exactly once per step.
      sim->sim->set_hook([sim](ransim::Simulation&, double t_s) {
        sim->hook(sim, t_s, sim->hook_user);
      });
    } else {
      sim->sim->set_hook(nullptr);
    }
    sim->sim->step();
  });
}

ransim_status ransim_sim_run(ransim_sim* sim) {
  if (!sim) return invalid_arg("sim is null");
  return guarded([&] {
    while (!sim->sim->finished()) {
      ransim_status rc = ransim_sim_step(sim);
      if (rc != RANSIM_OK) throw ransim::RuntimeError(g_last_error);
    }
  });
}

double ransim_sim_time_s(const ransim_sim* sim) {
  return sim ? sim->sim->now_s() : -1.0;
}

int ransim_sim_num_cells(const ransim_sim* sim) {
  return sim ? static_cast<int>(sim->sim->cells().size()) : -1;
}

int ransim_sim_num_ues(const ransim_sim* sim) {
  return sim ? static_cast<int>(sim->sim->ues().size()) : -1;
}

ransim_status ransim_sim_cell_info(const ransim_sim* sim, int cell_id,
                                   ransim_cell_info* out) {
  if (!sim || !out) return invalid_arg("sim/out is null");
  const auto& cells = sim->sim->cells();
  if (cell_id < 0 || static_cast<size_t>(cell_id) >= cells.size())
    return invalid_arg("cell_id out of range");
  const ransim::CellState& cell = cells[static_cast<size_t>(cell_id)];
  const ransim::CellIntervalStats& stats =
      sim->sim->cell_stats()[static_cast<size_t>(cell_id)];
  out->cell_id = cell.cell_id;
  out->x_m = cell.position.x;
  out->y_m = cell.position.y;
  out->z_m = cell.position.z;
  out->p_tx_w = cell.p_tx_w;
  out->active = cell.active ? 1 : 0;
  out->variable_group = cell.variable_group ? 1 : 0;
  out->p_cons_w = stats.p_cons_w;
  out->n_attached = stats.n_attached;
  out->mean_tp_mbps = stats.mean_tp_mbps;
  return RANSIM_OK;
}

ransim_status ransim_sim_ue_info(const ransim_sim* sim, int ue_index,
                                 ransim_ue_info* out) {
  if (!sim || !out) return invalid_arg("sim/out is null");
  const auto& ues = sim->sim->ues();
  if (ue_index < 0 || static_cast<size_t>(ue_index) >= ues.size())
    return invalid_arg("ue_index out of range");
  const ransim::UEState& ue = ues[static_cast<size_t>(ue_index)];
  out->ue_id = ue.ue_id;
  out->x_m = ue.position.x;
  out->y_m = ue.position.y;
  out->z_m = ue.position.z;
  out->serving_cell = ue.serving_cell;
  out->sinr_db = ue.sinr_db;
  out->cqi = ue.cqi;
  out->mcs = ue.mcs;
  out->se_bps_hz = ue.se_bps_hz;
  out->throughput_mbps = ue.throughput_mbps;
  return RANSIM_OK;
}

ransim_status ransim_sim_set_hook(ransim_sim* sim, ransim_hook_fn fn, void* user) {
  if (!sim) return invalid_arg("sim is null");
  sim->hook = fn;
  sim->hook_user = user;
  return RANSIM_OK;
}

ransim_status ransim_sim_cmd_set_power_w(ransim_sim* sim, int cell_id, double p_tx_w) {
  if (!sim) return invalid_arg("sim is null");
  return guarded([&] { sim->sim->cmd_set_power_w(cell_id, p_tx_w); });
}

ransim_status ransim_sim_cmd_set_power_dbm(ransim_sim* sim, int cell_id,
                                           double p_tx_dbm) {
  if (!sim) return invalid_arg("sim is null");
  return guarded(
      [&] { sim->sim->cmd_set_power_w(cell_id, ransim::dbm_to_w(p_tx_dbm)); });
}

ransim_status ransim_sim_cmd_sleep(ransim_sim* sim, int cell_id) {
  if (!sim) return invalid_arg("sim is null");
  return guarded([&] { sim->sim->cmd_sleep(cell_id); });
}

ransim_status ransim_sim_cmd_wake(ransim_sim* sim, int cell_id, double p_tx_w) {
  if (!sim) return invalid_arg("sim is null");
  return guarded([&] { sim->sim->cmd_wake(cell_id, p_tx_w); });
}

int ransim_sim_rejected_commands(const ransim_sim* sim) {
  return sim ? static_cast<int>(sim->sim->rejected_commands().size()) : -1;
}

const char* ransim_sim_rejected_message(const ransim_sim* sim, int index) {
  if (!sim) return "";
  const auto& rejected = sim->sim->rejected_commands();
  if (index < 0 || static_cast<size_t>(index) >= rejected.size()) return "";
  return rejected[static_cast<size_t>(index)].c_str();
}

ransim_status ransim_sim_metrics_json(const ransim_sim* sim, char** out) {
  if (!sim || !out) return invalid_arg("sim/out is null");
  return guarded([&] {
    if (!sim->sim->finished())
      throw ransim::RuntimeError("metrics are available once the run finished");
    *out = dup_string(sim->metrics->result().to_json());
  });
}

ransim_status ransim_run_to_files(const ransim_config* cfg, const char* scenario,
                                  int sleep, double power_dbm, uint64_t seed,
                                  const char* out_dir) {
  if (!cfg || !scenario || !out_dir) return invalid_arg("cfg/scenario/out_dir is null");
  return guarded([&] {
    const ransim::ScenarioSpec spec = ransim::parse_scenario(scenario);
    ransim::PowerLevel level;
    level.sleep = sleep != 0;
    level.dbm = power_dbm;
    ransim::run_to_files(cfg->cfg, spec, level, seed, out_dir, true);
  });
}

ransim_status ransim_sweep(const ransim_config* cfg, const char* scenario,
                           const double* levels_dbm, size_t n_levels, int include_sleep,
                           uint64_t seed_begin, uint64_t seed_end, int jobs,
                           int full_logs, const char* out_dir) {
  if (!cfg || !scenario || !out_dir) return invalid_arg("cfg/scenario/out_dir is null");
  return guarded([&] {
    ransim::SweepOptions options;
    if (levels_dbm != nullptr) {  // NULL keeps the default grid
      for (size_t i = 0; i < n_levels; ++i)
        options.levels.push_back(ransim::PowerLevel{false, levels_dbm[i]});
      if (include_sleep) options.levels.push_back(ransim::PowerLevel{true, 0.0});
      if (options.levels.empty())
        throw ransim::ConfigError("custom level grid is empty");
    }
    options.seed_begin = seed_begin;
    options.seed_end = seed_end;
    options.jobs = jobs;
    options.full_logs = full_logs != 0;
    options.out_dir = out_dir;
    ransim::run_sweep(cfg->cfg, ransim::parse_scenario(scenario), options);
  });
}

ransim_status ransim_aggregate(const char* sweep_dir) {
  if (!sweep_dir) return invalid_arg("sweep_dir is null");
  return guarded([&] { ransim::aggregate_sweep(sweep_dir); });
}

ransim_status ransim_replay_verify(const char* dir) {
  if (!dir) return invalid_arg("dir is null");
  return guarded([&] { ransim::replay_verify(dir); });
}

ransim_status ransim_plot(const char* const* summary_paths, size_t n,
                          const char* out_dir) {
  if (!summary_paths || !out_dir) return invalid_arg("summary_paths/out_dir is null");
  return guarded([&] {
    std::vector<ransim::SweepSummary> summaries;
    for (size_t i = 0; i < n; ++i) {
      const std::string text = ransim::csv::read_file(summary_paths[i]);
      summaries.push_back(ransim::SweepSummary::from_json(text, summary_paths[i]));
    }
    ransim::plot_summaries(summaries, out_dir);
  });
}

void ransim_string_free(char* s) { std::free(s); }

}  // extern "C"
