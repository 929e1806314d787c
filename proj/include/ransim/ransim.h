/* Copyright (c) 2026 the ransim authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * ransim — system-level simulator for macro-cell RAN energy and throughput
 * studies.  C API of the shared library: opaque handles, integer status
 * codes, thread-local error messages.  The same codes are used as process
 * exit codes by the bundled CLI.
 */
#ifndef RANSIM_H
#define RANSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RANSIM_BUILD)
#    define RANSIM_API __declspec(dllexport)
#  else
#    define RANSIM_API __declspec(dllimport)
#  endif
#else
#  define RANSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ransim_status {
  RANSIM_OK = 0,
  RANSIM_E_CONFIG = 2,           /* schema violation / invalid value / bad scenario */
  RANSIM_E_RUNTIME = 3,          /* I/O or execution failure */
  RANSIM_E_INCOMPLETE_SWEEP = 4, /* sweep/aggregate found missing runs */
  RANSIM_E_FILE_MISSING = 5,     /* referenced file does not exist */
  RANSIM_E_CHECKSUM = 6,         /* data file does not match its recorded checksum */
  RANSIM_E_INVALID_ARG = 7       /* null pointer / out-of-range argument */
} ransim_status;

typedef struct ransim_config ransim_config; /* immutable run configuration */
typedef struct ransim_sim ransim_sim;       /* one seeded simulation run */

RANSIM_API const char* ransim_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
RANSIM_API const char* ransim_last_error(void);

/* ---- configuration ------------------------------------------------------ */

/* Built-in defaults (the Table-II style macro deployment, embedded link tables). */
RANSIM_API ransim_status ransim_config_create(ransim_config** out);
/* Load a JSON config file; unknown keys are rejected.  An empty file means
 * "all defaults".  Relative table paths resolve against the file's directory. */
RANSIM_API ransim_status ransim_config_load(const char* path, ransim_config** out);
/* Same, from an in-memory JSON document. */
RANSIM_API ransim_status ransim_config_load_json(const char* json_text,
                                                 ransim_config** out);
RANSIM_API void ransim_config_free(ransim_config* cfg);

/* Canonical JSON rendering of the effective config (all keys, defaults filled).
 * Returns a malloc'd string; release with ransim_string_free. */
RANSIM_API ransim_status ransim_config_to_json(const ransim_config* cfg, char** out);

/* ---- scalar model helpers ------------------------------------------------ */

/* Total BS consumption (W) for a radiated power p_tx_w under cfg's power model. */
RANSIM_API ransim_status ransim_bs_power_w(const ransim_config* cfg, double p_tx_w,
                                           double* out_w);
/* Pathloss (dB) between tx and rx under cfg's pathloss model at cfg's carrier. */
RANSIM_API ransim_status ransim_pathloss_db(const ransim_config* cfg, double tx_x_m,
                                            double tx_y_m, double tx_z_m,
                                            double rx_x_m, double rx_y_m,
                                            double rx_z_m, double* out_db);

/* ---- topology ------------------------------------------------------------ */

/* Write sites.csv and region.csv for cfg's deployment into out_dir. */
RANSIM_API ransim_status ransim_write_topology_csv(const ransim_config* cfg,
                                                   const char* out_dir);
/* Write ues.csv (the seeded Poisson placement) into out_dir. */
RANSIM_API ransim_status ransim_write_ue_csv(const ransim_config* cfg, uint64_t seed,
                                             const char* out_dir);

/* ---- single simulation run ----------------------------------------------- */

/* scenario: built-in name ("baseline", "centre", "inner-ring-antipodal",
 * "inner-ring-alternate", "central-triad") or comma-separated cell ids.
 * sleep != 0 puts the scenario's variable cells to sleep; otherwise power_dbm
 * (<= 43 dBm nominal) is applied to them.  power_dbm is ignored for "baseline". */
RANSIM_API ransim_status ransim_sim_create(const ransim_config* cfg,
                                           const char* scenario, int sleep,
                                           double power_dbm, uint64_t seed,
                                           ransim_sim** out);
RANSIM_API void ransim_sim_free(ransim_sim* sim);

/* Stream ue_log.csv / cell_log.csv rows to out_dir; call before stepping. */
RANSIM_API ransim_status ransim_sim_enable_csv_logs(ransim_sim* sim,
                                                    const char* out_dir);

RANSIM_API ransim_status ransim_sim_step(ransim_sim* sim); /* one loop interval */
RANSIM_API ransim_status ransim_sim_run(ransim_sim* sim);  /* remaining intervals */

RANSIM_API double ransim_sim_time_s(const ransim_sim* sim);
RANSIM_API int ransim_sim_num_cells(const ransim_sim* sim);
RANSIM_API int ransim_sim_num_ues(const ransim_sim* sim);

typedef struct ransim_cell_info {
  int cell_id;
  double x_m, y_m, z_m;
  double p_tx_w;       /* 0 when sleeping */
  int active;          /* 0 = sleeping */
  int variable_group;  /* 1 if the cell is in the scenario's variable set */
  double p_cons_w;
  int n_attached;
  double mean_tp_mbps;
} ransim_cell_info;

typedef struct ransim_ue_info {
  int ue_id;
  double x_m, y_m, z_m;
  int serving_cell; /* -1 when unattached */
  double sinr_db;   /* -inf when unattached */
  int cqi;
  int mcs; /* -1 = no transmission */
  double se_bps_hz;
  double throughput_mbps;
} ransim_ue_info;

RANSIM_API ransim_status ransim_sim_cell_info(const ransim_sim* sim, int cell_id,
                                              ransim_cell_info* out);
RANSIM_API ransim_status ransim_sim_ue_info(const ransim_sim* sim, int ue_index,
                                            ransim_ue_info* out);

/* Control hook, invoked at the start of every interval before commands are
 * applied; the callback may enqueue commands below.  Mirrors a RIC-style
 * controller and is the intended ML-framework integration point. */
typedef void (*ransim_hook_fn)(ransim_sim* sim, double t_s, void* user);
RANSIM_API ransim_status ransim_sim_set_hook(ransim_sim* sim, ransim_hook_fn fn,
                                             void* user);

/* Commands are validated when applied; invalid ones are dropped and recorded
 * (never partially applied).  p 0 W is sleep; wake requires p > 0. */
RANSIM_API ransim_status ransim_sim_cmd_set_power_w(ransim_sim* sim, int cell_id,
                                                    double p_tx_w);
RANSIM_API ransim_status ransim_sim_cmd_set_power_dbm(ransim_sim* sim, int cell_id,
                                                      double p_tx_dbm);
RANSIM_API ransim_status ransim_sim_cmd_sleep(ransim_sim* sim, int cell_id);
RANSIM_API ransim_status ransim_sim_cmd_wake(ransim_sim* sim, int cell_id,
                                             double p_tx_w);
/* Number of commands rejected so far, and the message for one of them. */
RANSIM_API int ransim_sim_rejected_commands(const ransim_sim* sim);
RANSIM_API const char* ransim_sim_rejected_message(const ransim_sim* sim, int index);

/* Per-run set metrics as a JSON document (after the run finished).
 * malloc'd string; release with ransim_string_free. */
RANSIM_API ransim_status ransim_sim_metrics_json(const ransim_sim* sim, char** out);

/* ---- orchestration -------------------------------------------------------- */

/* Run one (scenario, power, seed) to completion and write ue_log.csv,
 * cell_log.csv and metrics.json into out_dir. */
RANSIM_API ransim_status ransim_run_to_files(const ransim_config* cfg,
                                             const char* scenario, int sleep,
                                             double power_dbm, uint64_t seed,
                                             const char* out_dir);

/* Full power sweep for one scenario: levels_dbm (NULL -> the default grid
 * 43,40,...,1 dBm) plus sleep when include_sleep != 0, seeds
 * [seed_begin, seed_end], `jobs` worker threads (0 -> hardware concurrency).
 * Writes runs/<level>/<seed>/{cell_log.csv,metrics.json}, manifest.json,
 * summary.json and summary.csv into out_dir; completed runs are skipped on
 * re-invocation.  full_logs != 0 also writes per-run ue_log.csv. */
RANSIM_API ransim_status ransim_sweep(const ransim_config* cfg, const char* scenario,
                                      const double* levels_dbm, size_t n_levels,
                                      int include_sleep, uint64_t seed_begin,
                                      uint64_t seed_end, int jobs, int full_logs,
                                      const char* out_dir);

/* Rebuild summary.json/summary.csv from the per-run metrics under sweep_dir.
 * Returns RANSIM_E_INCOMPLETE_SWEEP if runs declared in the manifest are missing. */
RANSIM_API ransim_status ransim_aggregate(const char* sweep_dir);

/* Recompute every metric from the raw per-run cell logs alone and verify the
 * stored metrics.json and summary.json reproduce exactly.  Also accepts a
 * single-run directory (cell_log.csv + metrics.json). */
RANSIM_API ransim_status ransim_replay_verify(const char* dir);

/* Render throughput / power / EE / SE panels (SVG) from one or more sweep
 * summary.json files into out_dir. */
RANSIM_API ransim_status ransim_plot(const char* const* summary_paths, size_t n,
                                     const char* out_dir);

RANSIM_API void ransim_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RANSIM_H */
