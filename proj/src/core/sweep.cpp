// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/sweep.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "core/engine.hpp"
#include "core/errors.hpp"

namespace ransim {

using nlohmann::json;

RunMetrics run_to_files(const RunConfig& cfg, const ScenarioSpec& scenario,
                        PowerLevel level, std::uint64_t seed,
                        const std::string& out_dir, bool write_ue_log) {
  csv::ensure_dir(out_dir);
  Simulation sim(cfg, scenario, level, seed);
  CsvLogSink csv_sink(out_dir, seed, scenario.name, write_ue_log);
  MetricsAccumulator acc(sim);
  sim.add_sink(&csv_sink);
  sim.add_sink(&acc);
  sim.run();
  csv::write_file_atomic(out_dir + "/metrics.json", acc.result().to_json());
  return acc.result();
}

std::string run_dir(const std::string& sweep_dir, const std::string& level_label,
                    std::uint64_t seed) {
  const std::string level_tag = level_label == "-inf" ? "sleep" : "p" + level_label + "dBm";
  return sweep_dir + "/runs/" + level_tag + "/s" + std::to_string(seed);
}

namespace {

struct Manifest {
  std::string scenario;
  std::vector<int> variable_cells;
  std::vector<std::string> level_labels;  // execution order
  std::uint64_t seed_begin = 0, seed_end = 0;
  double tau_s = 0.0, interval_s = 0.0, bandwidth_hz = 0.0;
  std::string config_fingerprint;

  std::string to_json_text() const {
    json doc;
    doc["scenario"] = scenario;
    doc["variable_cells"] = variable_cells;
    doc["levels"] = level_labels;
    doc["seeds"] = {{"begin", seed_begin}, {"end", seed_end}};
    doc["tau_s"] = tau_s;
    doc["interval_s"] = interval_s;
    doc["bandwidth_hz"] = bandwidth_hz;
    doc["config_fnv64"] = config_fingerprint;
    doc["total_runs"] = level_labels.size() * (seed_end - seed_begin + 1);
    return doc.dump(2) + "\n";
  }

  static Manifest from_file(const std::string& path) {
    Manifest m;
    try {
      const json doc = json::parse(csv::read_file(path));
      m.scenario = doc.at("scenario").get<std::string>();
      m.variable_cells = doc.at("variable_cells").get<std::vector<int>>();
      m.level_labels = doc.at("levels").get<std::vector<std::string>>();
      m.seed_begin = doc.at("seeds").at("begin").get<std::uint64_t>();
      m.seed_end = doc.at("seeds").at("end").get<std::uint64_t>();
      m.tau_s = doc.at("tau_s").get<double>();
      m.interval_s = doc.at("interval_s").get<double>();
      m.bandwidth_hz = doc.at("bandwidth_hz").get<double>();
      m.config_fingerprint = doc.at("config_fnv64").get<std::string>();
    } catch (const json::exception& e) {
      throw RuntimeError(path + ": malformed manifest: " + e.what());
    }
    return m;
  }
};

SweepSummary summarise(const Manifest& manifest, const std::vector<RunMetrics>& runs) {
  SweepSummary summary;
  summary.scenario = manifest.scenario;
  summary.variable_cells = manifest.variable_cells;
  summary.seed_begin = manifest.seed_begin;
  summary.seed_end = manifest.seed_end;
  summary.tau_s = manifest.tau_s;
  summary.interval_s = manifest.interval_s;
  summary.bandwidth_hz = manifest.bandwidth_hz;
  summary.config_fingerprint = manifest.config_fingerprint;

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = manifest.seed_begin; s <= manifest.seed_end; ++s)
    seeds.push_back(s);
  summary.levels =
      aggregate_seeds(runs, presentation_order(manifest.level_labels), seeds);
  return summary;
}

void write_summary_files(const std::string& sweep_dir, const SweepSummary& summary) {
  csv::write_file_atomic(sweep_dir + "/summary.json", summary.to_json());
  csv::write_file_atomic(sweep_dir + "/summary.csv", summary.to_csv());
}

}  // namespace

SweepSummary run_sweep(const RunConfig& cfg, const ScenarioSpec& scenario,
                       const SweepOptions& options) {
  cfg.validate();
  scenario.validate(cfg.network.n_bs);
  if (scenario.is_baseline())
    throw ConfigError("a sweep needs a scenario with variable cells");
  if (options.seed_end < options.seed_begin)
    throw ConfigError("seed range is empty");
  if (options.out_dir.empty()) throw ConfigError("sweep needs an output directory");

  const std::vector<PowerLevel> levels =
      options.levels.empty() ? default_power_grid() : options.levels;
  for (const PowerLevel& level : levels)
    if (!level.sleep)  // validates the level against p_max
      scenario_power_w_from_dbm(level.dbm, cfg.network.p_max_w);

  Manifest manifest;
  manifest.scenario = scenario.name;
  manifest.variable_cells = scenario.variable_cells;
  for (const PowerLevel& level : levels) manifest.level_labels.push_back(level.label());
  manifest.seed_begin = options.seed_begin;
  manifest.seed_end = options.seed_end;
  manifest.tau_s = cfg.duration_s;
  manifest.interval_s = cfg.interval_s;
  manifest.bandwidth_hz = cfg.network.bandwidth_hz;
  manifest.config_fingerprint = cfg.fingerprint();

  csv::ensure_dir(options.out_dir);
  const std::string manifest_path = options.out_dir + "/manifest.json";
  if (csv::file_exists(manifest_path)) {
    const Manifest previous = Manifest::from_file(manifest_path);
    if (previous.config_fingerprint != manifest.config_fingerprint)
      throw ConfigError("sweep directory was created with a different config "
                        "(fingerprint " + previous.config_fingerprint + " vs " +
                        manifest.config_fingerprint + "); use a fresh --out");
  }
  csv::write_file_atomic(manifest_path, manifest.to_json_text());

  struct Task {
    PowerLevel level;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (const PowerLevel& level : levels)
    for (std::uint64_t seed = options.seed_begin; seed <= options.seed_end; ++seed)
      tasks.push_back(Task{level, seed});

  std::vector<RunMetrics> results(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string first_error;

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_workers =
      options.jobs > 0 ? static_cast<unsigned>(options.jobs) : hw;

  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& task = tasks[i];
      const std::string dir =
          run_dir(options.out_dir, task.level.label(), task.seed);
      try {
        const std::string metrics_path = dir + "/metrics.json";
        if (csv::file_exists(metrics_path)) {
          results[i] = RunMetrics::from_json(csv::read_file(metrics_path), metrics_path);
        } else {
          results[i] = run_to_files(cfg, scenario, task.level, task.seed, dir,
                                    options.full_logs);
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 0; w + 1 < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failed.load()) throw RuntimeError("sweep aborted: " + first_error);

  const SweepSummary summary = summarise(manifest, results);
  write_summary_files(options.out_dir, summary);
  return summary;
}

namespace {

std::vector<RunMetrics> load_all_metrics(const std::string& sweep_dir,
                                         const Manifest& manifest, bool from_replay) {
  std::vector<RunMetrics> runs;
  std::vector<std::string> missing;
  for (const std::string& label : manifest.level_labels) {
    for (std::uint64_t seed = manifest.seed_begin; seed <= manifest.seed_end; ++seed) {
      const std::string dir = run_dir(sweep_dir, label, seed);
      const std::string source =
          from_replay ? dir + "/cell_log.csv" : dir + "/metrics.json";
      if (!csv::file_exists(source)) {
        missing.push_back(source);
        continue;
      }
      if (from_replay) {
        RunMetrics m = replay_cell_log(source, manifest.bandwidth_hz);
        m.level_label = label;
        m.tau_s = manifest.tau_s;
        m.interval_s = manifest.interval_s;
        runs.push_back(std::move(m));
      } else {
        runs.push_back(RunMetrics::from_json(csv::read_file(source), source));
      }
    }
  }
  if (!missing.empty())
    throw IncompleteSweepError("sweep is missing " + std::to_string(missing.size()) +
                               " run(s), first: " + missing.front());
  return runs;
}

void require_equal(double a, double b, const std::string& what) {
  const bool equal = (a == b) || (std::isnan(a) && std::isnan(b));
  if (!equal)
    throw RuntimeError("replay mismatch for " + what + ": " + csv::format_double(a) +
                       " vs " + csv::format_double(b));
}

void compare_metrics(const RunMetrics& replayed, const RunMetrics& stored,
                     const std::string& context) {
  if (replayed.scenario != stored.scenario || replayed.seed != stored.seed)
    throw RuntimeError(context + ": replayed identity differs from stored metrics");
  if (replayed.cell_mean_tp_mbps.size() != stored.cell_mean_tp_mbps.size())
    throw RuntimeError(context + ": cell count differs");
  for (size_t j = 0; j < stored.cell_mean_tp_mbps.size(); ++j) {
    require_equal(replayed.cell_mean_tp_mbps[j], stored.cell_mean_tp_mbps[j],
                  context + " cell " + std::to_string(j) + " mean_tp");
    require_equal(replayed.cell_mean_p_cons_w[j], stored.cell_mean_p_cons_w[j],
                  context + " cell " + std::to_string(j) + " p_cons");
  }
  auto compare_set = [&](const SetMetrics& a, const SetMetrics& b, const char* name) {
    require_equal(a.t_mbps, b.t_mbps, context + std::string(" ") + name + ".t_mbps");
    require_equal(a.pc_kw, b.pc_kw, context + std::string(" ") + name + ".pc_kw");
    require_equal(a.se_bps_hz, b.se_bps_hz,
                  context + std::string(" ") + name + ".se_bps_hz");
    require_equal(a.ee_mb_per_j, b.ee_mb_per_j,
                  context + std::string(" ") + name + ".ee_mb_per_j");
  };
  if (stored.has_kv != replayed.has_kv)
    throw RuntimeError(context + ": variable-set presence differs");
  if (stored.has_kv) compare_set(replayed.kv, stored.kv, "kv");
  compare_set(replayed.ks, stored.ks, "ks");
  compare_set(replayed.all, stored.all, "union");
}

}  // namespace

SweepSummary aggregate_sweep(const std::string& sweep_dir) {
  const Manifest manifest = Manifest::from_file(sweep_dir + "/manifest.json");
  const std::vector<RunMetrics> runs = load_all_metrics(sweep_dir, manifest, false);
  const SweepSummary summary = summarise(manifest, runs);
  write_summary_files(sweep_dir, summary);
  return summary;
}

void replay_verify(const std::string& dir) {
  if (csv::file_exists(dir + "/manifest.json")) {
    const Manifest manifest = Manifest::from_file(dir + "/manifest.json");
    const std::vector<RunMetrics> replayed = load_all_metrics(dir, manifest, true);
    // Per-run stored metrics must match the pure log recomputation...
    size_t i = 0;
    for (const std::string& label : manifest.level_labels) {
      for (std::uint64_t seed = manifest.seed_begin; seed <= manifest.seed_end;
           ++seed, ++i) {
        const std::string metrics_path = run_dir(dir, label, seed) + "/metrics.json";
        const RunMetrics stored =
            RunMetrics::from_json(csv::read_file(metrics_path), metrics_path);
        compare_metrics(replayed[i], stored, metrics_path);
      }
    }
    // ...and the stored summary must be byte-identical to one rebuilt from them.
    SweepSummary rebuilt = summarise(manifest, replayed);
    const std::string stored_summary = csv::read_file(dir + "/summary.json");
    if (rebuilt.to_json() != stored_summary)
      throw RuntimeError("summary.json is not reproducible from the cell logs");
    return;
  }
  // Single-run directory.
  const std::string metrics_path = dir + "/metrics.json";
  const RunMetrics stored =
      RunMetrics::from_json(csv::read_file(metrics_path), metrics_path);
  RunMetrics replayed = replay_cell_log(dir + "/cell_log.csv", stored.bandwidth_hz);
  compare_metrics(replayed, stored, metrics_path);
}

}  // namespace ransim
