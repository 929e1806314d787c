// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "core/errors.hpp"

namespace ransim {

using nlohmann::json;

double mean_bs_throughput_mbps(int cell_id, const std::vector<UEState>& ues) {
  double sum = 0.0;
  int count = 0;
  for (const UEState& ue : ues) {
    if (ue.serving_cell != cell_id || ue.cqi < 1) continue;  // no usable link
    sum += ue.throughput_mbps;
    ++count;
  }
  return count > 0 ? sum / count : 0.0;
}

double set_mean(const std::vector<double>& per_cell, const std::vector<int>& members) {
  if (members.empty()) throw DomainError("set metric over an empty set");
  double sum = 0.0;
  for (int id : members) {
    if (id < 0 || static_cast<size_t>(id) >= per_cell.size())
      throw DomainError("set member " + std::to_string(id) + " has no per-cell value");
    sum += per_cell[static_cast<size_t>(id)];
  }
  return sum / static_cast<double>(members.size());
}

double set_se_bps_hz(double t_mbps, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be > 0");
  return t_mbps / (bandwidth_hz / 1e6);  // Mb/s per MHz == bit/s/Hz
}

double set_ee_mb_per_j(double t_mbps, double pc_w) {
  if (!(pc_w > 0.0)) throw DomainError("set power must be > 0 W");
  return t_mbps / pc_w;  // Mb/s over J/s
}

void RunMetrics::compute_sets() {
  const size_t n = cell_mean_tp_mbps.size();
  // Throughput means run over the cells that served at least one connection
  // (a cell that carried traffic averages > 0; a sleeping or eclipsed cell is
  // exactly 0 and is not a serving cell).  Consumption means run over every
  // member cell: powered-down hardware still draws its sleeping wattage.
  double tp_v = 0.0, tp_s = 0.0, pc_v = 0.0, pc_s = 0.0;
  int serving_v = 0, serving_s = 0, n_v = 0, n_s = 0;
  for (size_t j = 0; j < n; ++j) {
    const bool serving = cell_mean_tp_mbps[j] > 0.0;
    if (cell_variable[j]) {
      if (serving) {
        tp_v += cell_mean_tp_mbps[j];
        ++serving_v;
      }
      pc_v += cell_mean_p_cons_w[j];
      ++n_v;
    } else {
      if (serving) {
        tp_s += cell_mean_tp_mbps[j];
        ++serving_s;
      }
      pc_s += cell_mean_p_cons_w[j];
      ++n_s;
    }
  }
  has_kv = n_v > 0;
  auto fill = [this](SetMetrics& set, double tp_sum, int serving_count, double pc_sum,
                     int member_count) {
    set.t_mbps = serving_count > 0 ? tp_sum / serving_count : 0.0;
    set.pc_w = pc_sum / member_count;
    set.pc_kw = set.pc_w / 1000.0;
    set.se_bps_hz = set_se_bps_hz(set.t_mbps, bandwidth_hz);
    set.ee_mb_per_j = set_ee_mb_per_j(set.t_mbps, set.pc_w);
  };
  if (n_v > 0) fill(kv, tp_v, serving_v, pc_v, n_v);
  if (n_s > 0) fill(ks, tp_s, serving_s, pc_s, n_s);
  fill(all, tp_v + tp_s, serving_v + serving_s, pc_v + pc_s, n_v + n_s);
}

namespace {

json set_to_json(const SetMetrics& set) {
  return json{{"t_mbps", set.t_mbps},
              {"pc_kw", set.pc_kw},
              {"se_bps_hz", set.se_bps_hz},
              {"ee_mb_per_j", set.ee_mb_per_j}};
}

SetMetrics set_from_json(const json& obj) {
  SetMetrics set;
  set.t_mbps = obj.at("t_mbps").get<double>();
  set.pc_kw = obj.at("pc_kw").get<double>();
  set.pc_w = set.pc_kw * 1000.0;
  set.se_bps_hz = obj.at("se_bps_hz").get<double>();
  set.ee_mb_per_j = obj.at("ee_mb_per_j").get<double>();
  return set;
}

json level_value(const std::string& label) {
  if (label == "-inf") return json("-inf");
  try {
    return json(csv::parse_double(label, "level label"));
  } catch (const RuntimeError&) {
    return json(label);  // e.g. "baseline"
  }
}

}  // namespace

std::string RunMetrics::to_json() const {
  json doc;
  doc["scenario"] = scenario;
  doc["power_dbm"] = level_value(level_label);
  doc["seed"] = seed;
  doc["tau_s"] = tau_s;
  doc["interval_s"] = interval_s;
  doc["bandwidth_hz"] = bandwidth_hz;
  doc["n_ues"] = n_ues;
  doc["cells"] = {{"mean_tp_mbps", cell_mean_tp_mbps},
                  {"mean_p_cons_w", cell_mean_p_cons_w},
                  {"variable", cell_variable}};
  doc["sets"] = json::object();
  doc["sets"]["kv"] = has_kv ? set_to_json(kv) : json(nullptr);
  doc["sets"]["ks"] = set_to_json(ks);
  doc["sets"]["union"] = set_to_json(all);
  return doc.dump(2) + "\n";
}

RunMetrics RunMetrics::from_json(const std::string& text, const std::string& context) {
  RunMetrics m;
  json doc;
  try {
    doc = json::parse(text);
    m.scenario = doc.at("scenario").get<std::string>();
    const json& lvl = doc.at("power_dbm");
    m.level_label = lvl.is_string() ? lvl.get<std::string>() : csv::format_double(lvl.get<double>());
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.tau_s = doc.at("tau_s").get<double>();
    m.interval_s = doc.at("interval_s").get<double>();
    m.bandwidth_hz = doc.at("bandwidth_hz").get<double>();
    m.n_ues = doc.at("n_ues").get<std::uint64_t>();
    m.cell_mean_tp_mbps = doc.at("cells").at("mean_tp_mbps").get<std::vector<double>>();
    m.cell_mean_p_cons_w = doc.at("cells").at("mean_p_cons_w").get<std::vector<double>>();
    m.cell_variable = doc.at("cells").at("variable").get<std::vector<bool>>();
    m.has_kv = !doc.at("sets").at("kv").is_null();
    if (m.has_kv) m.kv = set_from_json(doc.at("sets").at("kv"));
    m.ks = set_from_json(doc.at("sets").at("ks"));
    m.all = set_from_json(doc.at("sets").at("union"));
  } catch (const json::exception& e) {
    throw RuntimeError(context + ": malformed metrics JSON: " + e.what());
  }
  return m;
}

MetricsAccumulator::MetricsAccumulator(const Simulation& sim) {
  const auto& cells = sim.cells();
  n_cells_ = static_cast<int>(cells.size());
  tp_sums_.assign(cells.size(), 0.0);
  pc_sums_.assign(cells.size(), 0.0);
  metrics_.scenario = sim.scenario().name;
  metrics_.level_label =
      sim.scenario().is_baseline() ? "baseline" : sim.level().label();
  metrics_.seed = sim.seed();
  metrics_.tau_s = sim.duration_s();
  metrics_.interval_s = sim.interval_s();
  metrics_.bandwidth_hz = sim.config().network.bandwidth_hz;
  metrics_.n_ues = sim.ues().size();
  metrics_.cell_variable.resize(cells.size());
  for (size_t j = 0; j < cells.size(); ++j)
    metrics_.cell_variable[j] = cells[j].variable_group;
}

void MetricsAccumulator::on_cell_row(double, const CellState& cell,
                                     const CellIntervalStats& stats) {
  tp_sums_[static_cast<size_t>(cell.cell_id)] += stats.mean_tp_mbps;
  pc_sums_[static_cast<size_t>(cell.cell_id)] += stats.p_cons_w;
  if (cell.cell_id == n_cells_ - 1) ++n_intervals_;
}

void MetricsAccumulator::on_run_end() {
  if (finished_) return;
  finished_ = true;
  metrics_.cell_mean_tp_mbps.resize(tp_sums_.size());
  metrics_.cell_mean_p_cons_w.resize(pc_sums_.size());
  for (size_t j = 0; j < tp_sums_.size(); ++j) {
    metrics_.cell_mean_tp_mbps[j] = tp_sums_[j] / static_cast<double>(n_intervals_);
    metrics_.cell_mean_p_cons_w[j] = pc_sums_[j] / static_cast<double>(n_intervals_);
  }
  metrics_.compute_sets();
}

RunMetrics replay_cell_log(const std::string& cell_log_path, double bandwidth_hz) {
  const std::string text = csv::read_file(cell_log_path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "t_s,seed,scenario,cell_id,group,p_tx_dbm,p_cons_w,n_attached,mean_tp_mbps")
    throw RuntimeError(cell_log_path + ": unexpected cell_log header");

  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line);
  if (rows.empty()) throw RuntimeError(cell_log_path + ": no rows");

  // Rows are grouped per interval with ascending cell ids; the first
  // interval's extent is where the t field first changes.
  const std::string first_t(csv::split(rows[0])[0]);
  size_t n_cells = 0;
  while (n_cells < rows.size() &&
         std::string(csv::split(rows[n_cells])[0]) == first_t)
    ++n_cells;
  if (rows.size() % n_cells != 0)
    throw RuntimeError(cell_log_path + ": truncated interval block");
  const long long n_intervals = static_cast<long long>(rows.size() / n_cells);

  RunMetrics m;
  m.bandwidth_hz = bandwidth_hz;
  std::vector<double> tp_sums(n_cells, 0.0), pc_sums(n_cells, 0.0);
  m.cell_variable.resize(n_cells);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto f = csv::split(rows[r]);
    if (f.size() != 9)
      throw RuntimeError(cell_log_path + ": malformed row: " + rows[r]);
    const size_t expected_cell = r % n_cells;
    const long long cell_id = csv::parse_int(f[3], cell_log_path);
    if (cell_id != static_cast<long long>(expected_cell))
      throw RuntimeError(cell_log_path + ": cell id out of order: " + rows[r]);
    if (r < n_cells) {
      m.cell_variable[expected_cell] = f[4] == "variable";
      if (r == 0) {
        m.seed = csv::parse_uint(f[1], cell_log_path);
        m.scenario = std::string(f[2]);
      }
    }
    tp_sums[expected_cell] += csv::parse_double(f[8], cell_log_path);
    pc_sums[expected_cell] += csv::parse_double(f[6], cell_log_path);
  }

  m.cell_mean_tp_mbps.resize(tp_sums.size());
  m.cell_mean_p_cons_w.resize(pc_sums.size());
  for (size_t j = 0; j < tp_sums.size(); ++j) {
    m.cell_mean_tp_mbps[j] = tp_sums[j] / static_cast<double>(n_intervals);
    m.cell_mean_p_cons_w[j] = pc_sums[j] / static_cast<double>(n_intervals);
  }
  m.compute_sets();
  return m;
}

Stat mean_std(const std::vector<double>& values) {
  Stat s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double acc = 0.0;
  for (double v : values) acc += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(acc / static_cast<double>(values.size() - 1));
  return s;
}

std::vector<LevelAggregate> aggregate_seeds(const std::vector<RunMetrics>& runs,
                                            const std::vector<std::string>& level_labels,
                                            const std::vector<std::uint64_t>& seeds) {
  std::unordered_map<std::string, const RunMetrics*> index;
  index.reserve(runs.size());
  for (const RunMetrics& run : runs)
    index[run.level_label + "/" + std::to_string(run.seed)] = &run;

  std::vector<LevelAggregate> out;
  out.reserve(level_labels.size());
  for (const std::string& label : level_labels) {
    LevelAggregate agg;
    agg.level_label = label;
    std::vector<const RunMetrics*> group;
    for (std::uint64_t seed : seeds) {
      auto it = index.find(label + "/" + std::to_string(seed));
      if (it == index.end())
        throw IncompleteSweepError("missing run: level " + label + ", seed " +
                                   std::to_string(seed));
      group.push_back(it->second);
    }
    agg.n_seeds = static_cast<int>(group.size());
    agg.has_kv = !group.empty() && group.front()->has_kv;
    auto collect = [&group](auto pick) {
      std::vector<double> values;
      values.reserve(group.size());
      for (const RunMetrics* run : group) values.push_back(pick(*run));
      return mean_std(values);
    };
    auto fill = [&collect](SetAggregate& dst, SetMetrics RunMetrics::*set) {
      dst.t_mbps = collect([set](const RunMetrics& r) { return (r.*set).t_mbps; });
      dst.pc_kw = collect([set](const RunMetrics& r) { return (r.*set).pc_kw; });
      dst.se_bps_hz = collect([set](const RunMetrics& r) { return (r.*set).se_bps_hz; });
      dst.ee_mb_per_j =
          collect([set](const RunMetrics& r) { return (r.*set).ee_mb_per_j; });
    };
    if (agg.has_kv) fill(agg.kv, &RunMetrics::kv);
    fill(agg.ks, &RunMetrics::ks);
    fill(agg.all, &RunMetrics::all);
    out.push_back(std::move(agg));
  }
  return out;
}

std::vector<std::string> presentation_order(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    const bool sa = a == "-inf", sb = b == "-inf";
    if (sa != sb) return sa;  // sleep first
    if (sa && sb) return false;
    return csv::parse_double(a, "level") < csv::parse_double(b, "level");
  });
  return labels;
}

namespace {

json stat_to_json(const Stat& s) { return json{{"mean", s.mean}, {"std", s.std}}; }

Stat stat_from_json(const json& obj) {
  return Stat{obj.at("mean").get<double>(), obj.at("std").get<double>()};
}

json set_agg_to_json(const SetAggregate& agg) {
  return json{{"t_mbps", stat_to_json(agg.t_mbps)},
              {"pc_kw", stat_to_json(agg.pc_kw)},
              {"se_bps_hz", stat_to_json(agg.se_bps_hz)},
              {"ee_mb_per_j", stat_to_json(agg.ee_mb_per_j)}};
}

SetAggregate set_agg_from_json(const json& obj) {
  SetAggregate agg;
  agg.t_mbps = stat_from_json(obj.at("t_mbps"));
  agg.pc_kw = stat_from_json(obj.at("pc_kw"));
  agg.se_bps_hz = stat_from_json(obj.at("se_bps_hz"));
  agg.ee_mb_per_j = stat_from_json(obj.at("ee_mb_per_j"));
  return agg;
}

}  // namespace

std::string SweepSummary::to_json() const {
  json doc;
  doc["scenario"] = scenario;
  doc["variable_cells"] = variable_cells;
  doc["seeds"] = {{"begin", seed_begin},
                  {"end", seed_end},
                  {"count", seed_end - seed_begin + 1}};
  doc["tau_s"] = tau_s;
  doc["interval_s"] = interval_s;
  doc["bandwidth_hz"] = bandwidth_hz;
  doc["config_fnv64"] = config_fingerprint;
  doc["levels"] = json::array();
  for (const LevelAggregate& lvl : levels) {
    json entry;
    entry["power_dbm"] = level_value(lvl.level_label);
    entry["n_seeds"] = lvl.n_seeds;
    entry["sets"] = json::object();
    entry["sets"]["kv"] = lvl.has_kv ? set_agg_to_json(lvl.kv) : json(nullptr);
    entry["sets"]["ks"] = set_agg_to_json(lvl.ks);
    entry["sets"]["union"] = set_agg_to_json(lvl.all);
    doc["levels"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

SweepSummary SweepSummary::from_json(const std::string& text, const std::string& context) {
  SweepSummary s;
  try {
    const json doc = json::parse(text);
    s.scenario = doc.at("scenario").get<std::string>();
    s.variable_cells = doc.at("variable_cells").get<std::vector<int>>();
    s.seed_begin = doc.at("seeds").at("begin").get<std::uint64_t>();
    s.seed_end = doc.at("seeds").at("end").get<std::uint64_t>();
    s.tau_s = doc.at("tau_s").get<double>();
    s.interval_s = doc.at("interval_s").get<double>();
    s.bandwidth_hz = doc.at("bandwidth_hz").get<double>();
    s.config_fingerprint = doc.at("config_fnv64").get<std::string>();
    for (const json& entry : doc.at("levels")) {
      LevelAggregate lvl;
      const json& power = entry.at("power_dbm");
      lvl.level_label = power.is_string() ? power.get<std::string>()
                                          : csv::format_double(power.get<double>());
      lvl.n_seeds = entry.at("n_seeds").get<int>();
      lvl.has_kv = !entry.at("sets").at("kv").is_null();
      if (lvl.has_kv) lvl.kv = set_agg_from_json(entry.at("sets").at("kv"));
      lvl.ks = set_agg_from_json(entry.at("sets").at("ks"));
      lvl.all = set_agg_from_json(entry.at("sets").at("union"));
      s.levels.push_back(std::move(lvl));
    }
  } catch (const json::exception& e) {
    throw RuntimeError(context + ": malformed summary JSON: " + e.what());
  }
  return s;
}

std::string SweepSummary::to_csv() const {
  std::string out =
      "scenario,power_dbm,set,n_seeds,t_mbps_mean,t_mbps_std,pc_kw_mean,pc_kw_std,"
      "se_bps_hz_mean,se_bps_hz_std,ee_mb_per_j_mean,ee_mb_per_j_std\n";
  for (const LevelAggregate& lvl : levels) {
    auto row = [&](const char* set_name, const SetAggregate& agg) {
      out += scenario;
      out += ',';
      out += lvl.level_label;
      out += ',';
      out += set_name;
      out += ',';
      csv::append_int(out, lvl.n_seeds);
      for (const Stat* s : {&agg.t_mbps, &agg.pc_kw, &agg.se_bps_hz, &agg.ee_mb_per_j}) {
        out += ',';
        csv::append_double(out, s->mean);
        out += ',';
        csv::append_double(out, s->std);
      }
      out += '\n';
    };
    if (lvl.has_kv) row("kv", lvl.kv);
    row("ks", lvl.ks);
    row("union", lvl.all);
  }
  return out;
}

}  // namespace ransim
