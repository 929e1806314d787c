// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/config.hpp"

#include <cmath>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace ransim {

using nlohmann::json;

namespace {

// Strict section reader: every key in `obj` must be consumed exactly once.
class Section {
 public:
  Section(const json& obj, std::string name) : obj_(obj), name_(std::move(name)) {
    if (!obj.is_object()) throw ConfigError("section '" + name_ + "' must be an object");
  }

  template <typename T>
  void get(const char* key, T& out) {
    auto it = obj_.find(key);
    if (it == obj_.end()) return;
    seen_.insert(key);
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ConfigError("key '" + name_ + "." + key + "' has the wrong type");
    }
  }

  template <typename T>
  void get_optional(const char* key, std::optional<T>& out) {
    auto it = obj_.find(key);
    if (it == obj_.end()) return;
    seen_.insert(key);
    if (it->is_null()) {
      out.reset();
      return;
    }
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw ConfigError("key '" + name_ + "." + key + "' has the wrong type");
    }
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!seen_.count(it.key()))
        throw ConfigError("unknown key '" + name_ + "." + it.key() + "'");
  }

 private:
  const json& obj_;
  std::string name_;
  std::set<std::string> seen_;
};

std::string resolve_path(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

void load_table_file(const std::string& path, const std::string& expected_fnv,
                     bool is_cqi, LinkTables& tables) {
  const std::string text = csv::read_file(path);
  const std::string actual = csv::fnv1a64_hex(text);
  if (actual != expected_fnv)
    throw ChecksumError("data file '" + path + "' has checksum " + actual +
                        ", expected " + expected_fnv);
  if (is_cqi)
    tables.cqi_thresholds_db = LinkTables::parse_cqi_csv(text, path);
  else
    tables.mcs_se = LinkTables::parse_mcs_csv(text, path);
}

}  // namespace

void RunConfig::validate() const {
  network.validate();
  energy.validate();
  pathloss.validate();
  tables.validate();
  if (!(budget.noise_figure_db >= 0.0))
    throw ConfigError("link.noise_figure_db must be >= 0");
  if (!std::isfinite(budget.g_mimo_db) || !std::isfinite(budget.g_ant_db))
    throw ConfigError("link gains must be finite");
  if (!(interval_s > 0.0)) throw ConfigError("run.interval_s must be > 0");
  if (!(duration_s >= interval_s))
    throw ConfigError("run.duration_s must be >= run.interval_s");
  if (!(handover_hysteresis_db >= 0.0))
    throw ConfigError("run.handover_hysteresis_db must be >= 0");
}

RunConfig RunConfig::from_json_text(const std::string& text, const std::string& base_dir) {
  RunConfig cfg;

  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  json doc;
  if (trimmed.empty()) {
    doc = json::object();  // empty file = all defaults
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

  static const std::set<std::string> kSections = {"network", "energy", "link", "run"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!kSections.count(it.key()))
      throw ConfigError("unknown key '" + it.key() + "'");

  if (doc.contains("network")) {
    Section s(doc["network"], "network");
    s.get("carrier_freq_hz", cfg.network.carrier_freq_hz);
    s.get("bandwidth_hz", cfg.network.bandwidth_hz);
    s.get("n_bs", cfg.network.n_bs);
    s.get("bs_height_m", cfg.network.bs_height_m);
    s.get("p_max_w", cfg.network.p_max_w);
    s.get("isd_m", cfg.network.isd_m);
    s.get("ue_density_per_km2", cfg.network.ue_density_per_km2);
    s.get("ue_height_m", cfg.network.ue_height_m);
    s.get_optional("fixed_ue_count", cfg.network.fixed_ue_count);
    s.finish();
  }
  if (doc.contains("energy")) {
    Section s(doc["energy"], "energy");
    s.get("n_trx", cfg.energy.n_trx);
    s.get("n_ant", cfg.energy.n_ant);
    s.get("p0_w", cfg.energy.p0_w);
    s.get("eta_pa", cfg.energy.eta_pa);
    s.get("p_rf_w", cfg.energy.p_rf_w);
    s.get("p_bb_w", cfg.energy.p_bb_w);
    s.get("sigma_feed", cfg.energy.sigma_feed);
    s.get("sigma_dc", cfg.energy.sigma_dc);
    s.get("sigma_ms", cfg.energy.sigma_ms);
    s.get("sigma_cool", cfg.energy.sigma_cool);
    s.get_optional("deep_sleep_w", cfg.energy.deep_sleep_w);
    s.finish();
  }
  if (doc.contains("link")) {
    Section s(doc["link"], "link");
    s.get("g_mimo_db", cfg.budget.g_mimo_db);
    s.get("g_ant_db", cfg.budget.g_ant_db);
    s.get("noise_figure_db", cfg.budget.noise_figure_db);
    s.get("thermal_noise_dbm_hz", cfg.budget.thermal_noise_dbm_hz);
    std::string variant = "uma_nlos";
    s.get("pathloss", variant);
    if (variant == "uma_nlos")
      cfg.pathloss.variant = PathlossVariant::UmaNlos;
    else if (variant == "uma_los")
      cfg.pathloss.variant = PathlossVariant::UmaLos;
    else
      throw ConfigError("link.pathloss must be 'uma_nlos' or 'uma_los'");
    s.get("building_height_m", cfg.pathloss.building_height_m);
    s.get("street_width_m", cfg.pathloss.street_width_m);
    std::string map_name = "linear";
    s.get("cqi_to_mcs", map_name);
    if (map_name == "linear")
      cfg.cqi_to_mcs_map = CqiToMcsMap::Linear;
    else if (map_name == "floor15")
      cfg.cqi_to_mcs_map = CqiToMcsMap::Floor15;
    else
      throw ConfigError("link.cqi_to_mcs must be 'linear' or 'floor15'");
    s.get("share_bandwidth", cfg.share_bandwidth);
    s.get("cqi_table_path", cfg.cqi_table_path);
    s.get("cqi_table_fnv64", cfg.cqi_table_fnv64);
    s.get("mcs_table_path", cfg.mcs_table_path);
    s.get("mcs_table_fnv64", cfg.mcs_table_fnv64);
    s.finish();
  }
  if (doc.contains("run")) {
    Section s(doc["run"], "run");
    s.get("duration_s", cfg.duration_s);
    s.get("interval_s", cfg.interval_s);
    s.get("handover_hysteresis_db", cfg.handover_hysteresis_db);
    s.finish();
  }

  cfg.cqi_table_path = resolve_path(cfg.cqi_table_path, base_dir);
  cfg.mcs_table_path = resolve_path(cfg.mcs_table_path, base_dir);
  if (!cfg.cqi_table_path.empty())
    load_table_file(cfg.cqi_table_path, cfg.cqi_table_fnv64, true, cfg.tables);
  if (!cfg.mcs_table_path.empty())
    load_table_file(cfg.mcs_table_path, cfg.mcs_table_fnv64, false, cfg.tables);

  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  const std::string text = csv::read_file(path);
  const std::string base_dir = std::filesystem::path(path).parent_path().string();
  return from_json_text(text, base_dir);
}

std::string RunConfig::to_json_text() const {
  json doc;
  doc["network"] = {
      {"carrier_freq_hz", network.carrier_freq_hz},
      {"bandwidth_hz", network.bandwidth_hz},
      {"n_bs", network.n_bs},
      {"bs_height_m", network.bs_height_m},
      {"p_max_w", network.p_max_w},
      {"isd_m", network.isd_m},
      {"ue_density_per_km2", network.ue_density_per_km2},
      {"ue_height_m", network.ue_height_m},
      {"fixed_ue_count",
       network.fixed_ue_count ? json(*network.fixed_ue_count) : json(nullptr)},
  };
  doc["energy"] = {
      {"n_trx", energy.n_trx},
      {"n_ant", energy.n_ant},
      {"p0_w", energy.p0_w},
      {"eta_pa", energy.eta_pa},
      {"p_rf_w", energy.p_rf_w},
      {"p_bb_w", energy.p_bb_w},
      {"sigma_feed", energy.sigma_feed},
      {"sigma_dc", energy.sigma_dc},
      {"sigma_ms", energy.sigma_ms},
      {"sigma_cool", energy.sigma_cool},
      {"deep_sleep_w", energy.deep_sleep_w ? json(*energy.deep_sleep_w) : json(nullptr)},
  };
  doc["link"] = {
      {"g_mimo_db", budget.g_mimo_db},
      {"g_ant_db", budget.g_ant_db},
      {"noise_figure_db", budget.noise_figure_db},
      {"thermal_noise_dbm_hz", budget.thermal_noise_dbm_hz},
      {"pathloss", pathloss.variant == PathlossVariant::UmaNlos ? "uma_nlos" : "uma_los"},
      {"building_height_m", pathloss.building_height_m},
      {"street_width_m", pathloss.street_width_m},
      {"cqi_to_mcs", cqi_to_mcs_map == CqiToMcsMap::Linear ? "linear" : "floor15"},
      {"share_bandwidth", share_bandwidth},
      {"cqi_table_path", cqi_table_path},
      {"cqi_table_fnv64", cqi_table_fnv64},
      {"mcs_table_path", mcs_table_path},
      {"mcs_table_fnv64", mcs_table_fnv64},
  };
  doc["run"] = {
      {"duration_s", duration_s},
      {"interval_s", interval_s},
      {"handover_hysteresis_db", handover_hysteresis_db},
  };
  return doc.dump(2) + "\n";
}

std::string RunConfig::fingerprint() const { return csv::fnv1a64_hex(to_json_text()); }

}  // namespace ransim
