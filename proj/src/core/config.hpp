// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/energy.hpp"
#include "core/link_tables.hpp"
#include "core/pathloss.hpp"
#include "core/radio.hpp"
#include "core/topology.hpp"

namespace ransim {

// Fully resolved run configuration: deployment, power model, link budget,
// link tables (loaded and checksum-verified), and loop timing.
struct RunConfig {
  NetworkConfig network;
  PowerModelParams energy;
  LinkBudget budget;
  PathlossModel pathloss;
  LinkTables tables = LinkTables::builtin();
  CqiToMcsMap cqi_to_mcs_map = CqiToMcsMap::Linear;
  bool share_bandwidth = false;

  // Empty paths mean the embedded copies of the shipped tables are used.
  std::string cqi_table_path;
  std::string cqi_table_fnv64 = kCqiTableFnv64;
  std::string mcs_table_path;
  std::string mcs_table_fnv64 = kMcsTableFnv64;

  double duration_s = 100.0;
  double interval_s = 1.0;
  double handover_hysteresis_db = 0.0;

  void validate() const;  // throws ConfigError

  // Strict parsers: unknown keys are rejected by name, omitted keys take the
  // defaults above.  An empty document means "all defaults".  Relative table
  // paths resolve against base_dir (the config file's directory).
  static RunConfig from_json_text(const std::string& text, const std::string& base_dir);
  static RunConfig from_file(const std::string& path);

  // Canonical JSON rendering with every key present (defaults filled in).
  std::string to_json_text() const;

  // FNV-1a64 of the canonical rendering; guards sweep resume against drift.
  std::string fingerprint() const;
};

}  // namespace ransim
