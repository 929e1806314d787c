// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ransim {

inline constexpr int kNumCqi = 15;     // CQI 1..15 (0 = out of range)
inline constexpr int kNumMcs = 29;     // MCS 0..28
inline constexpr int kNoTransmission = -1;

enum class CqiToMcsMap {
  Linear,   // mcs = round((cqi-1) * 28/14) = 2*(cqi-1)
  Floor15,  // mcs = min(28, floor(28*cqi/15))
};

// SINR->CQI thresholds at 10% BLER plus the MCS->spectral-efficiency table.
// Immutable after load; the shipped defaults are embedded and also stored as
// versioned CSV files whose FNV-1a64 checksums are pinned below.
struct LinkTables {
  std::array<double, kNumCqi> cqi_thresholds_db{};  // ascending, CQI 1..15
  std::array<double, kNumMcs> mcs_se{};             // strictly ascending

  void validate() const;  // throws ConfigError

  static LinkTables builtin();

  // Parse the versioned CSV formats ("cqi,min_sinr_db" / "mcs,se_bits_per_hz").
  static std::array<double, kNumCqi> parse_cqi_csv(const std::string& text,
                                                   const std::string& context);
  static std::array<double, kNumMcs> parse_mcs_csv(const std::string& text,
                                                   const std::string& context);
};

// Checksums of the shipped data files (data/cqi_thresholds.csv, data/mcs_se.csv).
inline constexpr char kCqiTableFnv64[] = "440ed48a3e241ad1";
inline constexpr char kMcsTableFnv64[] = "544554afcd209a6b";

// Largest CQI whose threshold is <= sinr_db (inclusive lower edge); 0 below
// the first threshold or for -inf (no transmission).
int sinr_to_cqi(double sinr_db, const LinkTables& tables);

// CQI 1..15 onto MCS 0..28; CQI 0 -> kNoTransmission.  Throws on cqi outside 0..15.
int cqi_to_mcs(int cqi, CqiToMcsMap map = CqiToMcsMap::Linear);

// Table entry for MCS 0..28; kNoTransmission -> 0.  Throws on other indices.
double mcs_to_se(int mcs, const LinkTables& tables);

// Eq.-style UE throughput: spectral efficiency times bandwidth.
double ue_throughput_bps(double se_bps_hz, double bandwidth_hz);

}  // namespace ransim
