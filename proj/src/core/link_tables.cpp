// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/link_tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace ransim {

namespace {

// Widely used AWGN SINR thresholds (dB) at 10% BLER for CQI 1..15.
constexpr std::array<double, kNumCqi> kDefaultCqiThresholds = {
    -1.89, -0.82, 0.95, 2.95, 4.90, 7.39, 8.89, 11.02,
    13.32, 14.68, 16.62, 18.91, 21.58, 24.88, 29.32,
};

// MCS 0..28 spectral efficiencies (bit/s/Hz), assembled from the TS 38.214
// 256QAM MCS table with one extra low-rate QPSK entry at index 1 so the 29
// indices are strictly increasing; even indices reproduce the 256QAM CQI
// table under the linear CQI->MCS map.
constexpr std::array<double, kNumMcs> kDefaultMcsSe = {
    0.2344, 0.3066, 0.3770, 0.6016, 0.8770, 1.1758, 1.4766, 1.6953,
    1.9141, 2.1602, 2.4063, 2.5703, 2.7305, 3.0293, 3.3223, 3.6094,
    3.9023, 4.2129, 4.5234, 4.8164, 5.1152, 5.3320, 5.5547, 5.8906,
    6.2266, 6.5703, 6.9141, 7.1602, 7.4063,
};

std::vector<std::string> non_empty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

void LinkTables::validate() const {
  for (int i = 1; i < kNumCqi; ++i)
    if (!(cqi_thresholds_db[i] > cqi_thresholds_db[i - 1]))
      throw ConfigError("CQI thresholds must be strictly ascending");
  if (!(mcs_se[0] > 0.0)) throw ConfigError("MCS table entries must be positive");
  for (int i = 1; i < kNumMcs; ++i)
    if (!(mcs_se[i] > mcs_se[i - 1]))
      throw ConfigError("MCS spectral efficiencies must be strictly ascending");
  if (!(mcs_se[kNumMcs - 1] <= 9.6))
    throw ConfigError("MCS spectral efficiency exceeds 9.6 bit/s/Hz");
}

LinkTables LinkTables::builtin() {
  LinkTables t;
  t.cqi_thresholds_db = kDefaultCqiThresholds;
  t.mcs_se = kDefaultMcsSe;
  return t;
}

std::array<double, kNumCqi> LinkTables::parse_cqi_csv(const std::string& text,
                                                      const std::string& context) {
  const auto lines = non_empty_lines(text);
  if (lines.empty() || lines[0] != "cqi,min_sinr_db")
    throw ConfigError(context + ": expected header 'cqi,min_sinr_db'");
  if (lines.size() != kNumCqi + 1)
    throw ConfigError(context + ": expected 15 threshold rows, got " +
                      std::to_string(lines.size() - 1));
  std::array<double, kNumCqi> out{};
  for (int i = 0; i < kNumCqi; ++i) {
    const auto fields = csv::split(lines[i + 1]);
    if (fields.size() != 2) throw ConfigError(context + ": malformed row " + lines[i + 1]);
    const long long cqi = csv::parse_int(fields[0], context);
    if (cqi != i + 1)
      throw ConfigError(context + ": rows must cover CQI 1..15 in order");
    out[i] = csv::parse_double(fields[1], context);
  }
  return out;
}

std::array<double, kNumMcs> LinkTables::parse_mcs_csv(const std::string& text,
                                                      const std::string& context) {
  const auto lines = non_empty_lines(text);
  if (lines.empty() || lines[0] != "mcs,se_bits_per_hz")
    throw ConfigError(context + ": expected header 'mcs,se_bits_per_hz'");
  if (lines.size() != kNumMcs + 1)
    throw ConfigError(context + ": expected 29 MCS rows, got " +
                      std::to_string(lines.size() - 1));
  std::array<double, kNumMcs> out{};
  for (int i = 0; i < kNumMcs; ++i) {
    const auto fields = csv::split(lines[i + 1]);
    if (fields.size() != 2) throw ConfigError(context + ": malformed row " + lines[i + 1]);
    const long long mcs = csv::parse_int(fields[0], context);
    if (mcs != i) throw ConfigError(context + ": rows must cover MCS 0..28 in order");
    out[i] = csv::parse_double(fields[1], context);
  }
  return out;
}

int sinr_to_cqi(double sinr_db, const LinkTables& tables) {
  if (std::isnan(sinr_db)) throw DomainError("sinr_db is NaN");
  int cqi = 0;
  // 15 entries: a linear scan is as fast as a branchy binary search here and
  // matches the lookup's definition directly.
  for (int i = 0; i < kNumCqi; ++i) {
    if (sinr_db >= tables.cqi_thresholds_db[i])
      cqi = i + 1;
    else
      break;
  }
  return cqi;
}

int cqi_to_mcs(int cqi, CqiToMcsMap map) {
  if (cqi < 0 || cqi > 15)
    throw DomainError("cqi must be within 0..15, got " + std::to_string(cqi));
  if (cqi == 0) return kNoTransmission;
  switch (map) {
    case CqiToMcsMap::Linear:
      return static_cast<int>(std::lround((cqi - 1) * 28.0 / 14.0));
    case CqiToMcsMap::Floor15:
      return std::min(28, static_cast<int>(28.0 * cqi / 15.0));
  }
  throw DomainError("unknown CQI->MCS map");
}

double mcs_to_se(int mcs, const LinkTables& tables) {
  if (mcs == kNoTransmission) return 0.0;
  if (mcs < 0 || mcs >= kNumMcs)
    throw DomainError("mcs must be within 0..28, got " + std::to_string(mcs));
  return tables.mcs_se[static_cast<size_t>(mcs)];
}

double ue_throughput_bps(double se_bps_hz, double bandwidth_hz) {
  if (!(se_bps_hz >= 0.0)) throw DomainError("spectral efficiency must be >= 0");
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be > 0");
  return se_bps_hz * bandwidth_hz;
}

}  // namespace ransim
