// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "core/link_tables.hpp"
#include "core/pathloss.hpp"
#include "core/radio.hpp"
#include "core/rng.hpp"
#include "core/units.hpp"

using namespace ransim;

namespace {

// Independent transcription of the urban-macro formulas (TR 36.873 Table
// 7.2-1), written against the published text rather than the implementation:
// every term is spelled out separately so a transcription slip on either side
// shows up as a mismatch.
double oracle_uma_nlos_db(double d2d_m, double h_bs, double h_ut, double f_ghz,
                          double w_street, double h_building) {
  const double d3d = std::sqrt(d2d_m * d2d_m + (h_bs - h_ut) * (h_bs - h_ut));

  // LoS branch with breakpoint at 4 h'bs h'ut f/c (effective heights -1 m).
  const double d_bp = 4.0 * (h_bs - 1.0) * (h_ut - 1.0) * (f_ghz * 1e9) / 3.0e8;
  double pl_los;
  if (d2d_m <= d_bp) {
    pl_los = 22.0 * std::log10(d3d) + 28.0 + 20.0 * std::log10(f_ghz);
  } else {
    pl_los = 40.0 * std::log10(d3d) + 28.0 + 20.0 * std::log10(f_ghz) -
             9.0 * std::log10(d_bp * d_bp + (h_bs - h_ut) * (h_bs - h_ut));
  }

  const double term_const = 161.04;
  const double term_w = -7.1 * std::log10(w_street);
  const double term_h = 7.5 * std::log10(h_building);
  const double term_bs =
      -(24.37 - 3.7 * (h_building / h_bs) * (h_building / h_bs)) * std::log10(h_bs);
  const double term_d = (43.42 - 3.1 * std::log10(h_bs)) * (std::log10(d3d) - 3.0);
  const double term_f = 20.0 * std::log10(f_ghz);
  const double term_fix = -(3.2 * std::pow(std::log10(17.625), 2.0) - 4.97);
  const double term_ut = -0.6 * (h_ut - 1.5);
  const double pl_nlos =
      term_const + term_w + term_h + term_bs + term_d + term_f + term_fix + term_ut;

  return std::max(pl_los, pl_nlos);
}

const PathlossModel kModel{};  // UMa NLoS, h=20, W=20

}  // namespace

TEST_CASE("pathloss regression point: 500 m, 25 m / 1.5 m, 3.5 GHz") {
  const double pl =
      pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{500, 0, 1.5}, 3.5e9);
  // Frozen from the transcription oracle above.
  CHECK(pl == doctest::Approx(129.9377694731409).epsilon(1e-12));
  CHECK(pl == doctest::Approx(oracle_uma_nlos_db(500, 25, 1.5, 3.5, 20, 20))
                  .epsilon(1e-12));
}

TEST_CASE("pathloss equals the transcription oracle across the valid range") {
  for (double d2d : {10.0, 35.0, 100.0, 250.0, 559.0, 561.0, 1000.0, 2500.0, 4999.0}) {
    for (double f_ghz : {0.7, 2.0, 3.5, 6.0}) {
      const double pl =
          pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{d2d, 0, 1.5}, f_ghz * 1e9);
      CHECK(pl == doctest::Approx(oracle_uma_nlos_db(d2d, 25, 1.5, f_ghz, 20, 20))
                      .epsilon(1e-12));
    }
  }
}

TEST_CASE("pathloss monotonicity and free-space lower bound") {
  double prev = 0.0;
  for (double d2d = 20.0; d2d <= 4800.0; d2d *= 1.5) {
    const double pl = pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{d2d, 0, 1.5}, 3.5e9);
    CHECK(pl > prev);
    prev = pl;
    const double d3d = std::sqrt(d2d * d2d + 23.5 * 23.5);
    CHECK(pl >= free_space_pathloss_db(d3d, 3.5e9));
    CHECK(std::isfinite(pl));
  }
  // PL(2d) > PL(d) in particular.
  const double pl1 = pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{700, 0, 1.5}, 3.5e9);
  const double pl2 = pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{1400, 0, 1.5}, 3.5e9);
  CHECK(pl2 > pl1);
  // Higher carrier, same geometry -> more loss.
  const double f1 = pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{700, 0, 1.5}, 2.0e9);
  const double f2 = pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{700, 0, 1.5}, 3.5e9);
  CHECK(f2 > f1);
}

TEST_CASE("pathloss domain errors are raised, not clamped") {
  CHECK_THROWS(pathloss_db(kModel, Vec3{0, 0, 2}, Vec3{5, 0, 1.5}, 3.5e9));  // < 10 m
  CHECK_THROWS(pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{5200, 0, 1.5}, 3.5e9));
  CHECK_THROWS(pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{500, 0, 1.5}, 0.4e9));
  CHECK_THROWS(pathloss_db(kModel, Vec3{0, 0, 25}, Vec3{500, 0, 1.5}, 7.0e9));
}

TEST_CASE("rsrp is plain dB arithmetic") {
  LinkBudget budget;  // gains 0
  CHECK(rsrp_dbm(43.0, budget, 0.0) == doctest::Approx(43.0));
  budget.g_mimo_db = 3.0;
  budget.g_ant_db = 2.0;
  CHECK(rsrp_dbm(43.0, budget, 120.0) == doctest::Approx(-72.0));
  // +3 dB transmit power moves RSRP by exactly +3 dB.
  CHECK(rsrp_dbm(46.0, budget, 120.0) - rsrp_dbm(43.0, budget, 120.0) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("noise budget composes density, bandwidth and noise figure") {
  LinkBudget budget;  // NF 9 dB
  CHECK(budget.noise_dbm(10e6) == doctest::Approx(-174.0 + 70.0 + 9.0));
  CHECK(budget.noise_w(10e6) == doctest::Approx(dbm_to_w(-95.0)));
}

TEST_CASE("sinr_linear identities") {
  CHECK(sinr_linear(1e-10, 0.0, 1e-10) == doctest::Approx(1.0));
  CHECK(sinr_linear(1e-9, 1e-10, 1e-10) == doctest::Approx(5.0));
  CHECK(sinr_linear(0.0, 1e-10, 1e-10) == doctest::Approx(0.0));  // sleeping server
  CHECK_THROWS(sinr_linear(1e-9, 0.0, 0.0));
  CHECK_THROWS(sinr_linear(-1e-9, 0.0, 1e-10));
  // rx = k * noise with zero interference gives exactly k.
  for (double k : {0.25, 1.0, 7.0, 1e6}) {
    const double noise = 3.1623e-13;
    CHECK(sinr_linear(k * noise, 0.0, noise) == doctest::Approx(k).epsilon(1e-12));
  }
}

TEST_CASE("sinr_to_cqi floor, ceiling and inclusive edges") {
  const LinkTables tables = LinkTables::builtin();
  CHECK(sinr_to_cqi(-std::numeric_limits<double>::infinity(), tables) == 0);
  CHECK(sinr_to_cqi(-50.0, tables) == 0);
  CHECK(sinr_to_cqi(1e9, tables) == 15);
  CHECK(sinr_to_cqi(tables.cqi_thresholds_db[14], tables) == 15);
  // Exactly at threshold k -> CQI k (inclusive lower edge).
  for (int k = 1; k <= 15; ++k)
    CHECK(sinr_to_cqi(tables.cqi_thresholds_db[k - 1], tables) == k);
}

TEST_CASE("cqi lookup equals a linear-scan oracle on random SINRs") {
  const LinkTables tables = LinkTables::builtin();
  Rng rng(99);
  for (int i = 0; i < 100000; ++i) {
    const double sinr_db = rng.uniform(-30.0, 50.0);
    int expected = 0;
    for (int k = 14; k >= 0; --k) {
      if (sinr_db >= tables.cqi_thresholds_db[k]) {
        expected = k + 1;
        break;
      }
    }
    REQUIRE(sinr_to_cqi(sinr_db, tables) == expected);
  }
}

TEST_CASE("cqi to mcs linear map") {
  CHECK(cqi_to_mcs(0) == kNoTransmission);
  CHECK(cqi_to_mcs(1) == 0);
  CHECK(cqi_to_mcs(8) == 14);
  CHECK(cqi_to_mcs(15) == 28);
  for (int cqi = 1; cqi <= 15; ++cqi)
    CHECK(cqi_to_mcs(cqi) == static_cast<int>(std::lround((cqi - 1) * 28.0 / 14.0)));
  CHECK_THROWS(cqi_to_mcs(-1));
  CHECK_THROWS(cqi_to_mcs(16));
  // Non-default map stays within range and hits the top.
  CHECK(cqi_to_mcs(15, CqiToMcsMap::Floor15) == 28);
  CHECK(cqi_to_mcs(1, CqiToMcsMap::Floor15) == 1);
}

TEST_CASE("mcs table endpoints against the transcription") {
  const LinkTables tables = LinkTables::builtin();
  CHECK(mcs_to_se(28, tables) == doctest::Approx(7.4063));
  CHECK(mcs_to_se(0, tables) == doctest::Approx(0.2344));
  CHECK(mcs_to_se(kNoTransmission, tables) == 0.0);
  CHECK_THROWS(mcs_to_se(29, tables));
  CHECK_THROWS(mcs_to_se(-2, tables));
  for (int m = 1; m < kNumMcs; ++m)
    CHECK(tables.mcs_se[m] > tables.mcs_se[m - 1]);  // strictly ascending
  // Spot values of the 256QAM rows (code rate x bits per symbol / 1024).
  CHECK(tables.mcs_se[3] == doctest::Approx(2.0 * 308 / 1024).epsilon(1e-4));
  CHECK(tables.mcs_se[10] == doctest::Approx(4.0 * 616 / 1024).epsilon(1e-4));
  CHECK(tables.mcs_se[21] == doctest::Approx(8.0 * 682.5 / 1024).epsilon(1e-4));
  CHECK(tables.mcs_se[28] == doctest::Approx(8.0 * 948 / 1024).epsilon(1e-4));
}

TEST_CASE("ue throughput is spectral efficiency times bandwidth") {
  CHECK(ue_throughput_bps(7.4063, 10e6) == doctest::Approx(74.063e6).epsilon(1e-12));
  CHECK(ue_throughput_bps(0.0, 10e6) == 0.0);
  CHECK(ue_throughput_bps(2.0, 20e6) == doctest::Approx(2.0 * ue_throughput_bps(2.0, 10e6)));
  CHECK_THROWS(ue_throughput_bps(-1.0, 10e6));
  CHECK_THROWS(ue_throughput_bps(1.0, 0.0));
}

TEST_CASE("dBm/W round trip within 1e-10 dB") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double dbm = rng.uniform(-120.0, 50.0);
    CHECK(std::abs(w_to_dbm(dbm_to_w(dbm)) - dbm) < 1e-10);
  }
  CHECK(w_to_dbm(0.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("pipeline monotonicity: throughput non-decreasing in serving power") {
  const LinkTables tables = LinkTables::builtin();
  const double noise = dbm_to_w(-95.0);
  const double floor_w = noise + dbm_to_w(-80.0);  // fixed interference + noise
  double prev_tp = -1.0;
  for (double rx_dbm = -120.0; rx_dbm <= -40.0; rx_dbm += 0.25) {
    const double sinr = dbm_to_w(rx_dbm) / floor_w;
    const int cqi = sinr_to_cqi(linear_to_db(sinr), tables);
    const double se = mcs_to_se(cqi_to_mcs(cqi), tables);
    const double tp = ue_throughput_bps(se, 10e6);
    CHECK(tp >= prev_tp);
    prev_tp = tp;
  }
}
