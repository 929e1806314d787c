// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "core/scenario.hpp"

namespace ransim {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 70;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

struct Series {
  std::string name;
  std::vector<double> mean;  // per level index, NaN when absent
  std::vector<double> std;
};

struct Panel {
  std::string file;
  std::string title;
  std::string y_label;
  bool error_bars;
};

double nice_step(double span) {
  if (!(span > 0.0)) return 1.0;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

std::string fmt_tick(double v) {
  // Trim trailing zeros from a fixed rendering.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void render_panel(const Panel& panel, const std::vector<std::string>& level_labels,
                  const std::vector<Series>& series,
                  const std::vector<std::string>& warnings,
                  const std::string& out_dir) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Series& s : series) {
    for (size_t i = 0; i < s.mean.size(); ++i) {
      if (std::isnan(s.mean[i])) continue;
      const double spread = panel.error_bars ? s.std[i] : 0.0;
      lo = std::min(lo, s.mean[i] - spread);
      hi = std::max(hi, s.mean[i] + spread);
    }
  }
  if (!(lo <= hi)) throw RuntimeError("no plottable data for " + panel.file);
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const size_t n_levels = level_labels.size();
  auto x_of = [&](size_t i) {
    return kMarginLeft + plot_w * (n_levels == 1 ? 0.5
                                                 : static_cast<double>(i) /
                                                       static_cast<double>(n_levels - 1));
  };
  auto y_of = [&](double v) { return kMarginTop + plot_h * (1.0 - (v - lo) / (hi - lo)); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
         std::to_string(kWidth) + " " + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + panel.title + "</text>\n";

  // Axes box and horizontal grid.
  svg += "<rect x=\"" + std::to_string(kMarginLeft) + "\" y=\"" +
         std::to_string(kMarginTop) + "\" width=\"" + std::to_string((int)plot_w) +
         "\" height=\"" + std::to_string((int)plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  const double step = nice_step(hi - lo);
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-12; v += step) {
    const double y = y_of(v);
    svg += "<line x1=\"" + std::to_string(kMarginLeft) + "\" y1=\"" + fmt_tick(y) +
           "\" x2=\"" + std::to_string(kWidth - kMarginRight) + "\" y2=\"" + fmt_tick(y) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + std::to_string(kMarginLeft - 8) + "\" y=\"" + fmt_tick(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           fmt_tick(v) + "</text>\n";
  }

  // X ticks: one per level, sleep leftmost.
  for (size_t i = 0; i < n_levels; ++i) {
    const double x = x_of(i);
    svg += "<line x1=\"" + fmt_tick(x) + "\" y1=\"" +
           std::to_string(kHeight - kMarginBottom) + "\" x2=\"" + fmt_tick(x) +
           "\" y2=\"" + std::to_string(kHeight - kMarginBottom + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_tick(x) + "\" y=\"" +
           std::to_string(kHeight - kMarginBottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           level_labels[i] + "</text>\n";
  }
  svg += "<text x=\"" + std::to_string(kWidth / 2) + "\" y=\"" +
         std::to_string(kHeight - 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
         "K<tspan baseline-shift=\"super\" font-size=\"9\">v</tspan> transmit power "
         "(dBm)</text>\n";
  svg += "<text x=\"18\" y=\"" + std::to_string(kHeight / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " + std::to_string(kHeight / 2) + ")\">" +
         panel.y_label + "</text>\n";

  // Series.
  for (size_t s = 0; s < series.size(); ++s) {
    const char* colour = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    for (size_t i = 0; i < n_levels; ++i) {
      if (std::isnan(series[s].mean[i])) continue;
      points += fmt_tick(x_of(i)) + "," + fmt_tick(y_of(series[s].mean[i])) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
           "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    for (size_t i = 0; i < n_levels; ++i) {
      if (std::isnan(series[s].mean[i])) continue;
      const double x = x_of(i);
      const double y = y_of(series[s].mean[i]);
      svg += "<circle cx=\"" + fmt_tick(x) + "\" cy=\"" + fmt_tick(y) +
             "\" r=\"3\" fill=\"" + colour + "\"/>\n";
      if (panel.error_bars && series[s].std[i] > 0.0) {
        const double y1 = y_of(series[s].mean[i] - series[s].std[i]);
        const double y2 = y_of(series[s].mean[i] + series[s].std[i]);
        svg += "<line x1=\"" + fmt_tick(x) + "\" y1=\"" + fmt_tick(y1) + "\" x2=\"" +
               fmt_tick(x) + "\" y2=\"" + fmt_tick(y2) + "\" stroke=\"" + colour +
               "\"/>\n";
        for (double yy : {y1, y2})
          svg += "<line x1=\"" + fmt_tick(x - 3) + "\" y1=\"" + fmt_tick(yy) +
                 "\" x2=\"" + fmt_tick(x + 3) + "\" y2=\"" + fmt_tick(yy) +
                 "\" stroke=\"" + colour + "\"/>\n";
      }
    }
    // Legend entry.
    const int ly = kMarginTop + 16 + static_cast<int>(s) * 16;
    svg += "<line x1=\"" + std::to_string(kMarginLeft + 10) + "\" y1=\"" +
           std::to_string(ly - 4) + "\" x2=\"" + std::to_string(kMarginLeft + 30) +
           "\" y2=\"" + std::to_string(ly - 4) + "\" stroke=\"" + colour +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + std::to_string(kMarginLeft + 36) + "\" y=\"" +
           std::to_string(ly) + "\" font-family=\"sans-serif\" font-size=\"11\">" +
           series[s].name + "</text>\n";
  }

  for (size_t i = 0; i < warnings.size(); ++i) {
    svg += "<text x=\"" + std::to_string(kWidth - kMarginRight - 6) + "\" y=\"" +
           std::to_string(kMarginTop + 16 + static_cast<int>(i) * 14) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#b00000\">" + warnings[i] + "</text>\n";
  }
  svg += "</svg>\n";

  csv::write_file_atomic(out_dir + "/" + panel.file, svg);
}

}  // namespace

void plot_summaries(const std::vector<SweepSummary>& summaries,
                    const std::string& out_dir) {
  if (summaries.empty()) throw RuntimeError("no summaries to plot");
  size_t total_levels = 0;
  for (const SweepSummary& s : summaries) total_levels += s.levels.size();
  if (total_levels == 0) throw RuntimeError("summaries contain no data points");

  // Union of level labels across inputs, sleep first then ascending dBm.
  std::set<std::string> label_set;
  for (const SweepSummary& s : summaries)
    for (const LevelAggregate& lvl : s.levels) label_set.insert(lvl.level_label);
  const std::vector<std::string> labels =
      presentation_order(std::vector<std::string>(label_set.begin(), label_set.end()));

  std::vector<std::string> warnings;
  for (const ScenarioSpec& builtin : builtin_scenarios()) {
    bool present = false;
    for (const SweepSummary& s : summaries) present |= s.scenario == builtin.name;
    if (!present) warnings.push_back("missing scenario: " + builtin.name);
  }

  const Panel panels[] = {
      {"mean_throughput.svg", "Mean network throughput", "T (Mb/s)", false},
      {"mean_power.svg", "Mean network power consumption", "PC (kW)", false},
      {"mean_ee.svg", "Mean network energy efficiency", "EE (Mb/J)", true},
      {"mean_se.svg", "Mean network spectral efficiency", "SE (b/s/Hz)", true},
  };

  csv::ensure_dir(out_dir);
  for (const Panel& panel : panels) {
    std::vector<Series> series;
    for (const SweepSummary& s : summaries) {
      Series row;
      row.name = s.scenario;
      row.mean.assign(labels.size(), std::numeric_limits<double>::quiet_NaN());
      row.std.assign(labels.size(), 0.0);
      for (const LevelAggregate& lvl : s.levels) {
        const auto it = std::find(labels.begin(), labels.end(), lvl.level_label);
        const size_t idx = static_cast<size_t>(it - labels.begin());
        const Stat* stat = nullptr;
        if (panel.file == "mean_throughput.svg") stat = &lvl.all.t_mbps;
        else if (panel.file == "mean_power.svg") stat = &lvl.all.pc_kw;
        else if (panel.file == "mean_ee.svg") stat = &lvl.all.ee_mb_per_j;
        else stat = &lvl.all.se_bps_hz;
        row.mean[idx] = stat->mean;
        row.std[idx] = stat->std;
      }
      series.push_back(std::move(row));
    }
    render_panel(panel, labels, series, warnings, out_dir);
  }
}

}  // namespace ransim
