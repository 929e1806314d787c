// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "core/metrics.hpp"

namespace ransim {

// Renders four SVG panels (mean network throughput, power consumption, EE and
// SE of the union set versus the K^v power level, sleep leftmost), one series
// per scenario summary.  EE and SE panels carry +/-1 std error bars.  Built-in
// scenarios missing from the inputs are flagged with a warning annotation.
// Writes mean_throughput.svg, mean_power.svg, mean_ee.svg, mean_se.svg.
void plot_summaries(const std::vector<SweepSummary>& summaries,
                    const std::string& out_dir);

}  // namespace ransim
