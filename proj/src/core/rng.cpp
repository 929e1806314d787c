// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#include "core/rng.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ransim {

namespace {

// ln(k!) for k = 0..20; 20! is the largest factorial exact in a double.
const double kLogFactTable[21] = {
    0.0,
    0.0,
    0.6931471805599453,
    1.791759469228055,
    3.1780538303479458,
    4.787491742782046,
    6.579251212010101,
    8.525161361065415,
    10.60460290274525,
    12.801827480081469,
    15.104412573075516,
    17.502307845873887,
    19.987214495661885,
    22.552163853123425,
    25.19122118273868,
    27.89927138384089,
    30.671860106080672,
    33.50507345013689,
    36.39544520803305,
    39.339884187199495,
    42.335616460753485,
};

}  // namespace

double log_factorial(std::uint64_t k) {
  if (k <= 20) return kLogFactTable[k];
  // Stirling series: accurate to < 1e-12 for k > 20.
  const double x = static_cast<double>(k) + 1.0;
  const double x2 = x * x;
  return (x - 0.5) * std::log(x) - x + 0.9189385332046727  // 0.5*ln(2*pi)
         + 1.0 / (12.0 * x) - 1.0 / (360.0 * x * x2) + 1.0 / (1260.0 * x2 * x2 * x);
}

std::uint64_t Rng::poisson(double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw DomainError("poisson mean must be finite and non-negative");
  if (mean == 0.0) return 0;

  if (mean < 10.0) {
    // CDF inversion by sequential PMF accumulation.
    const double p0 = std::exp(-mean);
    double cum = p0;
    double p = p0;
    const double u = next_double();
    std::uint64_t k = 0;
    while (u > cum && k < 1000) {
      ++k;
      p *= mean / static_cast<double>(k);
      cum += p;
    }
    return k;
  }

  // Hörmann (1993), "The transformed rejection method for generating Poisson
  // random variables", algorithm PTRS.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);

  while (true) {
    const double u = next_double() - 0.5;
    const double v = next_double();
    const double us = 0.5 - std::abs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(kd);
    if (kd < 0.0 || (us < 0.013 && v > us)) continue;
    const std::uint64_t k = static_cast<std::uint64_t>(kd);
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kd * log_mean - mean - log_factorial(k);
    if (lhs <= rhs) return k;
  }
}

}  // namespace ransim
