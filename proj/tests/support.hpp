// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for the unit suites: independent oracles and a tiny
// seeded generator for property loops.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "leontief/establishment.hpp"

namespace leontief::testing {

// Leontief output from inverse coefficients, written without library code.
inline double min_output(double inv_a, double inv_b, double k, double l) {
  const double labor = l * inv_a;
  const double capital = k * inv_b;
  return labor < capital ? labor : capital;
}

inline bool rel_close(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  // Log-uniform in [lo, hi]; spreads magnitudes across decades.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Establishment establishment(int id = 1) {
    return Establishment{id, log_uniform(0.1, 10.0), log_uniform(0.1, 10.0),
                         log_uniform(0.5, 500.0), log_uniform(0.5, 500.0)};
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kPropertyCases = 500;

}  // namespace leontief::testing
