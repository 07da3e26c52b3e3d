// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "leontief/aggregate.hpp"
#include "leontief/dynamics.hpp"
#include "leontief/results.hpp"
#include "leontief/scenarios.hpp"

namespace leontief {

struct DynamicsConfig {
  ExpectationState initial;
  FactorPrices prices;
  AdjustmentPolicy policy;
  int max_periods = 50;

  /// The worked establishment: 1/a = 1.09562, 1/b = 1.68849, k = 65, l = 100,
  /// expecting 1/a to reach 1.09649; r = 0.05 and a real wage above 1/a.
  static DynamicsConfig defaults();

  friend bool operator==(const DynamicsConfig&, const DynamicsConfig&) = default;
};

/// Grid and parameters for the Cobb-Douglas vs CES comparison.
struct CesConfig {
  double share = 0.5;
  double rho = -1.0;
  double Z = 1.0;
  double capital_min = 1.0;
  double capital_max = 20.0;
  double labor_min = 1.0;
  double labor_max = 20.0;
  int steps = 20;

  std::vector<FactorPoint> grid() const;

  friend bool operator==(const CesConfig&, const CesConfig&) = default;
};

struct RunConfig {
  std::vector<ScenarioSpec> scenarios;
  double alpha = kDefaultAlpha;
  std::filesystem::path output_dir = "out";
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 0;
  double regime_tolerance = kDefaultRegimeTolerance;
  DynamicsConfig dynamics = DynamicsConfig::defaults();
  CesConfig ces;

  /// The four table scenarios with their calibrated defaults.
  static RunConfig defaults();

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError naming the violated invariant.
void validate(const RunConfig& config);

/// YAML document; see configs/table1.yaml for the schema. Unknown keys are
/// rejected. Parse errors carry the source name and line.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Emits every field explicitly; parse_config(dump_config(c)) == c.
std::string dump_config(const RunConfig& config);

/// Applies `seed` to the run and every scenario.
void override_seed(RunConfig& config, std::uint64_t seed);

}  // namespace leontief
