// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "leontief/aggregate.hpp"
#include "leontief/config.hpp"
#include "leontief/dynamics.hpp"
#include "leontief/fit.hpp"
#include "leontief/scenarios.hpp"

namespace leontief::cli {

/// File-system safe form of a scenario label.
std::string file_stem(const std::string& label);

std::filesystem::path output_path(const RunConfig& config, const std::string& stem);

std::vector<Scenario> cmd_generate(const RunConfig& config, std::ostream& console);

std::vector<AggregateRow> cmd_aggregate(const RunConfig& config, std::ostream& console);

struct FitSummary {
  std::vector<NamedCobbDouglasFit> cobb_douglas;
  std::vector<NamedQuadraticFit> quadratic;
  CesComparison ces;
};
FitSummary cmd_fit(const RunConfig& config, std::ostream& console);

std::map<std::string, BreakReport> cmd_breaks(const RunConfig& config, std::ostream& console);

AdjustmentTrace cmd_dynamics(const RunConfig& config, std::ostream& console);

struct Table1Row {
  std::string scenario;
  TFPRecord tfp;
  double capital_term = 0.0;  // K^alpha
  double labor_term = 0.0;    // L^(1-alpha)
};
std::vector<Table1Row> cmd_replicate_table1(const RunConfig& config, std::ostream& console);

struct Tables23Options {
  /// Evaluate both states with expectations equal to current coefficients.
  bool hold_expectations = false;
};

struct Tables23Summary {
  ExpectationState capital_state;
  ExpectationState labor_state;
  double mp_capital = 0.0;
  double mp_labor = 0.0;
};

/// The worked establishment: 1/a = 1.09562, 1/b = 1.68849, k = 65, l = 100.
/// Capital case expects 1/a = 1.09649; labor case expects 1/b = 1.68868.
Tables23Summary cmd_replicate_tables23(const RunConfig& config, const Tables23Options& options,
                                       std::ostream& console);

struct FigureSummary {
  std::string scenario;
  BreakReport breaks;
  PerWorkerCurve curve;
  std::optional<QuadraticFit> fit;  // empty when k/l does not vary
};
std::vector<FigureSummary> cmd_figures(const RunConfig& config, std::ostream& console);

}  // namespace leontief::cli
