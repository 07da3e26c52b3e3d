// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "leontief/aggregate.hpp"
#include "leontief/dynamics.hpp"
#include "leontief/fit.hpp"
#include "leontief/scenarios.hpp"

namespace leontief {

enum class OutputFormat { Csv, JsonLines };

std::string_view to_string(OutputFormat format) noexcept;
OutputFormat output_format_from_string(std::string_view token);
/// ".csv" or ".jsonl".
std::string_view file_extension(OutputFormat format) noexcept;

using Cell = std::variant<std::string, double, long long, bool>;

/// One record family ready for serialization: a fixed header plus rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Numeric fields are written with 9 significant digits.
std::string format_number(double value);
std::string format_cell(const Cell& cell);

// Column contracts.
//   establishments  id,a,b,k,l,y,regime
//   aggregates      scenario,K,L,Y,alpha,Z
//   trace           moment,k,l,mp_k,mp_l,gap_k,gap_l,action,confirmed
Table establishments_table(const Scenario& sc);

struct AggregateRow {
  std::string scenario;
  TFPRecord tfp;
};
Table aggregates_table(std::span<const AggregateRow> rows);

Table trace_table(const AdjustmentTrace& trace);

/// rank,id,y
Table ranked_output_table(std::span<const RankedOutput> series);
/// rank,k_per_l,y_per_l
Table per_worker_table(const PerWorkerCurve& curve);
/// index,before,after
Table breaks_table(const BreakReport& report);

struct NamedCobbDouglasFit {
  std::string source;
  CobbDouglasFit fit;
};
/// source,n_obs,alpha,Z,r_squared
Table cobb_douglas_table(std::span<const NamedCobbDouglasFit> fits);

struct NamedQuadraticFit {
  std::string source;
  QuadraticFit fit;
};
/// source,n_obs,c0,c1,c2,r_squared,slope_min,slope_max,x_min,x_max
Table quadratic_table(std::span<const NamedQuadraticFit> fits);

/// kind,x,y: observed points followed by `samples` evenly spaced fitted values.
Table quadratic_plot_table(const PerWorkerCurve& curve, const QuadraticFit& fit, int samples);

/// K,L,cobb_douglas,ces,gap
Table ces_comparison_table(const CesComparison& cmp);

/// Overwrites `path`; a table without rows yields a header-only CSV (or an
/// empty JSON-lines file). Throws IoError with the path on failure.
void write_results(const Table& table, OutputFormat format, const std::filesystem::path& path);

std::string render_csv(const Table& table);
std::string render_json_lines(const Table& table);

/// Reads a CSV written by write_results; every cell comes back as a string.
Table read_csv(const std::filesystem::path& path);

}  // namespace leontief
