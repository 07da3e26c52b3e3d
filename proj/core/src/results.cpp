// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "leontief/error.hpp"

namespace leontief {

std::string_view to_string(OutputFormat format) noexcept {
  return format == OutputFormat::Csv ? "csv" : "jsonl";
}

OutputFormat output_format_from_string(std::string_view token) {
  if (token == "csv") return OutputFormat::Csv;
  if (token == "jsonl" || token == "json-lines") return OutputFormat::JsonLines;
  throw ConfigError("unknown output format '" + std::string(token) +
                    "' (expected csv or jsonl)");
}

std::string_view file_extension(OutputFormat format) noexcept {
  return format == OutputFormat::Csv ? ".csv" : ".jsonl";
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

Table establishments_table(const Scenario& sc) {
  Table t{{"id", "a", "b", "k", "l", "y", "regime"}, {}};
  for (const auto& est : sc.establishments) {
    const OutputRecord out = eval_leontief(est);
    t.rows.push_back({static_cast<long long>(est.id), est.a, est.b, est.k, est.l, out.y,
                      std::string(to_string(out.regime))});
  }
  return t;
}

Table aggregates_table(std::span<const AggregateRow> rows) {
  Table t{{"scenario", "K", "L", "Y", "alpha", "Z"}, {}};
  for (const auto& row : rows) {
    const auto& src = row.tfp.source;
    t.rows.push_back({row.scenario, src.K, src.L, src.Y, row.tfp.alpha, row.tfp.Z});
  }
  return t;
}

Table trace_table(const AdjustmentTrace& trace) {
  Table t{{"moment", "k", "l", "mp_k", "mp_l", "gap_k", "gap_l", "action", "confirmed"}, {}};
  for (const auto& r : trace.rows) {
    t.rows.push_back({static_cast<long long>(r.moment), r.k, r.l, r.mp_capital, r.mp_labor,
                      r.gap_capital, r.gap_labor, std::string(to_string(r.action)),
                      r.confirmed});
  }
  return t;
}

Table ranked_output_table(std::span<const RankedOutput> series) {
  Table t{{"rank", "id", "y"}, {}};
  for (const auto& p : series) {
    t.rows.push_back({static_cast<long long>(p.rank), static_cast<long long>(p.id), p.y});
  }
  return t;
}

Table per_worker_table(const PerWorkerCurve& curve) {
  Table t{{"rank", "k_per_l", "y_per_l"}, {}};
  long long rank = 1;
  for (const auto& p : curve.points) t.rows.push_back({rank++, p.x, p.y});
  return t;
}

Table breaks_table(const BreakReport& report) {
  Table t{{"index", "before", "after"}, {}};
  for (const auto& b : report.breaks) {
    t.rows.push_back({static_cast<long long>(b.index), std::string(to_string(b.before)),
                      std::string(to_string(b.after))});
  }
  return t;
}

Table cobb_douglas_table(std::span<const NamedCobbDouglasFit> fits) {
  Table t{{"source", "n_obs", "alpha", "Z", "r_squared"}, {}};
  for (const auto& f : fits) {
    t.rows.push_back({f.source, static_cast<long long>(f.fit.n_obs), f.fit.alpha, f.fit.Z,
                      f.fit.r_squared});
  }
  return t;
}

Table quadratic_table(std::span<const NamedQuadraticFit> fits) {
  Table t{{"source", "n_obs", "c0", "c1", "c2", "r_squared", "slope_min", "slope_max", "x_min",
           "x_max"},
          {}};
  for (const auto& f : fits) {
    const auto& q = f.fit;
    t.rows.push_back({f.source, static_cast<long long>(q.n_obs), q.c0, q.c1, q.c2, q.r_squared,
                      q.slope_min, q.slope_max, q.x_min, q.x_max});
  }
  return t;
}

Table quadratic_plot_table(const PerWorkerCurve& curve, const QuadraticFit& fit, int samples) {
  Table t{{"kind", "x", "y"}, {}};
  for (const auto& p : curve.points) t.rows.push_back({std::string("observed"), p.x, p.y});
  for (int i = 0; i < samples; ++i) {
    const double u = samples > 1 ? static_cast<double>(i) / (samples - 1) : 0.0;
    const double x = fit.x_min + u * (fit.x_max - fit.x_min);
    t.rows.push_back({std::string("fitted"), x, fit(x)});
  }
  return t;
}

Table ces_comparison_table(const CesComparison& cmp) {
  Table t{{"K", "L", "cobb_douglas", "ces", "gap"}, {}};
  for (const auto& p : cmp.points) t.rows.push_back({p.K, p.L, p.cobb_douglas, p.ces, p.gap});
  return t;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    // Round through the 9-digit text form so both formats carry the same value.
    nlohmann::ordered_json operator()(double v) const { return std::stod(format_number(v)); }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(format_cell(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string render_json_lines(const Table& table) {
  std::string out;
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      obj[table.columns[i]] = json_cell(row[i]);
    }
    out += obj.dump();
    out += '\n';
  }
  return out;
}

void write_results(const Table& table, OutputFormat format, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + path.parent_path().string() +
                    "': " + ec.message());
    }
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << (format == OutputFormat::Csv ? render_csv(table) : render_json_lines(table));
  file.flush();
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

Table read_csv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path.string() + "' for reading");
  Table t;
  std::string line;
  if (!std::getline(file, line)) return t;
  t.columns = split_csv_line(line);
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::vector<Cell> row;
    for (auto& f : split_csv_line(line)) row.emplace_back(std::move(f));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace leontief
