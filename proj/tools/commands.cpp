// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cctype>
#include <cmath>
#include <span>

#include "leontief/error.hpp"
#include "leontief/results.hpp"

namespace leontief::cli {

std::string file_stem(const std::string& label) {
  std::string out;
  out.reserve(label.size());
  for (unsigned char c : label) {
    out += (std::isalnum(c) || c == '-' || c == '_') ? static_cast<char>(c) : '_';
  }
  return out.empty() ? "scenario" : out;
}

std::filesystem::path output_path(const RunConfig& config, const std::string& stem) {
  return config.output_dir / (stem + std::string(file_extension(config.format)));
}

namespace {

void write(const RunConfig& config, const std::string& stem, const Table& table,
           std::ostream& console) {
  const auto path = output_path(config, stem);
  write_results(table, config.format, path);
  fmt::print(console, "  wrote {}\n", path.string());
}

std::vector<Scenario> generate_all(const RunConfig& config) {
  std::vector<Scenario> out;
  out.reserve(config.scenarios.size());
  for (const auto& spec : config.scenarios) out.push_back(generate(spec));
  return out;
}

}  // namespace

std::vector<Scenario> cmd_generate(const RunConfig& config, std::ostream& console) {
  auto scenarios = generate_all(config);
  for (const auto& sc : scenarios) {
    const auto agg = aggregate(sc);
    fmt::print(console, "scenario {:<14} n={:<4} K={:<12.6g} L={:<12.6g} Y={:.6g}\n", sc.label,
               sc.establishments.size(), agg.K, agg.L, agg.Y);
    write(config, "establishments_" + file_stem(sc.label), establishments_table(sc), console);
  }
  return scenarios;
}

std::vector<AggregateRow> cmd_aggregate(const RunConfig& config, std::ostream& console) {
  std::vector<AggregateRow> rows;
  for (const auto& sc : generate_all(config)) {
    rows.push_back({sc.label, tfp(aggregate(sc), config.alpha)});
  }
  fmt::print(console, "{:<14} {:>12} {:>12} {:>12} {:>6} {:>9}\n", "scenario", "K", "L", "Y",
             "alpha", "Z");
  for (const auto& r : rows) {
    const auto& s = r.tfp.source;
    fmt::print(console, "{:<14} {:>12.2f} {:>12.2f} {:>12.2f} {:>6.2f} {:>9.4f}\n", r.scenario,
               s.K, s.L, s.Y, r.tfp.alpha, r.tfp.Z);
  }
  write(config, "aggregates", aggregates_table(rows), console);
  return rows;
}

FitSummary cmd_fit(const RunConfig& config, std::ostream& console) {
  FitSummary summary;
  for (const auto& raw : generate_all(config)) {
    const Scenario sc = order_by_output(raw);
    std::vector<PanelObservation> panel;
    panel.reserve(sc.establishments.size());
    for (const auto& est : sc.establishments) {
      panel.push_back({eval_leontief(est).y, est.k, est.l});
    }
    try {
      const auto cd = fit_cobb_douglas(panel);
      summary.cobb_douglas.push_back({sc.label, cd});
      fmt::print(console, "{:<14} Cobb-Douglas  alpha={:.4f} Z={:.4f} R2={:.4f}\n", sc.label,
                 cd.alpha, cd.Z, cd.r_squared);
    } catch (const IdentificationError& e) {
      fmt::print(console, "{:<14} Cobb-Douglas  not identified ({})\n", sc.label, e.what());
    }
    const auto curve = per_worker_curve(sc);
    try {
      const auto q = fit_quadratic(curve.points);
      summary.quadratic.push_back({sc.label, q});
      fmt::print(console, "{:<14} quadratic     c0={:.5g} c1={:.5g} c2={:.5g} slopes=[{:.4g}, {:.4g}]\n",
                 sc.label, q.c0, q.c1, q.c2, q.slope_min, q.slope_max);
      write(config, "quadratic_plot_" + file_stem(sc.label), quadratic_plot_table(curve, q, 101),
            console);
    } catch (const IdentificationError& e) {
      fmt::print(console, "{:<14} quadratic     not identified ({})\n", sc.label, e.what());
    }
  }
  write(config, "fits_cobb_douglas", cobb_douglas_table(summary.cobb_douglas), console);
  write(config, "fits_quadratic", quadratic_table(summary.quadratic), console);

  const auto grid = config.ces.grid();
  summary.ces = compare_cd_ces(config.ces.Z, config.ces.share, config.ces.rho, grid);
  fmt::print(console, "CD vs CES (rho={:g}, share={:g}): max gap {:.6g}, mean gap {:.6g}, CD >= CES everywhere: {}\n",
             config.ces.rho, config.ces.share, summary.ces.max_gap, summary.ces.mean_gap,
             summary.ces.sign_uniform ? "yes" : "no");
  write(config, "ces_comparison", ces_comparison_table(summary.ces), console);
  return summary;
}

std::map<std::string, BreakReport> cmd_breaks(const RunConfig& config, std::ostream& console) {
  std::map<std::string, BreakReport> out;
  for (const auto& raw : generate_all(config)) {
    const Scenario sc = order_by_output(raw);
    auto report = detect_breaks(sc, config.regime_tolerance);
    fmt::print(console, "{:<14} {} break(s)", sc.label, report.breaks.size());
    for (const auto& b : report.breaks) {
      fmt::print(console, "  [{}: {} -> {}]", b.index, to_string(b.before), to_string(b.after));
    }
    fmt::print(console, "\n");
    write(config, "breaks_" + file_stem(sc.label), breaks_table(report), console);
    out.emplace(sc.label, std::move(report));
  }
  return out;
}

AdjustmentTrace cmd_dynamics(const RunConfig& config, std::ostream& console) {
  const auto& d = config.dynamics;
  auto trace = run_adjustment(d.initial, d.prices, d.policy, d.max_periods);
  fmt::print(console, "{:>6} {:>10} {:>10} {:>9} {:>9} {:>9} {:>9}  {}\n", "moment", "k", "l",
             "mp_k", "mp_l", "gap_k", "gap_l", "action");
  for (const auto& r : trace.rows) {
    fmt::print(console, "{:>6} {:>10.4f} {:>10.4f} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f}  {}{}\n",
               r.moment, r.k, r.l, r.mp_capital, r.mp_labor, r.gap_capital, r.gap_labor,
               to_string(r.action), r.confirmed ? "" : " (unconfirmed)");
  }
  write(config, "trace", trace_table(trace), console);
  return trace;
}

std::vector<Table1Row> cmd_replicate_table1(const RunConfig& config, std::ostream& console) {
  std::vector<Table1Row> rows;
  std::vector<AggregateRow> records;
  for (const auto& sc : generate_all(config)) {
    const TFPRecord rec = tfp(aggregate(sc), config.alpha);
    rows.push_back({sc.label, rec, std::pow(rec.source.K, rec.alpha),
                    std::pow(rec.source.L, 1.0 - rec.alpha)});
    records.push_back({sc.label, rec});
  }
  fmt::print(console, "Aggregate production function: Cobb-Douglas, alpha = {:g}\n", config.alpha);
  fmt::print(console, "{:<10} {:>10} {:>10} {:>8} {:>8} {:>10} {:>8}\n", "Scenario", "K", "L",
             "K^a", "L^(1-a)", "Y", "Z");
  for (const auto& r : rows) {
    const auto& s = r.tfp.source;
    fmt::print(console, "{:<10} {:>10.2f} {:>10.2f} {:>8.2f} {:>8.2f} {:>10.2f} {:>8.3f}\n",
               r.scenario, s.K, s.L, r.capital_term, r.labor_term, s.Y, r.tfp.Z);
  }
  for (std::size_t j = 1; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto dec = decompose_tfp(rows[i].tfp, rows[j].tfp);
      fmt::print(console, "dZ {} -> {}: {:+.4f} ({})\n", rows[i].scenario, rows[j].scenario,
                 dec.dZ_total, dec.shared_factors ? "same K, L" : "different K, L");
    }
  }
  write(config, "table1", aggregates_table(records), console);
  return rows;
}

Tables23Summary cmd_replicate_tables23(const RunConfig& config, const Tables23Options& options,
                                       std::ostream& console) {
  const Establishment est{14, 1.0 / 1.09562, 1.0 / 1.68849, 65.0, 100.0};
  Tables23Summary s;
  s.capital_state = ExpectationState{est, 1.0 / 1.09649, est.b, 0, std::nullopt};
  s.labor_state = ExpectationState{est, est.a, 1.0 / 1.68868, 0, std::nullopt};
  if (options.hold_expectations) {
    s.capital_state = ExpectationState::steady(est);
    s.labor_state = ExpectationState::steady(est);
  }
  s.mp_capital = expected_mp_capital(s.capital_state, 1.0).value;
  s.mp_labor = expected_mp_labor(s.labor_state, 1.0).value;

  const double y_today = eval_leontief(est).y;
  const double y_capital = leontief_output(s.capital_state.expected_a, est.b, est.k + 1.0, est.l);
  const double y_labor = leontief_output(est.a, s.labor_state.expected_b, est.k, est.l + 1.0);

  Table t{{"table", "factor", "moment", "inv_a", "inv_b", "k_per_l", "k", "l", "y", "mp"}, {}};
  t.rows.push_back({std::string("2"), std::string("capital"), std::string("j"), 1.0 / est.a,
                    1.0 / est.b, est.k / est.l, est.k, est.l, y_today, std::string("")});
  t.rows.push_back({std::string("2"), std::string("capital"), std::string("j+1"),
                    1.0 / s.capital_state.expected_a, 1.0 / est.b, (est.k + 1.0) / est.l,
                    est.k + 1.0, est.l, y_capital, s.mp_capital});
  t.rows.push_back({std::string("3"), std::string("labor"), std::string("j"), 1.0 / est.a,
                    1.0 / est.b, est.k / est.l, est.k, est.l, y_today, std::string("")});
  t.rows.push_back({std::string("3"), std::string("labor"), std::string("j+1"), 1.0 / est.a,
                    1.0 / s.labor_state.expected_b, est.k / (est.l + 1.0), est.k, est.l + 1.0,
                    y_labor, s.mp_labor});

  fmt::print(console, "{:<6} {:<8} {:<5} {:>8} {:>8} {:>7} {:>6} {:>6} {:>9} {:>8}\n", "table",
             "factor", "when", "1/a", "1/b", "k/l", "k", "l", "y", "MP");
  for (const auto& row : t.rows) {
    fmt::print(console, "{:<6} {:<8} {:<5} {:>8} {:>8} {:>7} {:>6} {:>6} {:>9} {:>8}\n",
               format_cell(row[0]), format_cell(row[1]), format_cell(row[2]),
               fmt::format("{:.5f}", std::get<double>(row[3])),
               fmt::format("{:.5f}", std::get<double>(row[4])),
               fmt::format("{:.3f}", std::get<double>(row[5])),
               fmt::format("{:g}", std::get<double>(row[6])),
               fmt::format("{:g}", std::get<double>(row[7])),
               fmt::format("{:.3f}", std::get<double>(row[8])),
               std::holds_alternative<double>(row[9])
                   ? fmt::format("{:.4f}", std::get<double>(row[9]))
                   : std::string("n/a"));
  }
  write(config, "tables23", t, console);
  return s;
}

std::vector<FigureSummary> cmd_figures(const RunConfig& config, std::ostream& console) {
  std::vector<FigureSummary> out;
  for (const auto& raw : generate_all(config)) {
    const Scenario sc = order_by_output(raw);
    FigureSummary fig;
    fig.scenario = sc.label;
    fig.breaks = detect_breaks(sc, config.regime_tolerance);
    fig.curve = per_worker_curve(sc);
    const std::string stem = file_stem(sc.label);
    const auto series = ranked_output(sc);
    write(config, "figure1_" + stem, ranked_output_table(series), console);
    write(config, "figure2_" + stem, per_worker_table(fig.curve), console);
    write(config, "breaks_" + stem, breaks_table(fig.breaks), console);
    try {
      fig.fit = fit_quadratic(fig.curve.points);
      const NamedQuadraticFit named{sc.label, *fig.fit};
      write(config, "figure2_fit_" + stem, quadratic_plot_table(fig.curve, *fig.fit, 101),
            console);
      write(config, "figure2_quadratic_" + stem,
            quadratic_table(std::span<const NamedQuadraticFit>(&named, 1)), console);
    } catch (const IdentificationError&) {
      fig.fit.reset();
    }
    fmt::print(console, "{:<14} breaks:", sc.label);
    if (fig.breaks.breaks.empty()) fmt::print(console, " none");
    for (const auto& b : fig.breaks.breaks) fmt::print(console, " {}", b.index);
    if (fig.fit) {
      fmt::print(console, "  quadratic c2={:.5g} slope in [{:.4g}, {:.4g}]", fig.fit->c2,
                 fig.fit->slope_min, fig.fit->slope_max);
    } else {
      fmt::print(console, "  quadratic: k/l does not vary");
    }
    fmt::print(console, "\n");
    out.push_back(std::move(fig));
  }
  return out;
}

}  // namespace leontief::cli
