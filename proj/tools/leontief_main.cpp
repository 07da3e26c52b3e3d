// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: scenario generation, aggregation, fits, break
// detection, adjustment dynamics and one-shot table/figure replication.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "leontief/config.hpp"
#include "leontief/error.hpp"

namespace {

int exit_code(leontief::ErrorKind kind) {
  switch (kind) {
    case leontief::ErrorKind::Domain: return 2;
    case leontief::ErrorKind::Spec: return 3;
    case leontief::ErrorKind::Identification: return 4;
    case leontief::ErrorKind::Ordering: return 5;
    case leontief::ErrorKind::Config: return 6;
    case leontief::ErrorKind::Io: return 7;
  }
  return 1;
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leontief establishments aggregated into Cobb-Douglas economies"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::string out_dir;
  std::string format;
  app.add_option("--config", config_path, "YAML run configuration");
  app.add_option("--seed", seed, "Seed applied to every scenario");
  app.add_option("--alpha", alpha, "Capital elasticity used for TFP");
  app.add_option("--out-dir", out_dir, "Directory for result files");
  app.add_option("--format", format, "Result format: csv or jsonl");

  auto* generate = app.add_subcommand("generate", "Generate scenarios and write establishment tables");
  auto* aggregate = app.add_subcommand("aggregate", "Aggregate scenarios and compute TFP residuals");
  auto* fit = app.add_subcommand("fit", "Cobb-Douglas, quadratic and CES comparison fits");
  auto* breaks = app.add_subcommand("breaks", "Detect binding-regime breaks in output order");
  auto* dynamics = app.add_subcommand("dynamics", "Run the expectation-driven adjustment process");
  auto* table1 = app.add_subcommand("replicate-table1", "Four-scenario TFP table");
  auto* tables23 = app.add_subcommand("replicate-tables23", "Worked marginal-productivity example");
  auto* figures = app.add_subcommand("figures", "Ordered-output and per-worker plot data");

  leontief::cli::Tables23Options t23;
  tables23->add_flag("--hold-expectations", t23.hold_expectations,
                     "Use expectations equal to current coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "UsageError: " << one_line(e.what()) << "\n";
    return 64;
  }

  try {
    leontief::RunConfig config = config_path.empty() ? leontief::RunConfig::defaults()
                                                     : leontief::load_config(config_path);
    if (seed) leontief::override_seed(config, *seed);
    if (alpha) config.alpha = *alpha;
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (!format.empty()) config.format = leontief::output_format_from_string(format);
    leontief::validate(config);

    auto& out = std::cout;
    if (generate->parsed()) leontief::cli::cmd_generate(config, out);
    if (aggregate->parsed()) leontief::cli::cmd_aggregate(config, out);
    if (fit->parsed()) leontief::cli::cmd_fit(config, out);
    if (breaks->parsed()) leontief::cli::cmd_breaks(config, out);
    if (dynamics->parsed()) leontief::cli::cmd_dynamics(config, out);
    if (table1->parsed()) leontief::cli::cmd_replicate_table1(config, out);
    if (tables23->parsed()) leontief::cli::cmd_replicate_tables23(config, t23, out);
    if (figures->parsed()) leontief::cli::cmd_figures(config, out);
  } catch (const leontief::Error& e) {
    std::cerr << leontief::error_class(e.kind()) << ": " << one_line(e.what()) << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}
