// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "leontief/aggregate.hpp"
#include "leontief/config.hpp"
#include "leontief/dynamics.hpp"
#include "leontief/fit.hpp"
#include "leontief/scenarios.hpp"

namespace {

using namespace leontief;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kTableZTol = 0.005;
constexpr double kMarginalTol = 1e-3;
constexpr double kClosedFormZTol = 1e-4;
constexpr double kOrthogonalityTol = 1e-9;
constexpr double kRecoveryRelTol = 1e-9;
constexpr double kDiagonalRelTol = 1e-12;
// Finite differences of k/b repeat 1/b only up to rounding; gaps are
// compared with this relative slack.
constexpr double kGapRoundingRel = 1e-12;
constexpr double kFastSeconds = 0.1;
constexpr double kCesSeconds = 1.0;
constexpr int kRandomStates = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome tfp_identity() {
  struct Row {
    double K, L, Y, Z;
  };
  const Row rows[] = {{3257.98, 4879.44, 4879.44, 1.22},
                      {3250.00, 5000.00, 5491.08, 1.36},
                      {3257.98, 4879.44, 5492.13, 1.377},
                      {3257.98, 4879.44, 5518.54, 1.384}};
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail = "Z =";
  for (const auto& r : rows) {
    const double z = tfp(AggregateRecord{r.Y, r.K, r.L, 0}, 0.5).Z;
    ok = ok && std::abs(z - r.Z) <= kTableZTol;
    detail += fmt(" %.4f", z);
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < kFastSeconds;
  return {ok, detail + fmt(" (tol %.3f, %.2g s)", kTableZTol, dt)};
}

ExpectationState worked_state() {
  return ExpectationState::steady({14, 1.0 / 1.09562, 1.0 / 1.68849, 65.0, 100.0});
}

Outcome worked_marginals() {
  const auto t0 = Clock::now();
  auto capital = worked_state();
  capital.expected_a = 1.0 / 1.09649;
  auto labor = worked_state();
  labor.expected_b = 1.0 / 1.68868;
  const double mpk = expected_mp_capital(capital).value;
  const double mpl = expected_mp_labor(labor).value;
  const double dt = seconds_since(t0);
  const bool ok = std::abs(mpk - 0.0872) <= kMarginalTol && std::abs(mpl - 0.202) <= kMarginalTol &&
                  dt < kFastSeconds;
  return {ok, fmt("MPk = %.4f (0.0872), MPl = %.4f (0.202), tol %.0e", mpk, mpl, kMarginalTol)};
}

Outcome closed_form_kind_one() {
  auto spec = ScenarioSpec::defaults(ScenarioKind::I);
  spec.capital_target = 3257.98;
  spec.labor_target = 4879.44;
  const auto agg = aggregate(generate(spec));
  const double z = tfp(agg, 0.5).Z;
  const double closed = std::sqrt(agg.L / agg.K);
  const bool ok = agg.Y == agg.L && std::abs(z - 1.2238) <= kClosedFormZTol &&
                  std::abs(z - closed) <= kClosedFormZTol;
  return {ok, fmt("Y - L = %g, Z = %.6f, (L/K)^0.5 = %.6f", agg.Y - agg.L, z, closed)};
}

Outcome single_break() {
  auto spec = ScenarioSpec::defaults(ScenarioKind::III);
  spec.n = 50;
  spec.break_index = 18;
  const auto report = detect_breaks(order_by_output(generate(spec)));
  const bool ok = report.breaks.size() == 1 && report.breaks[0].index == 18 &&
                  report.breaks[0].before == Regime::LaborLimited &&
                  report.breaks[0].after == Regime::CapitalLimited;
  std::string detail = std::to_string(report.breaks.size()) + " break(s)";
  for (const auto& b : report.breaks) {
    detail += " at " + std::to_string(b.index) + " " + std::string(to_string(b.before)) + "->" +
              std::string(to_string(b.after));
  }
  return {ok, detail};
}

Outcome quadratic_shape() {
  const auto curve =
      per_worker_curve(order_by_output(generate(ScenarioSpec::defaults(ScenarioKind::III))));
  const auto fit = fit_quadratic(curve.points);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (const auto& p : curve.points) {
    const double r = p.y - fit(p.x);
    s0 += r;
    s1 += r * p.x;
    s2 += r * p.x * p.x;
  }
  const double ortho = std::max({std::abs(s0), std::abs(s1), std::abs(s2)});
  const bool ok = fit.c2 < 0.0 && fit.slope_min > 0.0 && ortho <= kOrthogonalityTol;
  return {ok, fmt("c2 = %.4f, slope in [%.4f, %.4f], max |X'r| = %.1e", fit.c2, fit.slope_min,
                  fit.slope_max, ortho)};
}

Outcome cobb_douglas_oracle() {
  constexpr double alpha = 0.35;
  constexpr double Z = 1.7;
  std::mt19937_64 engine(6);
  std::uniform_real_distribution<double> factor(10.0, 1000.0);
  std::vector<PanelObservation> panel;
  for (int i = 0; i < 20; ++i) {
    const double K = factor(engine);
    const double L = factor(engine);
    panel.push_back({Z * std::pow(K, alpha) * std::pow(L, 1.0 - alpha), K, L});
  }
  const auto fit = fit_cobb_douglas(panel);
  const double ea = std::abs(fit.alpha - alpha) / alpha;
  const double ez = std::abs(fit.Z - Z) / Z;
  return {ea <= kRecoveryRelTol && ez <= kRecoveryRelTol,
          fmt("alpha rel err %.1e, Z rel err %.1e (tol %.0e)", ea, ez, kRecoveryRelTol)};
}

Outcome ces_inefficiency() {
  CesConfig grid_spec;  // 1..20 x 1..20, 20 steps
  const auto grid = grid_spec.grid();
  const auto t0 = Clock::now();
  const auto cmp = compare_cd_ces(1.0, 0.5, -1.0, grid);
  const double dt = seconds_since(t0);
  bool ok = grid.size() == 400 && cmp.sign_uniform && dt < kCesSeconds;
  int diagonal = 0;
  for (const auto& g : cmp.points) {
    if (g.K == g.L) {
      ++diagonal;
      ok = ok && std::abs(g.gap) <= kDiagonalRelTol * g.cobb_douglas;
    } else {
      ok = ok && g.gap > 0.0;
    }
  }
  ok = ok && diagonal == 20;
  return {ok, fmt("%g points, max gap %.4f, mean gap %.4f, %.2g s", static_cast<double>(grid.size()),
                  cmp.max_gap, cmp.mean_gap, dt)};
}

// Random establishment around the worked example's magnitudes.
Establishment random_establishment(std::mt19937_64& engine) {
  std::uniform_real_distribution<double> inv(0.5, 2.5);
  std::uniform_real_distribution<double> qty(10.0, 200.0);
  return {1, 1.0 / inv(engine), 1.0 / inv(engine), qty(engine), qty(engine)};
}

Outcome dynamics_properties() {
  std::mt19937_64 engine(20260);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const AdjustmentPolicy confirm;

  // (a) Confirmed capital-expectation runs.
  int a_states = 0, a_fail = 0;
  for (int s = 0; s < kRandomStates; ++s) {
    auto st = ExpectationState::steady(random_establishment(engine));
    st.expected_a = st.current.a * (0.9 + 0.1 * unit(engine));
    const double wage = (1.0 / std::min(st.current.a, st.expected_a)) * (1.01 + unit(engine));
    const FactorPrices prices{wage, 0.01 + 0.5 * unit(engine)};
    const auto trace = run_adjustment(st, prices, confirm, 500);
    ++a_states;
    for (std::size_t i = 1; i < trace.rows.size(); ++i) {
      if (trace.rows[i - 1].gap_capital <= confirm.tolerance) break;
      const double prev = trace.rows[i - 1].gap_capital;
      const double slack = kGapRoundingRel * std::max(1.0, std::abs(trace.rows[i - 1].mp_capital));
      if (trace.rows[i].gap_capital > prev + slack) {
        ++a_fail;
        break;
      }
    }
  }

  // (b) Disconfirmed runs: every unconfirmed increase at j is undone at j+2.
  AdjustmentPolicy disconfirm;
  disconfirm.realization = RealizationRule::Disconfirm;
  int b_states = 0, b_fail = 0;
  while (b_states < kRandomStates) {
    auto st = ExpectationState::steady(random_establishment(engine));
    st.expected_a = st.current.a * (0.8 + 0.2 * unit(engine));
    st.expected_b = st.current.b * (0.8 + 0.2 * unit(engine));
    const double mpk = expected_mp_capital(st).value;
    const double mpl = expected_mp_labor(st).value;
    if (mpk <= 0.0 && mpl <= 0.0) continue;  // nothing would be increased
    const FactorPrices prices{mpl > 0.0 ? 0.5 * mpl : 1.0, mpk > 0.0 ? 0.5 * mpk : 1.0};
    const auto trace = run_adjustment(st, prices, disconfirm, 20);
    bool any = false;
    for (std::size_t j = 0; j < trace.rows.size(); ++j) {
      const auto& row = trace.rows[j];
      const bool increase = row.action == AdjustmentAction::IncreaseK ||
                            row.action == AdjustmentAction::IncreaseL ||
                            row.action == AdjustmentAction::Both;
      if (!increase || row.confirmed) continue;
      any = true;
      if (j + 2 >= trace.rows.size() || trace.rows[j + 1].action != AdjustmentAction::Revert ||
          trace.rows[j + 2].k != row.k || trace.rows[j + 2].l != row.l) {
        ++b_fail;
        break;
      }
    }
    if (!any) ++b_fail;
    ++b_states;
  }

  // (c) Zero-gap starts hold immediately.
  int c_states = 0, c_fail = 0;
  for (int s = 0; s < kRandomStates; ++s) {
    auto st = ExpectationState::steady(random_establishment(engine));
    st.expected_a = st.current.a * (0.8 + 0.2 * unit(engine));
    st.expected_b = st.current.b * (0.8 + 0.2 * unit(engine));
    const double mpk = expected_mp_capital(st).value;
    const double mpl = expected_mp_labor(st).value;
    const FactorPrices prices{mpl > 0.0 ? mpl : 1.0, mpk > 0.0 ? mpk : 1.0};
    const auto trace = run_adjustment(st, prices, confirm, 10);
    ++c_states;
    if (trace.rows.size() != 1 || trace.rows[0].action != AdjustmentAction::Hold) ++c_fail;
  }

  const bool ok = a_states >= 100 && b_states >= 100 && c_states >= 100 && a_fail == 0 &&
                  b_fail == 0 && c_fail == 0;
  return {ok, "(a) " + std::to_string(a_fail) + "/" + std::to_string(a_states) + " failed, (b) " +
                  std::to_string(b_fail) + "/" + std::to_string(b_states) + " failed, (c) " +
                  std::to_string(c_fail) + "/" + std::to_string(c_states) + " failed"};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "leontief_acceptance";
  fs::remove_all(root);
  std::string first;
  std::string second;
  for (int run = 0; run < 2; ++run) {
    auto config = RunConfig::defaults();
    override_seed(config, 2026);
    config.output_dir = root / ("run" + std::to_string(run));
    std::ostringstream console;
    cli::cmd_replicate_table1(config, console);
    (run == 0 ? first : second) = slurp(cli::output_path(config, "table1"));
  }
  const bool ok = !first.empty() && first == second;
  return {ok, std::to_string(first.size()) + " bytes, " + (ok ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 TFP identity on the four table rows", tfp_identity},
      {"2 worked marginal productivities", worked_marginals},
      {"3 kind-I closed form", closed_form_kind_one},
      {"4 single regime break at 18", single_break},
      {"5 concave per-worker quadratic", quadratic_shape},
      {"6 Cobb-Douglas fit recovery", cobb_douglas_oracle},
      {"7 CD exceeds CES off the diagonal", ces_inefficiency},
      {"8 adjustment dynamics properties", dynamics_properties},
      {"9 replicate-table1 determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::printf("[%s] %s: %s\n", out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
