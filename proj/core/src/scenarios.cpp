// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

std::string_view to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::I: return "I";
    case ScenarioKind::II: return "II";
    case ScenarioKind::III: return "III";
    case ScenarioKind::IV: return "IV";
    case ScenarioKind::Distribution: return "Distribution";
  }
  return "I";
}

ScenarioKind scenario_kind_from_string(std::string_view token) {
  if (token == "I") return ScenarioKind::I;
  if (token == "II") return ScenarioKind::II;
  if (token == "III") return ScenarioKind::III;
  if (token == "IV") return ScenarioKind::IV;
  if (token == "Distribution" || token == "distribution") return ScenarioKind::Distribution;
  throw SpecError("unknown scenario kind '" + std::string(token) +
                  "' (expected I, II, III, IV or Distribution)");
}

namespace {

// Calibration of the table scenarios. Kind II passes through the worked
// establishment (rank 14: 1/a = 1.09562, 1/b = 1.68849, k = 65, l = 100).
// The decay rates were solved offline so that aggregate output lands near
// 5491.08 (II), 5492.13 (III) and 5518.54 (IV).
constexpr double kTableCapital = 3257.98;
constexpr double kTableLabor = 4879.44;
constexpr double kIntensityGrowth = 1.0144;
constexpr double kLaborDecayIII = 0.96;
constexpr double kCapitalDecayIII = 0.9995;
constexpr double kLaborCoefAtPivotIII = 0.95411;
constexpr double kDispersionIV = 1.0541;
constexpr double kDecayII = 0.999795;

}  // namespace

ScenarioSpec ScenarioSpec::defaults(ScenarioKind kind) {
  ScenarioSpec spec;
  spec.kind = kind;
  spec.label = std::string(to_string(kind));
  spec.capital_target = kTableCapital;
  spec.labor_target = kTableLabor;
  switch (kind) {
    case ScenarioKind::I:
      spec.intensity_growth = kIntensityGrowth;
      break;
    case ScenarioKind::II:
      spec.capital_target = 3250.0;
      spec.labor_target = 5000.0;
      spec.coefficients = {1.0 / 1.09562, 1.0 / 1.68849, 14, kDecayII, kDecayII};
      break;
    case ScenarioKind::III:
      spec.coefficients = {kLaborCoefAtPivotIII, 1.0, 18, kLaborDecayIII, kCapitalDecayIII};
      spec.intensity_growth = kIntensityGrowth;
      spec.break_index = 18;
      break;
    case ScenarioKind::IV:
      spec.coefficients = {kLaborCoefAtPivotIII, 1.0, 18, kLaborDecayIII, kCapitalDecayIII};
      spec.intensity_growth = kIntensityGrowth;
      spec.dispersion = kDispersionIV;
      break;
    case ScenarioKind::Distribution:
      spec.distribution = DistributionParams{};
      break;
  }
  return spec;
}

namespace {

void require(bool ok, const std::string& label, const std::string& message) {
  if (!ok) throw SpecError("scenario '" + label + "': " + message);
}

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void validate(const ScenarioSpec& spec) {
  const std::string& label = spec.label;
  require(spec.n >= 2, label, "n must be >= 2, got " + std::to_string(spec.n));
  require(positive_finite(spec.capital_target), label, "capital target must be positive");
  require(positive_finite(spec.labor_target), label, "labor target must be positive");
  require(positive_finite(spec.intensity_growth), label, "intensity growth must be positive");

  const auto& c = spec.coefficients;

  if (spec.break_index) {
    require(spec.kind == ScenarioKind::III, label, "break_index is only valid for kind III");
    require(*spec.break_index >= 2 && *spec.break_index <= spec.n - 1, label,
            "break_index must lie in [2, n-1]");
  }
  if (spec.distribution) {
    require(spec.kind == ScenarioKind::Distribution, label,
            "distribution parameters are only valid for kind Distribution");
    validate(*spec.distribution);
  }

  switch (spec.kind) {
    case ScenarioKind::I:
      require(positive_finite(c.a_anchor), label, "labor coefficient must be positive");
      require(positive_finite(spec.capital_slack), label, "capital slack must be positive");
      require(spec.intensity_growth != 1.0, label,
              "kind I needs varying factor intensities (intensity growth != 1)");
      break;
    case ScenarioKind::II:
      require(positive_finite(c.a_anchor) && positive_finite(c.b_anchor), label,
              "coefficient anchors must be positive");
      require(positive_finite(c.a_decay) && positive_finite(c.b_decay), label,
              "coefficient decay factors must be positive");
      break;
    case ScenarioKind::III:
    case ScenarioKind::IV:
      require(positive_finite(c.a_anchor), label, "labor coefficient must be positive");
      require(c.a_decay > 0.0 && c.a_decay < 1.0 && c.b_decay > 0.0 && c.b_decay < 1.0, label,
              "coefficient decay factors must lie in (0, 1)");
      require(spec.effective_break() >= 2 && spec.effective_break() <= spec.n - 1, label,
              "pivot must lie in [2, n-1]");
      require(spec.intensity_growth > 1.0 && spec.intensity_growth < c.b_decay / c.a_decay,
              label,
              "a single labor-to-capital switch needs 1 < intensity growth < b_decay/a_decay");
      if (spec.kind == ScenarioKind::IV) {
        require(spec.dispersion > 1.0 && std::isfinite(spec.dispersion), label,
                "kind IV dispersion must exceed 1");
      }
      break;
    case ScenarioKind::Distribution:
      require(spec.distribution.has_value(), label,
              "kind Distribution requires distribution parameters");
      break;
  }
}

namespace {

struct FactorAllocation {
  std::vector<double> k;
  std::vector<double> l;
  double weight_sum = 0.0;  // sum of growth^(i-1) * l_i
};

// l_i = L/n, k_i/l_i proportional to growth^(i-1), scaled so sum k_i = K.
FactorAllocation allocate_factors(const ScenarioSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  FactorAllocation out;
  out.l.assign(n, spec.labor_target / spec.n);
  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = std::pow(spec.intensity_growth, static_cast<double>(i));
    out.weight_sum += weight[i] * out.l[i];
  }
  out.k.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.k[i] = spec.capital_target * weight[i] / out.weight_sum * out.l[i];
  }
  return out;
}

Scenario make_scenario(const ScenarioSpec& spec, const FactorAllocation& factors,
                       const std::vector<double>& a, const std::vector<double>& b) {
  Scenario sc;
  sc.label = spec.label.empty() ? std::string(to_string(spec.kind)) : spec.label;
  sc.spec = spec;
  sc.establishments.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Establishment est{static_cast<int>(i) + 1, a[i], b[i], factors.k[i], factors.l[i]};
    validate(est);
    sc.establishments.push_back(est);
  }
  return sc;
}

Scenario generate_identical_coefficients(const ScenarioSpec& spec) {
  const FactorAllocation factors = allocate_factors(spec);
  const auto n = factors.k.size();
  double min_intensity = factors.k[0] / factors.l[0];
  for (std::size_t i = 1; i < n; ++i) {
    min_intensity = std::min(min_intensity, factors.k[i] / factors.l[i]);
  }
  // k_i/b >= (1 + slack) l_i/a with equality at the least capital-intensive unit.
  const double a = spec.coefficients.a_anchor;
  const double b = a * min_intensity / (1.0 + spec.capital_slack);
  return make_scenario(spec, factors, std::vector<double>(n, a), std::vector<double>(n, b));
}

Scenario generate_identical_intensity(const ScenarioSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  FactorAllocation factors;
  factors.k.assign(n, spec.capital_target / spec.n);
  factors.l.assign(n, spec.labor_target / spec.n);
  const auto& c = spec.coefficients;
  std::vector<double> a(n);
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double rank = static_cast<double>(static_cast<int>(i) + 1 - c.anchor);
    a[i] = c.a_anchor * std::pow(c.a_decay, rank);
    b[i] = c.b_anchor * std::pow(c.b_decay, rank);
  }
  return make_scenario(spec, factors, a, b);
}

// Coefficients a_i = a_m g^(i-m), b_i = b_m h^(i-m); b_m is chosen so that
// b/a equals k/l at rank m - 1/2. Since k/l grows by `intensity_growth` per
// rank and b/a by h/g > intensity_growth, labor binds below m and capital
// binds from m on.
struct StepSchedule {
  std::vector<double> a;
  std::vector<double> b;
};

StepSchedule step_schedule(const ScenarioSpec& spec, const FactorAllocation& factors) {
  const auto n = static_cast<std::size_t>(spec.n);
  const auto& c = spec.coefficients;
  const int m = spec.effective_break();
  const double theta = spec.intensity_growth;
  const double g = c.a_decay;
  const double h = c.b_decay;
  const double intensity_at_switch =
      spec.capital_target * std::pow(theta, m - 1.5) / factors.weight_sum;
  const double b_at_pivot = c.a_anchor * std::sqrt(h / g) * intensity_at_switch;
  StepSchedule out{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double rank = static_cast<double>(static_cast<int>(i) + 1 - m);
    out.a[i] = c.a_anchor * std::pow(g, rank);
    out.b[i] = b_at_pivot * std::pow(h, rank);
  }
  return out;
}

void check_single_switch(const Scenario& sc, int m) {
  for (const auto& est : sc.establishments) {
    const Regime expected = est.id < m ? Regime::LaborLimited : Regime::CapitalLimited;
    if (classify_regime(est) != expected) {
      throw SpecError("scenario '" + sc.label + "': establishment " + std::to_string(est.id) +
                      " is not " + std::string(to_string(expected)) +
                      "; schedule parameters are too close to the switch");
    }
  }
}

Scenario generate_step(const ScenarioSpec& spec) {
  const FactorAllocation factors = allocate_factors(spec);
  StepSchedule coef = step_schedule(spec, factors);
  Scenario sc;
  if (spec.kind == ScenarioKind::IV) {
    const double g = std::pow(spec.coefficients.a_decay, spec.dispersion);
    const double h = std::pow(spec.coefficients.b_decay, spec.dispersion);
    const double a1 = coef.a[0];
    const double b1 = coef.b[0];
    for (std::size_t i = 0; i < coef.a.size(); ++i) {
      coef.a[i] = a1 * std::pow(g, static_cast<double>(i));
      coef.b[i] = b1 * std::pow(h, static_cast<double>(i));
    }
    sc = make_scenario(spec, factors, coef.a, coef.b);
  } else {
    sc = make_scenario(spec, factors, coef.a, coef.b);
    check_single_switch(sc, spec.effective_break());
  }
  return sc;
}

}  // namespace

Scenario generate_distribution(const ScenarioSpec& spec) {
  if (spec.kind != ScenarioKind::Distribution) {
    throw SpecError("scenario '" + spec.label + "': generate_distribution needs kind Distribution");
  }
  validate(spec);
  const FactorAllocation factors = allocate_factors(spec);
  const auto n = factors.k.size();
  Rng rng(spec.seed);
  std::vector<double> a(n);
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = 1.0 / sample(*spec.distribution, rng);
    b[i] = 1.0 / sample(*spec.distribution, rng);
  }
  return make_scenario(spec, factors, a, b);
}

Scenario generate(const ScenarioSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ScenarioKind::I: return generate_identical_coefficients(spec);
    case ScenarioKind::II: return generate_identical_intensity(spec);
    case ScenarioKind::III:
    case ScenarioKind::IV: return generate_step(spec);
    case ScenarioKind::Distribution: return generate_distribution(spec);
  }
  throw SpecError("unhandled scenario kind");
}

Scenario order_by_output(const Scenario& sc) {
  struct Keyed {
    double y;
    Establishment est;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(sc.establishments.size());
  for (const auto& est : sc.establishments) {
    keyed.push_back({eval_leontief(est).y, est});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& lhs, const Keyed& rhs) {
    if (lhs.y != rhs.y) return lhs.y < rhs.y;
    return lhs.est.id < rhs.est.id;
  });
  Scenario out{sc.label, sc.spec, {}};
  out.establishments.reserve(keyed.size());
  for (const auto& item : keyed) out.establishments.push_back(item.est);
  return out;
}

std::vector<OutputRecord> evaluate(const Scenario& sc, double tol) {
  std::vector<OutputRecord> out;
  out.reserve(sc.establishments.size());
  for (const auto& est : sc.establishments) out.push_back(eval_leontief(est, tol));
  return out;
}

}  // namespace leontief
