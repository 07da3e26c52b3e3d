// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "leontief/establishment.hpp"

namespace leontief {

/// Expectation formed at `moment` about next period's coefficients.
///
/// The expected coefficients are exogenous inputs: nothing in this module
/// derives them from factor choices.
struct ExpectationState {
  /// Establishment at `moment`. Its k and l are fixed for the period.
  Establishment current;
  double expected_a = 1.0;
  double expected_b = 1.0;
  int moment = 0;

  /// Factor levels to restore next period after a disconfirmed increase.
  struct PendingReversal {
    double k = 0.0;
    double l = 0.0;
    friend bool operator==(const PendingReversal&, const PendingReversal&) = default;
  };
  std::optional<PendingReversal> pending_reversal;

  /// State with expectations equal to the current coefficients.
  static ExpectationState steady(const Establishment& est, int moment = 0);

  friend bool operator==(const ExpectationState&, const ExpectationState&) = default;
};

void validate(const ExpectationState& st);

enum class Factor { Capital, Labor };

struct MarginalProductivity {
  Factor factor = Factor::Capital;
  double value = 0.0;
};

/// [min(l/E a, (k+dk)/b) - min(l/a, k/b)] / dk with l held fixed.
MarginalProductivity expected_mp_capital(const ExpectationState& st, double dk = 1.0);

/// [min((l+dl)/a, k/E b) - min(l/a, k/b)] / dl with k held fixed.
MarginalProductivity expected_mp_labor(const ExpectationState& st, double dl = 1.0);

struct FactorPrices {
  double real_wage = 1.0;
  double real_interest = 0.05;
  friend bool operator==(const FactorPrices&, const FactorPrices&) = default;
};

void validate(const FactorPrices& prices);

enum class AdjustmentAction { IncreaseK, IncreaseL, Both, Hold, Revert };

std::string_view to_string(AdjustmentAction action) noexcept;
AdjustmentAction adjustment_action_from_string(std::string_view token);

/// How next period's coefficients are realized.
///   Confirm     realized = expected
///   Disconfirm  realized = current
///   Scripted    realized = script[moment - script_origin]; Confirm once exhausted
enum class RealizationRule { Confirm, Disconfirm, Scripted };

std::string_view to_string(RealizationRule rule) noexcept;
RealizationRule realization_rule_from_string(std::string_view token);

struct RealizedCoefficients {
  double a = 1.0;
  double b = 1.0;
  friend bool operator==(const RealizedCoefficients&, const RealizedCoefficients&) = default;
};

struct AdjustmentPolicy {
  double capital_step = 1.0;
  double labor_step = 1.0;
  double tolerance = 1e-6;
  RealizationRule realization = RealizationRule::Confirm;
  std::vector<RealizedCoefficients> script;
  int script_origin = 0;

  friend bool operator==(const AdjustmentPolicy&, const AdjustmentPolicy&) = default;
};

/// Throws SpecError for non-positive steps, negative tolerance or bad script.
void validate(const AdjustmentPolicy& policy);

struct TraceRow {
  int moment = 0;
  double k = 0.0;
  double l = 0.0;
  double mp_capital = 0.0;
  double mp_labor = 0.0;
  double gap_capital = 0.0;  // mp_capital - real_interest
  double gap_labor = 0.0;    // mp_labor - real_wage
  AdjustmentAction action = AdjustmentAction::Hold;
  /// The coefficients realized at moment + 1 matched the expectation held at
  /// `moment`. Always false on Revert rows.
  bool confirmed = true;
};

struct AdjustmentTrace {
  std::vector<TraceRow> rows;
};

struct StepResult {
  ExpectationState next;
  TraceRow row;
};

/// One period of the decision rule. Factor changes chosen at `moment` take
/// effect at moment + 1. After realization the expectation is consumed: the
/// next state expects its realized coefficients to persist.
StepResult adjust_step(const ExpectationState& st, const FactorPrices& prices,
                       const AdjustmentPolicy& policy);

/// Iterates adjust_step until a Hold row (both gaps <= tolerance, nothing to
/// revert) or `max_periods` rows. Throws SpecError when max_periods < 2.
AdjustmentTrace run_adjustment(const ExpectationState& st, const FactorPrices& prices,
                               const AdjustmentPolicy& policy, int max_periods);

}  // namespace leontief
