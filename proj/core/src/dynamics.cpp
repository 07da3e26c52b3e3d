// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/dynamics.hpp"

#include <cmath>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

std::string_view to_string(AdjustmentAction action) noexcept {
  switch (action) {
    case AdjustmentAction::IncreaseK: return "IncreaseK";
    case AdjustmentAction::IncreaseL: return "IncreaseL";
    case AdjustmentAction::Both: return "Both";
    case AdjustmentAction::Hold: return "Hold";
    case AdjustmentAction::Revert: return "Revert";
  }
  return "Hold";
}

AdjustmentAction adjustment_action_from_string(std::string_view token) {
  for (auto action : {AdjustmentAction::IncreaseK, AdjustmentAction::IncreaseL,
                      AdjustmentAction::Both, AdjustmentAction::Hold, AdjustmentAction::Revert}) {
    if (token == to_string(action)) return action;
  }
  throw DomainError("unknown adjustment action '" + std::string(token) + "'");
}

std::string_view to_string(RealizationRule rule) noexcept {
  switch (rule) {
    case RealizationRule::Confirm: return "confirm";
    case RealizationRule::Disconfirm: return "disconfirm";
    case RealizationRule::Scripted: return "scripted";
  }
  return "confirm";
}

RealizationRule realization_rule_from_string(std::string_view token) {
  if (token == "confirm") return RealizationRule::Confirm;
  if (token == "disconfirm") return RealizationRule::Disconfirm;
  if (token == "scripted") return RealizationRule::Scripted;
  throw SpecError("unknown realization rule '" + std::string(token) +
                  "' (expected confirm, disconfirm or scripted)");
}

ExpectationState ExpectationState::steady(const Establishment& est, int moment) {
  return ExpectationState{est, est.a, est.b, moment, std::nullopt};
}

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void validate(const ExpectationState& st) {
  validate(st.current);
  if (!positive_finite(st.expected_a) || !positive_finite(st.expected_b)) {
    throw DomainError("expected coefficients must be positive");
  }
}

void validate(const FactorPrices& prices) {
  if (!positive_finite(prices.real_wage) || !positive_finite(prices.real_interest)) {
    throw DomainError("factor prices must be positive");
  }
}

void validate(const AdjustmentPolicy& policy) {
  if (!positive_finite(policy.capital_step) || !positive_finite(policy.labor_step)) {
    throw SpecError("adjustment steps must be positive");
  }
  if (!(policy.tolerance >= 0.0) || !std::isfinite(policy.tolerance)) {
    throw SpecError("adjustment tolerance must be >= 0");
  }
  for (const auto& r : policy.script) {
    if (!positive_finite(r.a) || !positive_finite(r.b)) {
      throw SpecError("scripted realizations must have positive coefficients");
    }
  }
}

MarginalProductivity expected_mp_capital(const ExpectationState& st, double dk) {
  validate(st);
  if (!(dk > 0.0)) throw DomainError("capital increment must be positive");
  const auto& c = st.current;
  const double today = leontief_output(c.a, c.b, c.k, c.l);
  const double tomorrow = leontief_output(st.expected_a, c.b, c.k + dk, c.l);
  return {Factor::Capital, (tomorrow - today) / dk};
}

MarginalProductivity expected_mp_labor(const ExpectationState& st, double dl) {
  validate(st);
  if (!(dl > 0.0)) throw DomainError("labor increment must be positive");
  const auto& c = st.current;
  const double today = leontief_output(c.a, c.b, c.k, c.l);
  const double tomorrow = leontief_output(c.a, st.expected_b, c.k, c.l + dl);
  return {Factor::Labor, (tomorrow - today) / dl};
}

namespace {

RealizedCoefficients realize(const ExpectationState& st, const AdjustmentPolicy& policy) {
  switch (policy.realization) {
    case RealizationRule::Confirm:
      return {st.expected_a, st.expected_b};
    case RealizationRule::Disconfirm:
      return {st.current.a, st.current.b};
    case RealizationRule::Scripted: {
      const long offset = static_cast<long>(st.moment) - policy.script_origin;
      if (offset >= 0 && offset < static_cast<long>(policy.script.size())) {
        return policy.script[static_cast<std::size_t>(offset)];
      }
      return {st.expected_a, st.expected_b};
    }
  }
  return {st.expected_a, st.expected_b};
}

}  // namespace

StepResult adjust_step(const ExpectationState& st, const FactorPrices& prices,
                       const AdjustmentPolicy& policy) {
  validate(policy);
  validate(prices);
  validate(st);

  TraceRow row;
  row.moment = st.moment;
  row.k = st.current.k;
  row.l = st.current.l;
  row.mp_capital = expected_mp_capital(st, policy.capital_step).value;
  row.mp_labor = expected_mp_labor(st, policy.labor_step).value;
  row.gap_capital = row.mp_capital - prices.real_interest;
  row.gap_labor = row.mp_labor - prices.real_wage;

  ExpectationState next = st;
  next.moment = st.moment + 1;

  if (st.pending_reversal) {
    // The increase decided two periods ago rested on an expectation that did
    // not materialize; restore the earlier levels exactly.
    row.action = AdjustmentAction::Revert;
    row.confirmed = false;
    next.current.k = st.pending_reversal->k;
    next.current.l = st.pending_reversal->l;
    next.expected_a = st.current.a;
    next.expected_b = st.current.b;
    next.pending_reversal.reset();
    return {next, row};
  }

  const bool raise_k = row.gap_capital > policy.tolerance;
  const bool raise_l = row.gap_labor > policy.tolerance;
  if (raise_k && raise_l) {
    row.action = AdjustmentAction::Both;
  } else if (raise_k) {
    row.action = AdjustmentAction::IncreaseK;
  } else if (raise_l) {
    row.action = AdjustmentAction::IncreaseL;
  } else {
    row.action = AdjustmentAction::Hold;
  }
  if (raise_k) next.current.k = st.current.k + policy.capital_step;
  if (raise_l) next.current.l = st.current.l + policy.labor_step;

  const RealizedCoefficients realized = realize(st, policy);
  row.confirmed = realized.a == st.expected_a && realized.b == st.expected_b;
  next.current.a = realized.a;
  next.current.b = realized.b;
  next.expected_a = realized.a;
  next.expected_b = realized.b;
  if ((raise_k || raise_l) && !row.confirmed) {
    next.pending_reversal = ExpectationState::PendingReversal{st.current.k, st.current.l};
  }
  return {next, row};
}

AdjustmentTrace run_adjustment(const ExpectationState& st, const FactorPrices& prices,
                               const AdjustmentPolicy& policy, int max_periods) {
  if (max_periods < 2) {
    throw SpecError("adjustment needs max_periods >= 2, got " + std::to_string(max_periods));
  }
  AdjustmentTrace trace;
  ExpectationState state = st;
  for (int period = 0; period < max_periods; ++period) {
    StepResult step = adjust_step(state, prices, policy);
    trace.rows.push_back(step.row);
    if (step.row.action == AdjustmentAction::Hold) break;
    state = std::move(step.next);
  }
  return trace;
}

}  // namespace leontief
