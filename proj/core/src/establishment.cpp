// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/establishment.hpp"

#include <cmath>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

std::string_view error_class(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Spec: return "SpecError";
    case ErrorKind::Identification: return "IdentificationError";
    case ErrorKind::Ordering: return "OrderingError";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::LaborLimited: return "LaborLimited";
    case Regime::CapitalLimited: return "CapitalLimited";
    case Regime::Balanced: return "Balanced";
  }
  return "Balanced";
}

Regime regime_from_string(std::string_view token) {
  if (token == "LaborLimited") return Regime::LaborLimited;
  if (token == "CapitalLimited") return Regime::CapitalLimited;
  if (token == "Balanced") return Regime::Balanced;
  throw DomainError("unknown regime token '" + std::string(token) + "'");
}

namespace {

void require_positive(double value, const char* field, int id) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("establishment " + std::to_string(id) + ": field '" + field +
                      "' must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

void validate(const Establishment& est) {
  require_positive(est.a, "a", est.id);
  require_positive(est.b, "b", est.id);
  require_positive(est.k, "k", est.id);
  require_positive(est.l, "l", est.id);
}

Regime classify_regime(const Establishment& est, double tol) {
  validate(est);
  if (!(tol >= 0.0)) {
    throw DomainError("regime tolerance must be >= 0");
  }
  const double labor = est.labor_capacity();
  const double capital = est.capital_capacity();
  if (labor < capital * (1.0 - tol)) return Regime::LaborLimited;
  if (capital < labor * (1.0 - tol)) return Regime::CapitalLimited;
  return Regime::Balanced;
}

OutputRecord eval_leontief(const Establishment& est, double tol) {
  const Regime regime = classify_regime(est, tol);
  const double labor = est.labor_capacity();
  const double capital = est.capital_capacity();
  OutputRecord out;
  out.y = labor < capital ? labor : capital;
  out.regime = regime;
  out.slack = regime == Regime::Balanced ? 0.0 : std::abs(labor - capital);
  return out;
}

}  // namespace leontief
