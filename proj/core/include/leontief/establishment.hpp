// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

namespace leontief {

/// One production unit operating a fixed-proportions technology.
///
/// `a` and `b` are labor and capital requirements per unit of output, so
/// `1/a` and `1/b` are the average productivities of labor and capital.
/// Ids are 1-based.
struct Establishment {
  int id = 1;
  double a = 1.0;
  double b = 1.0;
  double k = 1.0;
  double l = 1.0;

  double labor_capacity() const noexcept { return l / a; }
  double capital_capacity() const noexcept { return k / b; }
  double intensity() const noexcept { return k / l; }

  friend bool operator==(const Establishment&, const Establishment&) = default;
};

/// Which factor attains the minimum in y = min(l/a, k/b).
enum class Regime { LaborLimited, CapitalLimited, Balanced };

std::string_view to_string(Regime regime) noexcept;
Regime regime_from_string(std::string_view token);

inline constexpr double kDefaultRegimeTolerance = 1e-9;

struct OutputRecord {
  double y = 0.0;
  Regime regime = Regime::Balanced;
  /// |l/a - k/b|, reported as 0 when the regime is Balanced.
  double slack = 0.0;
};

/// Throws DomainError naming the first non-positive (or non-finite) field.
void validate(const Establishment& est);

/// Relative-tolerance classification: labor limits when
/// l/a < (k/b)(1 - tol), capital limits when k/b < (l/a)(1 - tol).
Regime classify_regime(const Establishment& est,
                       double tol = kDefaultRegimeTolerance);

OutputRecord eval_leontief(const Establishment& est,
                           double tol = kDefaultRegimeTolerance);

/// Output only; skips regime classification.
inline double leontief_output(double a, double b, double k, double l) noexcept {
  const double labor = l / a;
  const double capital = k / b;
  return labor < capital ? labor : capital;
}

}  // namespace leontief
