// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "leontief/establishment.hpp"
#include "leontief/scenarios.hpp"

namespace leontief {

inline constexpr double kDefaultAlpha = 0.5;

/// Economy-wide totals at one moment. Output and factors are homogeneous,
/// so the totals are plain sums.
struct AggregateRecord {
  double Y = 0.0;
  double K = 0.0;
  double L = 0.0;
  int moment = 0;

  friend bool operator==(const AggregateRecord&, const AggregateRecord&) = default;
};

AggregateRecord aggregate(std::span<const Establishment> establishments, int moment = 0);
AggregateRecord aggregate(const Scenario& sc, int moment = 0);

/// Cobb-Douglas residual Z = Y / (K^alpha L^(1-alpha)).
struct TFPRecord {
  double alpha = kDefaultAlpha;
  double Z = 0.0;
  AggregateRecord source;

  double factor_bundle() const;
  /// Z K^alpha L^(1-alpha); equals source.Y up to rounding.
  double reconstruct() const { return Z * factor_bundle(); }
};

TFPRecord tfp(const AggregateRecord& agg, double alpha = kDefaultAlpha);

struct TFPDecomposition {
  double dZ_total = 0.0;
  /// (K, L) coincide, so dZ is entirely an output effect.
  bool shared_factors = false;
};

/// variant.Z - base.Z. Factors count as shared when both K and L agree to
/// 1e-12 relative.
TFPDecomposition decompose_tfp(const TFPRecord& base, const TFPRecord& variant);

struct RegimeBreak {
  int index = 0;  // 1-based rank in output order of the first unit after the switch
  Regime before = Regime::LaborLimited;
  Regime after = Regime::CapitalLimited;

  friend bool operator==(const RegimeBreak&, const RegimeBreak&) = default;
};

struct BreakReport {
  std::vector<RegimeBreak> breaks;
  bool ordered = false;
};

/// True when establishments are ascending by output with ids breaking ties.
bool is_output_ordered(const Scenario& sc);

/// Throws OrderingError unless is_output_ordered(sc).
BreakReport detect_breaks(const Scenario& sc, double tol = kDefaultRegimeTolerance);

/// x = k/l, y = y/l for one establishment.
struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

struct PerWorkerCurve {
  std::vector<CurvePoint> points;
};

PerWorkerCurve per_worker_curve(const Scenario& sc);

/// Ordered output series: (rank, id, y).
struct RankedOutput {
  int rank = 0;
  int id = 0;
  double y = 0.0;
};

std::vector<RankedOutput> ranked_output(const Scenario& sc);

}  // namespace leontief
