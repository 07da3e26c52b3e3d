// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

AggregateRecord aggregate(std::span<const Establishment> establishments, int moment) {
  if (establishments.empty()) {
    throw DomainError("cannot aggregate an empty scenario");
  }
  AggregateRecord agg;
  agg.moment = moment;
  for (const auto& est : establishments) {
    agg.Y += eval_leontief(est).y;
    agg.K += est.k;
    agg.L += est.l;
  }
  return agg;
}

AggregateRecord aggregate(const Scenario& sc, int moment) {
  return aggregate(std::span<const Establishment>(sc.establishments), moment);
}

double TFPRecord::factor_bundle() const {
  return std::pow(source.K, alpha) * std::pow(source.L, 1.0 - alpha);
}

TFPRecord tfp(const AggregateRecord& agg, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(agg.Y > 0.0 && agg.K > 0.0 && agg.L > 0.0)) {
    throw DomainError("TFP needs positive Y, K and L");
  }
  TFPRecord rec;
  rec.alpha = alpha;
  rec.source = agg;
  rec.Z = agg.Y / rec.factor_bundle();
  return rec;
}

namespace {

bool nearly_equal(double x, double y) {
  return std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y));
}

}  // namespace

TFPDecomposition decompose_tfp(const TFPRecord& base, const TFPRecord& variant) {
  if (base.alpha != variant.alpha) {
    throw DomainError("TFP records were computed with different alpha (" +
                      std::to_string(base.alpha) + " vs " + std::to_string(variant.alpha) + ")");
  }
  TFPDecomposition out;
  out.dZ_total = variant.Z - base.Z;
  out.shared_factors = nearly_equal(base.source.K, variant.source.K) &&
                       nearly_equal(base.source.L, variant.source.L);
  return out;
}

bool is_output_ordered(const Scenario& sc) {
  const auto& est = sc.establishments;
  for (std::size_t i = 1; i < est.size(); ++i) {
    const double prev = eval_leontief(est[i - 1]).y;
    const double cur = eval_leontief(est[i]).y;
    if (cur < prev || (cur == prev && est[i].id < est[i - 1].id)) return false;
  }
  return true;
}

BreakReport detect_breaks(const Scenario& sc, double tol) {
  if (!is_output_ordered(sc)) {
    throw OrderingError("scenario '" + sc.label +
                        "' is not ordered by output; apply order_by_output first");
  }
  BreakReport report;
  report.ordered = true;
  const auto& est = sc.establishments;
  for (std::size_t i = 1; i < est.size(); ++i) {
    const Regime before = classify_regime(est[i - 1], tol);
    const Regime after = classify_regime(est[i], tol);
    if (before != after) {
      report.breaks.push_back({static_cast<int>(i) + 1, before, after});
    }
  }
  return report;
}

PerWorkerCurve per_worker_curve(const Scenario& sc) {
  PerWorkerCurve curve;
  curve.points.reserve(sc.establishments.size());
  for (const auto& est : sc.establishments) {
    const double y = eval_leontief(est).y;
    curve.points.push_back({est.k / est.l, y / est.l});
  }
  return curve;
}

std::vector<RankedOutput> ranked_output(const Scenario& sc) {
  std::vector<RankedOutput> out;
  out.reserve(sc.establishments.size());
  int rank = 1;
  for (const auto& est : sc.establishments) {
    out.push_back({rank++, est.id, eval_leontief(est).y});
  }
  return out;
}

}  // namespace leontief
