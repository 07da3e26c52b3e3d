// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "leontief/aggregate.hpp"

namespace leontief {

struct PanelObservation {
  double Y = 0.0;
  double K = 0.0;
  double L = 0.0;
};

/// Constant-returns Cobb-Douglas estimated from ln(Y/L) = ln Z + alpha ln(K/L).
struct CobbDouglasFit {
  double alpha = 0.0;
  double Z = 0.0;
  double r_squared = 0.0;  // of the per-worker log regression
  int n_obs = 0;
};

/// Needs >= 3 positive observations whose K/L is not constant.
CobbDouglasFit fit_cobb_douglas(std::span<const PanelObservation> panel);

double eval_cobb_douglas(double Z, double alpha, double K, double L);

/// Y = Z (share K^rho + (1 - share) L^rho)^(1/rho), rho < 1, rho != 0.
struct CESParams {
  double share = 0.5;
  double rho = -1.0;
  double Z = 1.0;

  double elasticity_of_substitution() const { return 1.0 / (1.0 - rho); }
};

void validate(const CESParams& p);

/// rho == 0 is rejected: use eval_cobb_douglas, its limit.
double eval_ces(const CESParams& p, double K, double L);

struct FactorPoint {
  double K = 0.0;
  double L = 0.0;
};

struct GapPoint {
  double K = 0.0;
  double L = 0.0;
  double cobb_douglas = 0.0;
  double ces = 0.0;
  double gap = 0.0;  // cobb_douglas - ces
};

struct CesComparison {
  double max_gap = 0.0;
  double mean_gap = 0.0;
  /// gap >= -1e-12 * CD at every grid point.
  bool sign_uniform = false;
  std::vector<GapPoint> points;
};

/// Compares Z K^share L^(1-share) with the CES of equal Z and share.
/// CD >= CES pointwise when rho < 0; the direction reverses for rho in (0, 1).
CesComparison compare_cd_ces(double Z, double share, double rho,
                             std::span<const FactorPoint> grid);

/// y = c0 + c1 x + c2 x^2 by least squares.
struct QuadraticFit {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double r_squared = 0.0;
  double slope_min = 0.0;  // of c1 + 2 c2 x over [x_min, x_max]
  double slope_max = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  int n_obs = 0;

  double operator()(double x) const { return c0 + (c1 + c2 * x) * x; }
  double slope(double x) const { return c1 + 2.0 * c2 * x; }
};

/// Needs at least 3 distinct x values.
QuadraticFit fit_quadratic(std::span<const CurvePoint> points);

}  // namespace leontief
