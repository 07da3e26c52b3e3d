// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

namespace {

// Gaussian elimination with partial pivoting for the small normal-equation
// systems used here.
template <std::size_t N>
std::array<double, N> solve(std::array<std::array<double, N>, N> m, std::array<double, N> rhs) {
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < N; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (m[pivot][col] == 0.0) {
      throw IdentificationError("normal equations are singular");
    }
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = col + 1; row < N; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (std::size_t j = col; j < N; ++j) m[row][j] -= factor * m[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::array<double, N> x{};
  for (std::size_t i = N; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t j = i + 1; j < N; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

double r_squared(double ssr, double sst) {
  if (sst == 0.0) return ssr == 0.0 ? 1.0 : 0.0;
  return 1.0 - ssr / sst;
}

}  // namespace

CobbDouglasFit fit_cobb_douglas(std::span<const PanelObservation> panel) {
  if (panel.size() < 3) {
    throw IdentificationError("Cobb-Douglas fit needs at least 3 observations, got " +
                              std::to_string(panel.size()));
  }
  const auto n = static_cast<double>(panel.size());
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(panel.size());
  y.reserve(panel.size());
  for (const auto& obs : panel) {
    if (!(obs.Y > 0.0 && obs.K > 0.0 && obs.L > 0.0)) {
      throw DomainError("Cobb-Douglas fit needs positive Y, K and L");
    }
    x.push_back(std::log(obs.K / obs.L));
    y.push_back(std::log(obs.Y / obs.L));
  }
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    x_mean += x[i];
    y_mean += y[i];
  }
  x_mean /= n;
  y_mean /= n;

  // Centered 2x2 normal equations reduce to the scalar slope below.
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  double spread = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - x_mean;
    const double dy = y[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
    spread = std::max(spread, std::abs(dx));
  }
  if (spread <= 1e-12 * std::max(1.0, std::abs(x_mean))) {
    throw IdentificationError("K/L is constant across the panel; alpha is not identified");
  }
  CobbDouglasFit fit;
  fit.alpha = sxy / sxx;
  fit.Z = std::exp(y_mean - fit.alpha * x_mean);
  fit.n_obs = static_cast<int>(panel.size());
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (y_mean + fit.alpha * (x[i] - x_mean));
    ssr += r * r;
  }
  fit.r_squared = r_squared(ssr, syy);
  return fit;
}

double eval_cobb_douglas(double Z, double alpha, double K, double L) {
  return Z * std::pow(K, alpha) * std::pow(L, 1.0 - alpha);
}

void validate(const CESParams& p) {
  if (!(p.share > 0.0 && p.share < 1.0)) {
    throw DomainError("CES share must lie in (0, 1)");
  }
  if (!(p.Z > 0.0) || !std::isfinite(p.Z)) {
    throw DomainError("CES efficiency Z must be positive");
  }
  if (p.rho == 0.0) {
    throw DomainError("CES rho = 0 is the Cobb-Douglas limit; use eval_cobb_douglas");
  }
  if (!(p.rho < 1.0) || !std::isfinite(p.rho)) {
    throw DomainError("CES rho must be finite and < 1");
  }
}

double eval_ces(const CESParams& p, double K, double L) {
  validate(p);
  if (!(K > 0.0 && L > 0.0)) {
    throw DomainError("CES evaluation needs positive K and L");
  }
  const double mix = p.share * std::pow(K, p.rho) + (1.0 - p.share) * std::pow(L, p.rho);
  return p.Z * std::pow(mix, 1.0 / p.rho);
}

CesComparison compare_cd_ces(double Z, double share, double rho,
                             std::span<const FactorPoint> grid) {
  if (grid.empty()) {
    throw DomainError("CD/CES comparison needs a non-empty grid");
  }
  const CESParams params{share, rho, Z};
  validate(params);
  CesComparison out;
  out.points.reserve(grid.size());
  out.sign_uniform = true;
  out.max_gap = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (const auto& pt : grid) {
    GapPoint gp;
    gp.K = pt.K;
    gp.L = pt.L;
    gp.ces = eval_ces(params, pt.K, pt.L);
    gp.cobb_douglas = eval_cobb_douglas(Z, share, pt.K, pt.L);
    gp.gap = gp.cobb_douglas - gp.ces;
    if (gp.gap < -1e-12 * gp.cobb_douglas) out.sign_uniform = false;
    out.max_gap = std::max(out.max_gap, gp.gap);
    total += gp.gap;
    out.points.push_back(gp);
  }
  out.mean_gap = total / static_cast<double>(grid.size());
  return out;
}

QuadraticFit fit_quadratic(std::span<const CurvePoint> points) {
  std::vector<double> xs;
  xs.reserve(points.size());
  for (const auto& p : points) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  const auto distinct = std::unique(xs.begin(), xs.end()) - xs.begin();
  if (distinct < 3) {
    throw IdentificationError("quadratic fit needs at least 3 distinct x values, got " +
                              std::to_string(distinct));
  }

  const auto n = static_cast<double>(points.size());
  double mean = 0.0;
  for (const auto& p : points) mean += p.x;
  mean /= n;
  double var = 0.0;
  for (const auto& p : points) var += (p.x - mean) * (p.x - mean);
  const double scale = std::sqrt(var / n);

  // Normal equations in the standardized variable u = (x - mean) / scale.
  std::array<std::array<double, 3>, 3> gram{};
  std::array<double, 3> rhs{};
  for (const auto& p : points) {
    const double u = (p.x - mean) / scale;
    const std::array<double, 3> basis{1.0, u, u * u};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) gram[i][j] += basis[i] * basis[j];
      rhs[i] += basis[i] * p.y;
    }
  }
  const auto d = solve(gram, rhs);

  QuadraticFit fit;
  fit.c2 = d[2] / (scale * scale);
  fit.c1 = d[1] / scale - 2.0 * fit.c2 * mean;
  fit.c0 = d[0] - d[1] * mean / scale + fit.c2 * mean * mean;
  fit.n_obs = static_cast<int>(points.size());
  fit.x_min = xs.front();
  fit.x_max = xs[static_cast<std::size_t>(distinct) - 1];
  const double s_lo = fit.slope(fit.x_min);
  const double s_hi = fit.slope(fit.x_max);
  fit.slope_min = std::min(s_lo, s_hi);
  fit.slope_max = std::max(s_lo, s_hi);

  double y_mean = 0.0;
  for (const auto& p : points) y_mean += p.y;
  y_mean /= n;
  double ssr = 0.0;
  double sst = 0.0;
  for (const auto& p : points) {
    const double u = (p.x - mean) / scale;
    const double r = p.y - (d[0] + d[1] * u + d[2] * u * u);
    ssr += r * r;
    sst += (p.y - y_mean) * (p.y - y_mean);
  }
  fit.r_squared = r_squared(ssr, sst);
  return fit;
}

}  // namespace leontief
