// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/rng.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "leontief/error.hpp"

namespace leontief {

std::string_view to_string(DistributionFamily family) noexcept {
  return family == DistributionFamily::Pareto ? "pareto" : "weibull";
}

DistributionFamily distribution_family_from_string(std::string_view token) {
  if (token == "pareto" || token == "Pareto") return DistributionFamily::Pareto;
  if (token == "weibull" || token == "Weibull") return DistributionFamily::Weibull;
  throw SpecError("unknown distribution family '" + std::string(token) +
                  "' (expected pareto or weibull)");
}

void validate(const DistributionParams& params) {
  if (!(params.shape > 0.0) || !std::isfinite(params.shape)) {
    throw SpecError("distribution shape must be positive");
  }
  if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
    throw SpecError("distribution scale must be positive");
  }
}

double quantile(const DistributionParams& params, double u) {
  switch (params.family) {
    case DistributionFamily::Pareto:
      // F(x) = 1 - (scale/x)^shape for x >= scale
      return params.scale * std::pow(1.0 - u, -1.0 / params.shape);
    case DistributionFamily::Weibull:
      // F(x) = 1 - exp(-(x/scale)^shape)
      return params.scale * std::pow(-std::log1p(-u), 1.0 / params.shape);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double analytic_mean(const DistributionParams& params) {
  switch (params.family) {
    case DistributionFamily::Pareto:
      if (params.shape <= 1.0) return std::numeric_limits<double>::infinity();
      return params.shape * params.scale / (params.shape - 1.0);
    case DistributionFamily::Weibull:
      return params.scale * std::tgamma(1.0 + 1.0 / params.shape);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace leontief
