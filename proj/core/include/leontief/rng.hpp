// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace leontief {

/// Seedable 64-bit stream with a portable uniform mapping.
///
/// std::mt19937_64's output sequence is fixed by the standard; the uniform
/// conversion is done here rather than through std::uniform_real_distribution,
/// whose algorithm is implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1): the top 53 bits, centered.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

enum class DistributionFamily { Pareto, Weibull };

std::string_view to_string(DistributionFamily family) noexcept;
DistributionFamily distribution_family_from_string(std::string_view token);

struct DistributionParams {
  DistributionFamily family = DistributionFamily::Pareto;
  double shape = 2.0;
  double scale = 1.0;

  friend bool operator==(const DistributionParams&, const DistributionParams&) = default;
};

/// Throws SpecError unless shape > 0 and scale > 0.
void validate(const DistributionParams& params);

/// Inverse CDF of the configured family at u in (0, 1).
double quantile(const DistributionParams& params, double u);

/// Closed-form mean; +inf for Pareto with shape <= 1.
double analytic_mean(const DistributionParams& params);

inline double sample(const DistributionParams& params, Rng& rng) {
  return quantile(params, rng.uniform_open());
}

}  // namespace leontief
