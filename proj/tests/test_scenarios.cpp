// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "leontief/aggregate.hpp"
#include "leontief/error.hpp"
#include "leontief/rng.hpp"
#include "leontief/scenarios.hpp"
#include "support.hpp"

using namespace leontief;

namespace {

double sum_y(const Scenario& sc) {
  double y = 0.0;
  for (const auto& est : sc.establishments) y += eval_leontief(est).y;
  return y;
}

double sum_l(const Scenario& sc) {
  double l = 0.0;
  for (const auto& est : sc.establishments) l += est.l;
  return l;
}

}  // namespace

TEST_CASE("kind I: identical coefficients, labor binding, Y = L") {
  const auto sc = generate(ScenarioSpec::defaults(ScenarioKind::I));
  REQUIRE(sc.establishments.size() == 50);
  const auto& first = sc.establishments.front();
  for (const auto& est : sc.establishments) {
    CHECK(est.a == 1.0);
    CHECK(est.a == first.a);
    CHECK(est.b == first.b);
    CHECK(classify_regime(est) == Regime::LaborLimited);
    // At least the 5% capital margin.
    CHECK(est.capital_capacity() >= 1.05 * est.labor_capacity() * (1.0 - 1e-12));
  }
  CHECK(sc.establishments[0].intensity() != sc.establishments[49].intensity());
  CHECK(sum_y(sc) == doctest::Approx(4879.44).epsilon(1e-12));
  CHECK(sum_y(sc) == doctest::Approx(sum_l(sc)).epsilon(1e-14));
}

TEST_CASE("kind II: identical factor intensity") {
  auto spec = ScenarioSpec::defaults(ScenarioKind::II);
  for (int n : {2, 50}) {
    spec.n = n;
    spec.capital_target = 0.65 * n;
    spec.labor_target = 1.0 * n;
    const auto sc = generate(spec);
    for (const auto& est : sc.establishments) {
      CHECK(est.intensity() == doctest::Approx(0.65).epsilon(1e-12));
    }
  }
  // The default calibration passes through the worked establishment 14.
  const auto sc = generate(ScenarioSpec::defaults(ScenarioKind::II));
  const auto& e14 = sc.establishments[13];
  CHECK(e14.id == 14);
  CHECK(1.0 / e14.a == doctest::Approx(1.09562).epsilon(1e-12));
  CHECK(1.0 / e14.b == doctest::Approx(1.68849).epsilon(1e-12));
  CHECK(e14.k == doctest::Approx(65.0).epsilon(1e-12));
  CHECK(e14.l == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(sc.establishments[0].a != sc.establishments[1].a);
}

TEST_CASE("kind III: single switch at the break index in output order") {
  for (int m : {2, 5, 18, 30, 49}) {
    auto spec = ScenarioSpec::defaults(ScenarioKind::III);
    spec.break_index = m;
    const auto ordered = order_by_output(generate(spec));
    for (std::size_t i = 0; i < ordered.establishments.size(); ++i) {
      const Regime expected =
          static_cast<int>(i) + 1 < m ? Regime::LaborLimited : Regime::CapitalLimited;
      CHECK(classify_regime(ordered.establishments[i]) == expected);
    }
  }
}

TEST_CASE("kind III: coefficients decrease smoothly") {
  const auto sc = generate(ScenarioSpec::defaults(ScenarioKind::III));
  for (std::size_t i = 1; i < sc.establishments.size(); ++i) {
    CHECK(sc.establishments[i].a < sc.establishments[i - 1].a);
    CHECK(sc.establishments[i].b < sc.establishments[i - 1].b);
  }
}

TEST_CASE("kind IV: same intensities as III, wider coefficient spread") {
  const auto iii = generate(ScenarioSpec::defaults(ScenarioKind::III));
  const auto iv = generate(ScenarioSpec::defaults(ScenarioKind::IV));
  REQUIRE(iii.establishments.size() == iv.establishments.size());
  for (std::size_t i = 0; i < iii.establishments.size(); ++i) {
    CHECK(iv.establishments[i].k == iii.establishments[i].k);
    CHECK(iv.establishments[i].l == iii.establishments[i].l);
  }
  const auto spread = [](const Scenario& sc, auto coef) {
    return coef(sc.establishments.front()) / coef(sc.establishments.back());
  };
  const auto a_of = [](const Establishment& e) { return e.a; };
  const auto b_of = [](const Establishment& e) { return e.b; };
  CHECK(spread(iv, a_of) > spread(iii, a_of));
  CHECK(spread(iv, b_of) > spread(iii, b_of));
}

TEST_CASE("table scenarios share (K, L) for I, III, IV") {
  const auto k_i = aggregate(generate(ScenarioSpec::defaults(ScenarioKind::I)));
  const auto k_iii = aggregate(generate(ScenarioSpec::defaults(ScenarioKind::III)));
  const auto k_iv = aggregate(generate(ScenarioSpec::defaults(ScenarioKind::IV)));
  CHECK(k_iii.K == doctest::Approx(k_i.K).epsilon(1e-13));
  CHECK(k_iii.L == doctest::Approx(k_i.L).epsilon(1e-13));
  CHECK(k_iv.K == doctest::Approx(k_i.K).epsilon(1e-13));
  CHECK(k_i.K == doctest::Approx(3257.98).epsilon(1e-12));
}

TEST_CASE("spec validation") {
  auto spec = ScenarioSpec::defaults(ScenarioKind::III);
  spec.n = 1;
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::III);
  spec.break_index = 1;
  CHECK_THROWS_AS(generate(spec), SpecError);
  spec.break_index = 50;
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::I);
  spec.break_index = 10;
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::II);
  spec.distribution = DistributionParams{};
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::III);
  spec.intensity_growth = 1.2;  // faster than b/a can follow
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::IV);
  spec.dispersion = 1.0;
  CHECK_THROWS_AS(generate(spec), SpecError);

  spec = ScenarioSpec::defaults(ScenarioKind::Distribution);
  spec.distribution->shape = 0.0;
  CHECK_THROWS_AS(generate(spec), SpecError);
  spec.distribution->shape = 2.0;
  spec.distribution->scale = -1.0;
  CHECK_THROWS_AS(generate_distribution(spec), SpecError);

  CHECK_THROWS_AS(generate_distribution(ScenarioSpec::defaults(ScenarioKind::I)), SpecError);
  CHECK_THROWS_AS(scenario_kind_from_string("V"), SpecError);
}

TEST_CASE("generation is a pure function of the spec") {
  for (auto kind : {ScenarioKind::I, ScenarioKind::II, ScenarioKind::III, ScenarioKind::IV,
                    ScenarioKind::Distribution}) {
    const auto spec = ScenarioSpec::defaults(kind);
    CHECK(generate(spec).establishments == generate(spec).establishments);
  }
}

TEST_CASE("inverse CDF quantiles") {
  const DistributionParams pareto{DistributionFamily::Pareto, 2.0, 1.5};
  // Median of Pareto(s, m) is m * 2^(1/s).
  CHECK(quantile(pareto, 0.5) == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-14));
  const DistributionParams weibull{DistributionFamily::Weibull, 2.0, 3.0};
  CHECK(quantile(weibull, 0.5) == doctest::Approx(3.0 * std::sqrt(std::log(2.0))).epsilon(1e-14));
  CHECK(analytic_mean(pareto) == doctest::Approx(3.0));
  CHECK(analytic_mean(DistributionParams{DistributionFamily::Weibull, 1.0, 1.0}) ==
        doctest::Approx(1.0));
  CHECK(std::isinf(analytic_mean(DistributionParams{DistributionFamily::Pareto, 1.0, 1.0})));

  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("mt19937_64 stream is the standard one") {
  // The 10000th output of the default-seeded engine is fixed by the standard.
  Rng rng(5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next_u64();
  CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("distribution generator reproduces the family mean") {
  struct Case {
    DistributionFamily family;
    double shape;
    double mean;
  };
  for (const Case& c : {Case{DistributionFamily::Pareto, 2.0, 2.0},
                        Case{DistributionFamily::Weibull, 1.0, 1.0}}) {
    auto spec = ScenarioSpec::defaults(ScenarioKind::Distribution);
    spec.n = 1000;
    spec.seed = 7;
    spec.distribution = DistributionParams{c.family, c.shape, 1.0};
    REQUIRE(analytic_mean(*spec.distribution) == doctest::Approx(c.mean));
    const auto sc = generate_distribution(spec);
    REQUIRE(sc.establishments.size() == 1000);
    double inv_a = 0.0;
    for (const auto& est : sc.establishments) inv_a += 1.0 / est.a;
    inv_a /= 1000.0;
    INFO("family ", to_string(c.family), " empirical mean ", inv_a);
    CHECK(std::abs(inv_a - c.mean) <= 0.05 * c.mean);
    CHECK(generate_distribution(spec).establishments == sc.establishments);
  }
}

TEST_CASE("different seeds give different draws") {
  auto spec = ScenarioSpec::defaults(ScenarioKind::Distribution);
  spec.seed = 1;
  const auto x = generate(spec);
  spec.seed = 2;
  CHECK(generate(spec).establishments != x.establishments);
}

TEST_CASE("order_by_output sorts ascending with id tie-break") {
  Scenario sc;
  sc.label = "toy";
  sc.establishments = {{1, 1.0, 1.0, 10.0, 3.0}, {2, 1.0, 1.0, 10.0, 1.0},
                       {3, 1.0, 1.0, 10.0, 2.0}};
  const auto ordered = order_by_output(sc);
  CHECK(ordered.establishments[0].id == 2);
  CHECK(ordered.establishments[1].id == 3);
  CHECK(ordered.establishments[2].id == 1);
  CHECK(sc.establishments[0].id == 1);  // input untouched

  Scenario tie;
  tie.establishments = {{5, 1.0, 1.0, 4.0, 4.0}, {2, 1.0, 1.0, 4.0, 4.0}};
  const auto t = order_by_output(tie);
  CHECK(t.establishments[0].id == 2);
  CHECK(t.establishments[1].id == 5);
}

TEST_CASE("property: order_by_output is idempotent and sorted") {
  leontief::testing::Gen gen(201);
  for (int c = 0; c < 100; ++c) {
    Scenario sc;
    const int n = gen.integer(1, 40);
    for (int i = 0; i < n; ++i) {
      auto est = gen.establishment(i + 1);
      // Force frequent ties.
      if (gen.integer(0, 3) == 0) est = {i + 1, 1.0, 1.0, 5.0, 5.0};
      sc.establishments.push_back(est);
    }
    const auto once = order_by_output(sc);
    CHECK(order_by_output(once).establishments == once.establishments);
    CHECK(is_output_ordered(once));
    REQUIRE(once.establishments.size() == sc.establishments.size());
  }
}
