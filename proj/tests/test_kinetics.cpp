#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "maxkin/constants.hpp"
#include "maxkin/kinetics.hpp"
#include "maxkin/quadrature.hpp"
#include "maxkin/sampler.hpp"

using namespace maxkin;

TEST_CASE("activation spec construction") {
  CHECK(ActivationSpec::from_lambda(2.5).lambda == 2.5);
  CHECK_THROWS_AS(ActivationSpec::from_lambda(-0.1), std::domain_error);

  // lambda = E_a / (k T)
  const ThermalState reduced(2.0, 1.0, UnitSystem::Reduced);
  CHECK(ActivationSpec::from_energy(3.0, reduced).lambda == 1.5);

  const ThermalState si(310.0, constants::amu_kg, UnitSystem::SI);
  const double ea = 27.631 * constants::k_boltzmann_si * 310.0;
  CHECK(ActivationSpec::from_energy(ea, si).lambda ==
        doctest::Approx(27.631).epsilon(1e-14));
  CHECK_THROWS_AS(ActivationSpec::from_energy(-1.0, si), std::domain_error);
}

TEST_CASE("tail fraction: frozen values and models") {
  CHECK(tail_fraction({0.0}) == 1.0);
  CHECK(tail_fraction({0.0}, TailModel::Exponential) == 1.0);
  CHECK(tail_fraction({1.0}) ==
        doctest::Approx(0.572406704470879834).epsilon(1e-13));
  CHECK(tail_fraction({27.631021115928547}) ==
        doctest::Approx(6.0368357228537730e-12).epsilon(1e-12));
  CHECK(tail_fraction({5.0}, TailModel::Exponential) ==
        doctest::Approx(std::exp(-5.0)).epsilon(1e-15));
  CHECK_THROWS_AS(tail_fraction({-1.0}), std::domain_error);
}

TEST_CASE("solve_lambda: frozen values") {
  CHECK(solve_lambda(1.0) == 0.0);
  CHECK(solve_lambda(1.0, TailModel::Exponential) == 0.0);

  // exponential model inverts in closed form: ln(1e12)
  CHECK(std::fabs(solve_lambda(1e-12, TailModel::Exponential) -
                  27.631021115928547) < 1e-12);

  // exact tail, bisected; mpmath root of Q(3/2, x) = 1e-12
  CHECK(solve_lambda(1e-12) ==
        doctest::Approx(29.459877841601077).epsilon(1e-10));
  CHECK(solve_lambda(0.5) ==
        doctest::Approx(1.1829869421876691).epsilon(1e-10));

  CHECK_THROWS_AS(solve_lambda(0.0), std::domain_error);
  CHECK_THROWS_AS(solve_lambda(1.5), std::domain_error);
  CHECK_THROWS_AS(solve_lambda(1e-305), std::domain_error);
}

TEST_CASE("tail_fraction after solve_lambda is the identity") {
  for (TailModel model : {TailModel::ExactQ, TailModel::Exponential}) {
    for (double exponent = -15.0; exponent <= 0.0; exponent += 0.5) {
      const double target = std::pow(10.0, exponent);
      const double lambda = solve_lambda(target, model);
      CHECK(std::fabs(tail_fraction({lambda}, model) - target) <=
            1e-9 * target);
    }
  }
}

TEST_CASE("reaction time is collision time over fraction, exact") {
  CHECK(reaction_time(1e-9, 1e-9) == 1.0);
  CHECK(reaction_time(1e-12, 1e-9) == 1e-9 / 1e-12);
  CHECK(std::fabs(reaction_time(1e-12, 1e-9) - 1000.0) <= 1e-12 * 1000.0);
  CHECK(reaction_time(1.0, 3.5e-9) == 3.5e-9);
  CHECK_THROWS_AS(reaction_time(0.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(reaction_time(-0.5, 1e-9), std::domain_error);
  CHECK_THROWS_AS(reaction_time(0.5, 0.0), std::domain_error);
}

TEST_CASE("temperature sensitivity: structure and frozen values") {
  const SensitivityReport same = temperature_sensitivity(5.0, 310.0, 310.0);
  CHECK(same.ratio == 1.0);
  CHECK(same.relative_change == 0.0);

  const SensitivityReport r = temperature_sensitivity(27.631, 310.0, 311.0);
  CHECK(r.lambda_new == 27.631 * (310.0 / 311.0));
  CHECK(r.ratio == doctest::Approx(1.0912139324463618).epsilon(1e-12));
  CHECK(r.relative_change == doctest::Approx(r.ratio - 1.0).epsilon(1e-15));

  const SensitivityReport e =
      temperature_sensitivity(27.631, 310.0, 311.0, TailModel::Exponential);
  CHECK(e.ratio == doctest::Approx(1.0929119623625219).epsilon(1e-12));

  CHECK_THROWS_AS(temperature_sensitivity(0.0, 310.0, 311.0),
                  std::domain_error);
  CHECK_THROWS_AS(temperature_sensitivity(1.0, -310.0, 311.0),
                  std::domain_error);
}

TEST_CASE("warming grows the tail, cooling shrinks it") {
  for (double lambda : {2.0, 5.0, 12.0, 30.0}) {
    CHECK(temperature_sensitivity(lambda, 300.0, 301.0).ratio > 1.0);
    CHECK(temperature_sensitivity(lambda, 301.0, 300.0).ratio < 1.0);
  }
}

TEST_CASE("log-sensitivity is dominated by the exponential term") {
  for (double lambda : {10.0, 20.0, 30.0, 50.0}) {
    for (auto [t0, t1] : {std::pair{310.0, 311.0}, std::pair{300.0, 330.0},
                          std::pair{310.0, 290.0}}) {
      const SensitivityReport r = temperature_sensitivity(lambda, t0, t1);
      const double linear = lambda * (1.0 - t0 / t1);
      CHECK(std::fabs(std::log(r.ratio) - linear) <=
            0.1 * lambda * std::fabs(1.0 - t0 / t1));
    }
  }
}

TEST_CASE("fever report: frozen headline values") {
  // 310 K -> 311 K at baseline 1e-12, exact tail (mpmath oracle)
  const SensitivityReport exact = fever_report(310.0, 311.0, 1e-12);
  CHECK(exact.lambda_base ==
        doctest::Approx(29.459877841601077).epsilon(1e-10));
  CHECK(exact.relative_change ==
        doctest::Approx(0.097646269116198614).epsilon(1e-8));

  // exponential shorthand lands at ~+9.3%
  const SensitivityReport expo =
      fever_report(310.0, 311.0, 1e-12, TailModel::Exponential);
  CHECK(expo.lambda_base ==
        doctest::Approx(27.631021115928547).epsilon(1e-12));
  CHECK(expo.relative_change ==
        doctest::Approx(0.092912036567832784).epsilon(1e-10));

  // no temperature change, no effect
  const SensitivityReport flat = fever_report(310.0, 310.0, 1e-12);
  CHECK(flat.relative_change == 0.0);

  // cooling is asymmetric
  const SensitivityReport cooling = fever_report(311.0, 310.0, 1e-12);
  CHECK(cooling.relative_change ==
        doctest::Approx(-0.089237884803440590).epsilon(1e-8));

  // degenerate baseline: everything already qualifies
  const SensitivityReport whole = fever_report(310.0, 311.0, 1.0);
  CHECK(whole.ratio == 1.0);
  CHECK(whole.lambda_base == 0.0);
}

TEST_CASE("fever ratios stay within the headline band") {
  for (TailModel model : {TailModel::ExactQ, TailModel::Exponential}) {
    const SensitivityReport r = fever_report(310.0, 311.0, 1e-12, model);
    CHECK(r.relative_change > 0.08);
    CHECK(r.relative_change < 0.11);
  }
}

TEST_CASE("monte carlo agrees with the analytic tail") {
  const double c = 0.5;  // reduced units, m = 1, T = 1
  const SampleBatch batch =
      sample_batch(10'000'000, MaxwellParams(c), {6021023, 0});
  for (double lambda : {0.5, 2.0, 8.0}) {
    const double q = tail_fraction({lambda});
    const double se = std::sqrt(q * (1.0 - q) / 1e7);
    const double fraction = empirical_tail_fraction(batch, lambda, 1.0);
    CHECK(std::fabs(fraction - q) < 4.0 * se);
  }
}
