#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxkin/constants.hpp"
#include "maxkin/distribution.hpp"
#include "maxkin/quadrature.hpp"
#include "maxkin/sampler.hpp"

namespace maxkin::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrtPi = 1.7724538509055160273;

CheckResult check_gauss(double tol) {
  CheckResult result{"gauss_integral", false, 0.0, tol, ""};
  try {
    auto r = integrate([](double x) { return std::exp(-x * x); }, -kInf,
                       kInf, tol);
    result.measured = std::fabs(r.value - kSqrtPi);
  } catch (const ConvergenceError& e) {
    result.measured = std::fabs(e.best_estimate().value - kSqrtPi);
    result.detail = "integration budget exhausted";
    return result;
  }
  result.passed = result.measured <= tol;
  return result;
}

double normalization_3d(const MaxwellParams& p, double tol) {
  auto inner = [&](double x, double y) {
    return integrate(
               [&](double z) { return density({x, y, z}, p); }, -kInf, kInf,
               tol * 1e-2)
        .value;
  };
  auto middle = [&](double x) {
    return integrate([&](double y) { return inner(x, y); }, -kInf, kInf,
                     tol * 1e-1)
        .value;
  };
  return integrate(middle, -kInf, kInf, tol).value;
}

CheckResult check_normalization(double tol) {
  CheckResult result{"normalization", false, 0.0, tol, ""};
  try {
    for (double c : {0.1, 0.5, 1.0, 10.0}) {
      const double total = normalization_3d(MaxwellParams(c), tol);
      result.measured = std::max(result.measured, std::fabs(total - 1.0));
    }
  } catch (const ConvergenceError&) {
    result.measured = std::numeric_limits<double>::infinity();
    result.detail = "integration budget exhausted";
    return result;
  }
  result.passed = result.measured <= tol;
  return result;
}

CheckResult check_mean_energy(double tol) {
  CheckResult result{"mean_energy", false, 0.0, tol, ""};
  struct Case {
    ThermalState state;
  };
  const Case cases[] = {
      {ThermalState(1.0, 1.0, UnitSystem::Reduced)},
      {ThermalState(310.0, constants::amu_kg, UnitSystem::SI)},
  };
  try {
    for (const Case& it : cases) {
      const MaxwellParams p = params_from_state(it.state);
      const double expected = 1.5 * boltzmann_constant(it.state.units) *
                              it.state.temperature;
      const double closed = mean_kinetic_energy(p, it.state.mass);
      auto numeric = integrate(
          [&](double s) {
            return 0.5 * it.state.mass * s * s * speed_density(s, p);
          },
          0.0, kInf, tol * expected * 1e-1);
      result.measured = std::max(
          {result.measured, std::fabs(closed - expected) / expected,
           std::fabs(numeric.value - expected) / expected});
    }
  } catch (const ConvergenceError&) {
    result.measured = std::numeric_limits<double>::infinity();
    result.detail = "integration budget exhausted";
    return result;
  }
  result.passed = result.measured <= tol;
  return result;
}

CheckResult check_separability(double tol, std::uint64_t seed) {
  CheckResult result{"separability", false, 0.0, tol, ""};
  Xoshiro256PlusPlus rng({seed, 101});
  for (int i = 0; i < 1000; ++i) {
    const double c = 0.01 + 9.99 * rng.next_unit();
    double a = 100.0 * rng.next_unit();
    double b = 100.0 * rng.next_unit();
    double c3 = 100.0 * rng.next_unit();
    if (c * (a + b + c3) > 700.0) {
      const double scale = 650.0 / (c * (a + b + c3));
      a *= scale;
      b *= scale;
      c3 *= scale;
    }
    result.measured = std::max(
        result.measured, separability_residual(a, b, c3, MaxwellParams(c)));
  }
  result.passed = result.measured <= tol;
  return result;
}

CheckResult check_ks(const VerifyTolerances& tols) {
  CheckResult result{"ks_speed_fit", false, 0.0, tols.ks_critical, ""};
  const auto n = static_cast<std::size_t>(tols.ks_samples);
  const SampleBatch batch =
      sample_batch(n, MaxwellParams(0.5), {tols.seed, 0});
  // scale-free statistic: D * sqrt(n) against the critical coefficient
  result.measured = ks_statistic(batch) * std::sqrt(static_cast<double>(n));
  result.passed = result.measured < tols.ks_critical;
  return result;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyTolerances& tols) {
  std::vector<CheckResult> checks;
  checks.push_back(check_gauss(tols.gauss));
  checks.push_back(check_normalization(tols.normalization));
  checks.push_back(check_mean_energy(tols.mean_energy));
  checks.push_back(check_separability(tols.separability, tols.seed));
  checks.push_back(check_ks(tols));
  return checks;
}

}  // namespace maxkin::cli
