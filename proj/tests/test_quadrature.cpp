#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "maxkin/constants.hpp"
#include "maxkin/quadrature.hpp"

using maxkin::ConvergenceError;
using maxkin::IntegrateOptions;
using maxkin::integrate;
using maxkin::gaussian_moment;
using maxkin::q_gamma_3half;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrtPi = 1.7724538509055160273;       // mpmath, 20 digits
constexpr double kGammaThreeHalves = 0.88622692545275801365;

// The unit-scale kinetic energy density: the integrand behind the tail mass.
double energy_density(double x) {
  return 2.0 * std::sqrt(x / maxkin::constants::pi) * std::exp(-x);
}
}  // namespace

TEST_CASE("constant integrand over the unit interval") {
  auto r = integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.evaluations >= 15);
}

TEST_CASE("gauss integral over the real line") {
  auto r = integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf,
                     1e-12);
  CHECK(std::fabs(r.value - kSqrtPi) < 1e-12);
}

TEST_CASE("cylindrical shell integral gives pi") {
  auto r = integrate(
      [](double x) {
        return 2.0 * maxkin::constants::pi * x * std::exp(-x * x);
      },
      0.0, kInf, 1e-12);
  CHECK(std::fabs(r.value - maxkin::constants::pi) < 1e-11);
}

TEST_CASE("finite, reversed and degenerate bounds") {
  auto fwd = integrate([](double x) { return x * x; }, 0.0, 2.0, 1e-12);
  CHECK(fwd.value == doctest::Approx(8.0 / 3.0).epsilon(1e-13));

  auto rev = integrate([](double x) { return x * x; }, 2.0, 0.0, 1e-12);
  CHECK(rev.value == doctest::Approx(-8.0 / 3.0).epsilon(1e-13));

  auto zero = integrate([](double x) { return x; }, 1.0, 1.0, 1e-12);
  CHECK(zero.value == 0.0);
  CHECK(zero.evaluations == 1);
}

TEST_CASE("semi-infinite from the left") {
  // integral of e^x over (-inf, 0] = 1
  auto r = integrate([](double x) { return std::exp(x); }, -kInf, 0.0, 1e-12);
  CHECK(std::fabs(r.value - 1.0) < 1e-11);
}

TEST_CASE("linearity of the integral") {
  auto f = [](double x) { return std::exp(-x * x); };
  auto g = [](double x) { return std::exp(-2.0 * x * x); };
  const double alpha = 3.25;
  const double beta = -1.5;
  auto fi = integrate(f, -kInf, kInf, 1e-12);
  auto gi = integrate(g, -kInf, kInf, 1e-12);
  auto combo = integrate(
      [&](double x) { return alpha * f(x) + beta * g(x); }, -kInf, kInf,
      1e-12);
  CHECK(std::fabs(combo.value - (alpha * fi.value + beta * gi.value)) < 1e-10);
}

TEST_CASE("deterministic: repeated calls are bit-identical") {
  auto run = [] {
    return integrate([](double x) { return std::exp(-x * x) * std::cos(x); },
                     -kInf, kInf, 1e-12);
  };
  auto a = run();
  auto b = run();
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.abs_error_estimate, &b.abs_error_estimate,
                    sizeof(double)) == 0);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("NaN from the integrand is an input error") {
  CHECK_THROWS_AS(
      integrate([](double x) { return std::sqrt(x); }, -1.0, 1.0, 1e-10),
      std::invalid_argument);
}

TEST_CASE("budget exhaustion raises with the best estimate") {
  IntegrateOptions opts;
  opts.tol = 1e-30;  // unreachable
  opts.max_evaluations = 2000;
  try {
    integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf, opts);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::fabs(e.best_estimate().value - kSqrtPi) < 1e-8);
    CHECK(e.best_estimate().evaluations <= 2000);
  }
}

TEST_CASE("non-positive tolerance is rejected") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("gaussian moments: frozen values") {
  CHECK(std::fabs(gaussian_moment(0, 1.0) - kSqrtPi) < 1e-15);
  // n=1, c=1: sqrt(pi)/2
  CHECK(gaussian_moment(1, 1.0) ==
        doctest::Approx(0.88622692545275801365).epsilon(1e-14));
  // n=1, c=0.5: sqrt(2 pi)
  CHECK(gaussian_moment(1, 0.5) ==
        doctest::Approx(2.5066282746310005024).epsilon(1e-14));
}

TEST_CASE("gaussian moments match direct quadrature") {
  for (int n : {0, 1, 2, 3}) {
    for (double c : {0.25, 1.0, 3.0}) {
      const double closed = gaussian_moment(n, c);
      auto r = integrate(
          [n, c](double x) { return std::pow(x, 2 * n) * std::exp(-c * x * x); },
          -kInf, kInf, 1e-12 * closed);
      CHECK(std::fabs(r.value - closed) <= 1e-10 * closed);
    }
  }
}

TEST_CASE("gaussian moment recurrence") {
  for (double c : {0.1, 0.5, 2.0}) {
    for (int n = 0; n < 20; ++n) {
      const double lhs = gaussian_moment(n + 1, c);
      const double rhs = (2.0 * n + 1.0) / (2.0 * c) * gaussian_moment(n, c);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(rhs));
    }
  }
}

TEST_CASE("gaussian moment domain errors") {
  CHECK_THROWS_AS(gaussian_moment(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_moment(101, 1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_moment(0, 0.0), std::domain_error);
  CHECK(std::isfinite(gaussian_moment(100, 1.0)));
}

TEST_CASE("q_gamma_3half: frozen values") {
  CHECK(q_gamma_3half(0.0) == 1.0);
  CHECK(q_gamma_3half(1.0) ==
        doctest::Approx(0.572406704470879834).epsilon(1e-13));
  // lambda = ln(1e12)
  CHECK(q_gamma_3half(27.631021115928547) ==
        doctest::Approx(6.0368357228537730e-12).epsilon(1e-12));
}

TEST_CASE("q_gamma_3half against the quadrature oracle") {
  for (double lambda : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 27.631, 40.0}) {
    const double q = q_gamma_3half(lambda);
    auto tail = integrate(energy_density, lambda, kInf, 1e-13 * q);
    CHECK(std::fabs(tail.value - q) <= 1e-11 * q);
  }
}

TEST_CASE("q_gamma_3half is strictly decreasing") {
  double prev = q_gamma_3half(0.0);
  for (double lambda = 0.05; lambda < 60.0; lambda += 0.35) {
    const double cur = q_gamma_3half(lambda);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("upper and lower tails add up to gamma(3/2)") {
  for (double lambda : {0.1, 1.0, 3.0, 8.0}) {
    auto lower = integrate(
        [](double x) { return std::sqrt(x) * std::exp(-x); }, 0.0, lambda,
        1e-13);
    const double total = q_gamma_3half(lambda) * kGammaThreeHalves +
                         lower.value;
    CHECK(std::fabs(total - kGammaThreeHalves) < 1e-10);
  }
}

TEST_CASE("q_gamma_3half domain and underflow") {
  CHECK_THROWS_AS(q_gamma_3half(-1e-9), std::domain_error);
  CHECK(q_gamma_3half(800.0) == 0.0);  // graceful underflow far in the tail
}
