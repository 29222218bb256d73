#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace maxkin {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct IntegrateOptions {
  double tol = 1e-10;
  std::int64_t max_evaluations = 1'000'000;
};

/// Raised when the evaluation budget runs out before the requested tolerance
/// is met. Carries the best estimate accumulated so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best_estimate() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [lo, hi].
///
/// Either endpoint may be +-infinity; infinite ranges are mapped onto a
/// finite interval by a smooth substitution (x = t/(1-t^2) for the doubly
/// infinite case, x = a + t/(1-t) for half lines) before subdivision.
/// Subdivision is depth-first with the tolerance budget halved per split,
/// so identical inputs always produce bit-identical results.
///
/// Throws std::invalid_argument if f returns NaN, ConvergenceError if the
/// evaluation budget is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const IntegrateOptions& opts);
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol);

/// Closed form of the even Gaussian moment over the real line,
///   integral of x^(2n) exp(-c x^2) dx = sqrt(pi/c) * (2n-1)!! / (2c)^n.
/// n is capped at 100 (the double factorial overflows well beyond that).
double gaussian_moment(int n, double c);

/// Regularized upper incomplete gamma ratio Q(3/2, lambda), i.e. the mass of
/// the unit-scale energy density 2*sqrt(x/pi)*exp(-x) above lambda:
///   Q(3/2, lambda) = erfc(sqrt(lambda)) + 2*sqrt(lambda/pi)*exp(-lambda).
/// Both terms are positive, so there is no cancellation; underflows to 0 for
/// lambda beyond ~745.
double q_gamma_3half(double lambda);

}  // namespace maxkin
