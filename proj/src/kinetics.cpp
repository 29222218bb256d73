#include "maxkin/kinetics.hpp"

#include <cmath>
#include <stdexcept>

#include "maxkin/quadrature.hpp"

namespace maxkin {

ActivationSpec ActivationSpec::from_lambda(double lambda) {
  if (std::isnan(lambda) || lambda < 0.0) {
    throw std::domain_error("lambda must be non-negative");
  }
  return {lambda};
}

ActivationSpec ActivationSpec::from_energy(double e_activation,
                                           const ThermalState& state) {
  if (std::isnan(e_activation) || e_activation < 0.0) {
    throw std::domain_error("activation energy must be non-negative");
  }
  const double k = boltzmann_constant(state.units);
  return {e_activation / (k * state.temperature)};
}

double tail_fraction(const ActivationSpec& a, TailModel model) {
  if (std::isnan(a.lambda) || a.lambda < 0.0) {
    throw std::domain_error("lambda must be non-negative");
  }
  return model == TailModel::ExactQ ? q_gamma_3half(a.lambda)
                                    : std::exp(-a.lambda);
}

double solve_lambda(double target_fraction, TailModel model) {
  if (std::isnan(target_fraction) || target_fraction <= 0.0 ||
      target_fraction > 1.0) {
    throw std::domain_error("target fraction must lie in (0, 1]");
  }
  if (target_fraction < 1e-300) {
    throw std::domain_error("target fraction below 1e-300 underflows");
  }
  if (model == TailModel::Exponential) {
    return target_fraction == 1.0 ? 0.0 : -std::log(target_fraction);
  }
  if (target_fraction == 1.0) {
    return 0.0;
  }
  double lo = 0.0;
  double hi = 800.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      break;  // interval below double resolution
    }
    if (q_gamma_3half(mid) > target_fraction) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double reaction_time(double fraction, double collision_time) {
  if (std::isnan(fraction) || fraction <= 0.0 || fraction > 1.0) {
    throw std::domain_error("fraction must lie in (0, 1]");
  }
  if (!(collision_time > 0.0) || !std::isfinite(collision_time)) {
    throw std::domain_error("collision time must be positive and finite");
  }
  return collision_time / fraction;
}

SensitivityReport temperature_sensitivity(double lambda_base, double t_base,
                                          double t_new, TailModel model) {
  if (!(lambda_base > 0.0) || !std::isfinite(lambda_base)) {
    throw std::domain_error("lambda must be positive and finite");
  }
  if (!(t_base > 0.0) || !(t_new > 0.0) || !std::isfinite(t_base) ||
      !std::isfinite(t_new)) {
    throw std::domain_error("temperatures must be positive and finite");
  }
  SensitivityReport report;
  report.lambda_base = lambda_base;
  report.t_base = t_base;
  report.t_new = t_new;
  report.lambda_new = lambda_base * (t_base / t_new);
  report.fraction_base = tail_fraction({lambda_base}, model);
  report.fraction_new = tail_fraction({report.lambda_new}, model);
  report.ratio = report.fraction_new / report.fraction_base;
  report.relative_change = report.ratio - 1.0;
  return report;
}

SensitivityReport fever_report(double t_base, double t_new,
                               double baseline_fraction, TailModel model) {
  const double lambda_base = solve_lambda(baseline_fraction, model);
  if (lambda_base > 0.0) {
    return temperature_sensitivity(lambda_base, t_base, t_new, model);
  }
  // Baseline fraction 1: every particle already qualifies at any temperature.
  if (!(t_base > 0.0) || !(t_new > 0.0) || !std::isfinite(t_base) ||
      !std::isfinite(t_new)) {
    throw std::domain_error("temperatures must be positive and finite");
  }
  return {0.0, t_base, t_new, 0.0, 1.0, 1.0, 1.0, 0.0};
}

}  // namespace maxkin
