#pragma once

#include "maxkin/distribution.hpp"

namespace maxkin {

/// Which tail model to evaluate. ExactQ is the Maxwell energy tail
/// Q(3/2, lambda); Exponential is the back-of-envelope exp(-lambda)
/// shorthand, kept for side-by-side comparison.
enum class TailModel { ExactQ, Exponential };

/// Dimensionless activation energy lambda = E_a / (k T).
struct ActivationSpec {
  double lambda = 0.0;

  static ActivationSpec from_lambda(double lambda);
  static ActivationSpec from_energy(double e_activation,
                                    const ThermalState& state);
};

struct SensitivityReport {
  double lambda_base = 0.0;
  double t_base = 0.0;
  double t_new = 0.0;
  double lambda_new = 0.0;  // lambda_base * t_base / t_new
  double fraction_base = 0.0;
  double fraction_new = 0.0;
  double ratio = 0.0;            // fraction_new / fraction_base
  double relative_change = 0.0;  // ratio - 1
};

/// Default mean time between collisions, about a nanosecond.
inline constexpr double kDefaultCollisionTime = 1e-9;

/// Fraction of molecules with kinetic energy >= E_a; strictly decreasing
/// in lambda. ExactQ evaluates Q(3/2, lambda), Exponential exp(-lambda).
double tail_fraction(const ActivationSpec& a,
                     TailModel model = TailModel::ExactQ);

/// Inverse of tail_fraction on (0, 1]. The ExactQ branch bisects the
/// monotone tail on [0, 800]; Exponential inverts in closed form.
/// Targets below 1e-300 are rejected rather than silently underflowing.
double solve_lambda(double target_fraction, TailModel model = TailModel::ExactQ);

/// Order-of-magnitude reaction time: one reaction opportunity per collision
/// time per qualifying encounter, i.e. collision_time / fraction.
double reaction_time(double fraction, double collision_time);

/// How the qualifying fraction responds when the temperature moves from
/// t_base to t_new at fixed activation energy (lambda scales by
/// t_base/t_new).
SensitivityReport temperature_sensitivity(double lambda_base, double t_base,
                                          double t_new,
                                          TailModel model = TailModel::ExactQ);

/// The headline scenario: solve lambda from a baseline fraction at t_base,
/// then evaluate the sensitivity to t_new.
SensitivityReport fever_report(double t_base, double t_new,
                               double baseline_fraction,
                               TailModel model = TailModel::ExactQ);

}  // namespace maxkin
