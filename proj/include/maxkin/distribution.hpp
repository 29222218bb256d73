#pragma once

namespace maxkin {

enum class UnitSystem { SI, Reduced };

/// Boltzmann constant for the unit system: the exact SI value, or 1.
double boltzmann_constant(UnitSystem units);

/// Physical conditions. Kelvin and kilograms in SI mode, dimensionless
/// (k = 1) in Reduced mode. Construction validates positivity.
struct ThermalState {
  ThermalState(double temperature_in, double mass_in, UnitSystem units_in);

  double temperature;
  double mass;
  UnitSystem units;
};

/// The single distribution parameter c (inverse squared speed). The vector
/// density is (c/pi)^(3/2) * exp(-c*|V|^2); the normalization prefactor is
/// always derived from c, never stored.
struct MaxwellParams {
  explicit MaxwellParams(double c_in);

  double c;
};

struct VelocityVector {
  double vx = 0.0;
  double vy = 0.0;
  double vz = 0.0;

  double squared_speed() const { return vx * vx + vy * vy + vz * vz; }
};

/// c fixed by the mean-energy condition <m|V|^2/2> = (3/2) k T,
/// which gives c = m / (2 k T).
MaxwellParams params_from_state(const ThermalState& state);

/// Vector density (c/pi)^(3/2) * exp(-c*|v|^2), per velocity-volume.
/// Underflows to exact 0 for c*|v|^2 beyond the exp range.
double density(const VelocityVector& v, const MaxwellParams& p);

/// Marginal of one component: sqrt(c/pi) * exp(-c*u^2). The vector density
/// is the product of the three component marginals.
double component_density(double u, const MaxwellParams& p);

/// Speed (magnitude) density 4*pi*s^2 * (c/pi)^(3/2) * exp(-c*s^2),
/// the spherical-shell marginal of the vector density. Mode at 1/sqrt(c).
double speed_density(double s, const MaxwellParams& p);

/// Cumulative speed distribution, erf(sqrt(c)*s) - (2/sqrt(pi))*sqrt(c)*s*
/// exp(-c*s^2); equals the integral of speed_density over [0, s].
double speed_cdf(double s, const MaxwellParams& p);

/// <m|V|^2/2> in closed form: 3*mass/(4*c).
double mean_kinetic_energy(const MaxwellParams& p, double mass);

/// Residual of the factorization identity psi(a+b+c3) = phi(a)phi(b)phi(c3)
/// in log space, where phi is the component marginal and psi the vector
/// density, both as functions of the squared component(s). Zero up to
/// rounding for the exponential family; meaningful while c*(a+b+c3) <= 700.
double separability_residual(double a, double b, double c3,
                             const MaxwellParams& p);

}  // namespace maxkin
