#include "maxkin/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxkin/constants.hpp"

namespace maxkin {

double boltzmann_constant(UnitSystem units) {
  return units == UnitSystem::SI ? constants::k_boltzmann_si : 1.0;
}

ThermalState::ThermalState(double temperature_in, double mass_in,
                           UnitSystem units_in)
    : temperature(temperature_in), mass(mass_in), units(units_in) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw std::domain_error("temperature must be positive and finite");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("mass must be positive and finite");
  }
}

MaxwellParams::MaxwellParams(double c_in) : c(c_in) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::domain_error("distribution parameter c must be positive");
  }
}

MaxwellParams params_from_state(const ThermalState& state) {
  const double k = boltzmann_constant(state.units);
  return MaxwellParams(state.mass / (2.0 * k * state.temperature));
}

double density(const VelocityVector& v, const MaxwellParams& p) {
  return std::pow(p.c / constants::pi, 1.5) *
         std::exp(-p.c * v.squared_speed());
}

double component_density(double u, const MaxwellParams& p) {
  return std::sqrt(p.c / constants::pi) * std::exp(-p.c * u * u);
}

double speed_density(double s, const MaxwellParams& p) {
  if (std::isnan(s) || s < 0.0) {
    throw std::domain_error("speed must be non-negative");
  }
  const double s2 = s * s;
  const double decay = std::exp(-p.c * s2);
  if (decay == 0.0) {
    return 0.0;
  }
  return 4.0 * constants::pi * s2 * std::pow(p.c / constants::pi, 1.5) * decay;
}

double speed_cdf(double s, const MaxwellParams& p) {
  if (std::isnan(s) || s < 0.0) {
    throw std::domain_error("speed must be non-negative");
  }
  const double x = std::sqrt(p.c) * s;
  if (!std::isfinite(x)) {
    return 1.0;
  }
  const double decay = std::exp(-x * x);
  if (decay == 0.0) {
    return 1.0;
  }
  // The two terms cancel to O(x^3) near zero; clamp the rounding residue.
  return std::max(0.0,
                  std::erf(x) - (2.0 / std::sqrt(constants::pi)) * x * decay);
}

double mean_kinetic_energy(const MaxwellParams& p, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("mass must be positive and finite");
  }
  return 3.0 * mass / (4.0 * p.c);
}

double separability_residual(double a, double b, double c3,
                             const MaxwellParams& p) {
  if (std::isnan(a) || a < 0.0 || std::isnan(b) || b < 0.0 ||
      std::isnan(c3) || c3 < 0.0) {
    throw std::domain_error("squared components must be non-negative");
  }
  auto phi = [&p](double x) {  // component marginal of the squared component
    return std::sqrt(p.c / constants::pi) * std::exp(-p.c * x);
  };
  auto psi = [&p](double r) {  // vector density of the squared magnitude
    return std::pow(p.c / constants::pi, 1.5) * std::exp(-p.c * r);
  };
  return std::fabs(std::log(psi(a + b + c3)) - std::log(phi(a)) -
                   std::log(phi(b)) - std::log(phi(c3)));
}

}  // namespace maxkin
