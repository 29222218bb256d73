#pragma once

#include <numbers>

namespace maxkin::constants {

inline constexpr double pi = std::numbers::pi;

// Exact by SI definition (J/K).
inline constexpr double k_boltzmann_si = 1.380649e-23;

// Atomic mass unit in kg, CODATA 2022.
inline constexpr double amu_kg = 1.66053906892e-27;

}  // namespace maxkin::constants
