#pragma once

#include <array>
#include <cstdint>

#include "maxkin/rng.hpp"

namespace maxkin {

/// Trials are simulated in fixed chunks of this many walks; chunk i uses
/// stream_id = seed_spec.stream_id + i, so the summary does not depend on
/// the worker count.
inline constexpr std::int64_t kWalkChunkSize = 65536;

struct WalkSpec {
  std::int64_t steps = 1;
  int dimension = 1;  // 1, 2 or 3
  double step_length = 1.0;
  std::int64_t trials = 1;
  SeedSpec seed_spec;
};

struct WalkSummary {
  std::array<double, 3> mean_displacement{};  // per axis, over trials
  double mean_squared_displacement = 0.0;
  double variance_of_squared_displacement = 0.0;  // unbiased over trials
  std::int64_t trials = 0;
};

/// Simple symmetric lattice walk: each step picks one of the 2*dimension
/// axis directions uniformly (one uniform draw per step) and moves by
/// step_length. Deterministic given the seed spec.
WalkSummary simulate_walks(const WalkSpec& spec, unsigned max_workers = 0);

/// Characteristic diffusion spread L = sqrt(2 * dimension * D * t).
double diffusion_length(double d_coefficient, double time, int dimension);

/// D implied by lattice-walk parameters under MSD = 2*d*D*t:
/// step_length^2 / (2 * dimension * step_time).
double diffusion_coefficient_from_walk(double step_length, double step_time,
                                       int dimension);

}  // namespace maxkin
