#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "maxkin/distribution.hpp"
#include "maxkin/rng.hpp"

namespace maxkin {

/// Batches are generated in fixed chunks of this many vectors; chunk i uses
/// stream_id = seed_spec.stream_id + i. Output is therefore independent of
/// how many workers generate the chunks.
inline constexpr std::size_t kSampleChunkSize = 65536;

/// A seeded, regenerable batch of Maxwell-Boltzmann velocity vectors.
/// The stored params and seed_spec are sufficient to rebuild it exactly.
struct SampleBatch {
  std::vector<VelocityVector> velocities;
  MaxwellParams params;
  SeedSpec seed_spec;

  std::size_t count() const { return velocities.size(); }
};

/// Draws n vectors whose components are i.i.d. centered Gaussians with
/// variance 1/(2c). max_workers = 0 picks the hardware thread count; the
/// result is identical for every worker count.
SampleBatch sample_batch(std::size_t n, const MaxwellParams& p,
                         const SeedSpec& seed, unsigned max_workers = 0);

/// Fraction of the batch with kinetic energy mass*|v|^2/2 >= e_activation.
double empirical_tail_fraction(const SampleBatch& batch, double e_activation,
                               double mass);

/// Kolmogorov-Smirnov statistic of the sampled speeds against speed_cdf:
/// sup |empirical CDF - analytic CDF| over the sorted sample.
double ks_statistic(const SampleBatch& batch);

struct EmpiricalMoments {
  std::array<double, 3> component_mean;
  std::array<double, 3> component_variance;  // unbiased (n-1)
  double mean_speed;
  double mean_squared_speed;
};

EmpiricalMoments empirical_moments(const SampleBatch& batch);

}  // namespace maxkin
