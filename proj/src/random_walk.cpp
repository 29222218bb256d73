#include "maxkin/random_walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chunked.hpp"

namespace maxkin {
namespace {

void validate(const WalkSpec& spec) {
  if (spec.steps < 1) {
    throw std::domain_error("steps must be at least 1");
  }
  if (spec.dimension < 1 || spec.dimension > 3) {
    throw std::domain_error("dimension must be 1, 2 or 3");
  }
  if (!(spec.step_length > 0.0) || !std::isfinite(spec.step_length)) {
    throw std::domain_error("step length must be positive and finite");
  }
  if (spec.trials < 1) {
    throw std::domain_error("trials must be at least 1");
  }
}

struct ChunkTotals {
  std::array<double, 3> displacement{};
  double squared = 0.0;
  double squared_squared = 0.0;
};

}  // namespace

WalkSummary simulate_walks(const WalkSpec& spec, unsigned max_workers) {
  validate(spec);

  const std::int64_t chunk_count =
      (spec.trials + kWalkChunkSize - 1) / kWalkChunkSize;
  std::vector<ChunkTotals> totals(static_cast<std::size_t>(chunk_count));
  const int directions = 2 * spec.dimension;

  detail::run_chunked(
      static_cast<std::size_t>(chunk_count), max_workers,
      [&](std::size_t chunk) {
        Xoshiro256PlusPlus rng(
            {spec.seed_spec.seed, spec.seed_spec.stream_id + chunk});
        const std::int64_t begin =
            static_cast<std::int64_t>(chunk) * kWalkChunkSize;
        const std::int64_t end =
            std::min(spec.trials, begin + kWalkChunkSize);
        ChunkTotals& t = totals[chunk];
        for (std::int64_t trial = begin; trial < end; ++trial) {
          double pos[3] = {0.0, 0.0, 0.0};
          for (std::int64_t step = 0; step < spec.steps; ++step) {
            int k = static_cast<int>(rng.next_unit() * directions);
            if (k >= directions) {
              k = directions - 1;
            }
            pos[k >> 1] += (k & 1) ? spec.step_length : -spec.step_length;
          }
          const double s2 =
              pos[0] * pos[0] + pos[1] * pos[1] + pos[2] * pos[2];
          t.displacement[0] += pos[0];
          t.displacement[1] += pos[1];
          t.displacement[2] += pos[2];
          t.squared += s2;
          t.squared_squared += s2 * s2;
        }
      });

  // Combine partial sums in chunk order so the result is scheduling-free.
  ChunkTotals sum;
  for (const ChunkTotals& t : totals) {
    for (int axis = 0; axis < 3; ++axis) {
      sum.displacement[axis] += t.displacement[axis];
    }
    sum.squared += t.squared;
    sum.squared_squared += t.squared_squared;
  }

  const double dn = static_cast<double>(spec.trials);
  WalkSummary summary;
  summary.trials = spec.trials;
  for (int axis = 0; axis < 3; ++axis) {
    summary.mean_displacement[axis] = sum.displacement[axis] / dn;
  }
  summary.mean_squared_displacement = sum.squared / dn;
  if (spec.trials > 1) {
    const double mean_sq = summary.mean_squared_displacement;
    double var = (sum.squared_squared - dn * mean_sq * mean_sq) / (dn - 1.0);
    summary.variance_of_squared_displacement = std::max(0.0, var);
  }
  return summary;
}

double diffusion_length(double d_coefficient, double time, int dimension) {
  if (!(d_coefficient > 0.0) || !(time > 0.0)) {
    throw std::domain_error("diffusion coefficient and time must be positive");
  }
  if (dimension < 1 || dimension > 3) {
    throw std::domain_error("dimension must be 1, 2 or 3");
  }
  return std::sqrt(2.0 * dimension * d_coefficient * time);
}

double diffusion_coefficient_from_walk(double step_length, double step_time,
                                       int dimension) {
  if (!(step_length > 0.0) || !(step_time > 0.0)) {
    throw std::domain_error("step length and step time must be positive");
  }
  if (dimension < 1 || dimension > 3) {
    throw std::domain_error("dimension must be 1, 2 or 3");
  }
  return step_length * step_length / (2.0 * dimension * step_time);
}

}  // namespace maxkin
