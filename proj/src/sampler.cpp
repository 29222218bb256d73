#include "maxkin/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chunked.hpp"

namespace maxkin {

SampleBatch sample_batch(std::size_t n, const MaxwellParams& p,
                         const SeedSpec& seed, unsigned max_workers) {
  if (n == 0) {
    throw std::domain_error("batch size must be at least 1");
  }
  const double sigma = std::sqrt(1.0 / (2.0 * p.c));
  SampleBatch batch{std::vector<VelocityVector>(n), p, seed};

  const std::size_t chunks = (n + kSampleChunkSize - 1) / kSampleChunkSize;
  detail::run_chunked(chunks, max_workers, [&](std::size_t chunk) {
    NormalSource normals({seed.seed, seed.stream_id + chunk});
    const std::size_t begin = chunk * kSampleChunkSize;
    const std::size_t end = std::min(n, begin + kSampleChunkSize);
    for (std::size_t i = begin; i < end; ++i) {
      const double vx = sigma * normals.next();
      const double vy = sigma * normals.next();
      const double vz = sigma * normals.next();
      batch.velocities[i] = {vx, vy, vz};
    }
  });
  return batch;
}

double empirical_tail_fraction(const SampleBatch& batch, double e_activation,
                               double mass) {
  if (batch.count() == 0) {
    throw std::domain_error("batch must be non-empty");
  }
  if (std::isnan(e_activation) || e_activation < 0.0) {
    throw std::domain_error("activation energy must be non-negative");
  }
  if (!(mass > 0.0)) {
    throw std::domain_error("mass must be positive");
  }
  std::size_t qualifying = 0;
  for (const VelocityVector& v : batch.velocities) {
    if (0.5 * mass * v.squared_speed() >= e_activation) {
      ++qualifying;
    }
  }
  return static_cast<double>(qualifying) / static_cast<double>(batch.count());
}

double ks_statistic(const SampleBatch& batch) {
  const std::size_t n = batch.count();
  if (n == 0) {
    throw std::domain_error("batch must be non-empty");
  }
  std::vector<double> speeds(n);
  std::transform(batch.velocities.begin(), batch.velocities.end(),
                 speeds.begin(),
                 [](const VelocityVector& v) {
                   return std::sqrt(v.squared_speed());
                 });
  std::sort(speeds.begin(), speeds.end());

  const double inv_n = 1.0 / static_cast<double>(n);
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = speed_cdf(speeds[i], batch.params);
    const double below = cdf - static_cast<double>(i) * inv_n;
    const double above = static_cast<double>(i + 1) * inv_n - cdf;
    sup = std::max({sup, below, above});
  }
  return sup;
}

EmpiricalMoments empirical_moments(const SampleBatch& batch) {
  const std::size_t n = batch.count();
  if (n < 2) {
    throw std::domain_error("moments require a batch of at least 2");
  }
  const double dn = static_cast<double>(n);

  EmpiricalMoments m{};
  double sum_speed = 0.0;
  double sum_sq = 0.0;
  for (const VelocityVector& v : batch.velocities) {
    m.component_mean[0] += v.vx;
    m.component_mean[1] += v.vy;
    m.component_mean[2] += v.vz;
    const double s2 = v.squared_speed();
    sum_sq += s2;
    sum_speed += std::sqrt(s2);
  }
  for (double& mean : m.component_mean) {
    mean /= dn;
  }
  for (const VelocityVector& v : batch.velocities) {
    const double dx = v.vx - m.component_mean[0];
    const double dy = v.vy - m.component_mean[1];
    const double dz = v.vz - m.component_mean[2];
    m.component_variance[0] += dx * dx;
    m.component_variance[1] += dy * dy;
    m.component_variance[2] += dz * dz;
  }
  for (double& var : m.component_variance) {
    var /= (dn - 1.0);
  }
  m.mean_speed = sum_speed / dn;
  m.mean_squared_speed = sum_sq / dn;
  return m;
}

}  // namespace maxkin
