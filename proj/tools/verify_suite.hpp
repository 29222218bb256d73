#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxkin::cli {

struct VerifyTolerances {
  double gauss = 1e-10;
  double normalization = 1e-9;
  double mean_energy = 1e-9;
  double separability = 1e-12;
  double ks_critical = 1.63;  // coefficient of 1/sqrt(n), 1% level
  std::int64_t ks_samples = 10'000;
  std::uint64_t seed = 42;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;  // non-empty when something noteworthy happened
};

/// Runs the built-in oracle suite: Gauss integral, 3-D normalization,
/// mean energy, separability, and the sampled-speed KS test.
std::vector<CheckResult> run_verify_suite(const VerifyTolerances& tols);

}  // namespace maxkin::cli
