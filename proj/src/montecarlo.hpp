#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rng.hpp"
#include "walk.hpp"
#include "walk_spec.hpp"

namespace fliptop {

// Draws step elements from a step measure in O(1) via Vose's alias method.
class StepSampler {
 public:
  explicit StepSampler(const WindowMeasure& m);

  std::size_t sample_index(Xoshiro256ss& rng) const;
  const std::vector<int>& atom_window(std::size_t i) const { return windows_[i]; }
  std::size_t support_size() const { return windows_.size(); }

 private:
  std::vector<std::vector<int>> windows_;
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
};

// One random step element, in window form.
const std::vector<int>& sample_step(const StepSampler& sampler, Xoshiro256ss& rng);

struct SimConfig {
  WalkSpec spec;
  long steps = 0;
  long trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Final state of one trajectory started at the identity: steps right
// multiplications by sampled step elements.
std::vector<int> run_trajectory(const SimConfig& config, std::uint64_t trial);

struct FixedPointStats {
  double mean = 0;
  double stderr_of_mean = 0;
  long trials = 0;
  std::uint64_t sum_f = 0, sum_f2 = 0;  // integer accumulators, thread-invariant
};

// Mean fixed-point count of the projected final state over all trials.
FixedPointStats estimate_fixed_point_mean(const SimConfig& config);

// Per-rank visit counts of the final state; needs |G| within the cap.
std::vector<std::uint64_t> simulate_histogram(const SimConfig& config,
                                              std::uint64_t group_cap = 50000);

// CSV columns k,mean_f,stderr,trials,seed,walk_kind,n (one data row).
std::string simulate_csv(const SimConfig& config);

}  // namespace fliptop
