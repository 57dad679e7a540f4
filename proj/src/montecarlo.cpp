#include "montecarlo.hpp"

#include <cmath>
#include <sstream>
#include <thread>

#include "errors.hpp"

namespace fliptop {

StepSampler::StepSampler(const WindowMeasure& m) {
  std::size_t n = m.atoms.size();
  if (n == 0) throw InvalidArgument("empty step measure");
  windows_.reserve(n);
  std::vector<double> probs;
  probs.reserve(n);
  for (const auto& [w, p] : m.atoms) {
    windows_.push_back(w);
    probs.push_back(rat_d(p));
  }

  // Vose alias construction
  accept_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = probs[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back(), l = large.back();
    small.pop_back();
    large.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  for (std::uint32_t l : large) accept_[l] = 1.0;
  for (std::uint32_t s : small) accept_[s] = 1.0;  // numerical leftovers
}

std::size_t StepSampler::sample_index(Xoshiro256ss& rng) const {
  std::size_t i = static_cast<std::size_t>(rng.below(windows_.size()));
  return rng.uniform01() < accept_[i] ? i : alias_[i];
}

const std::vector<int>& sample_step(const StepSampler& sampler, Xoshiro256ss& rng) {
  return sampler.atom_window(sampler.sample_index(rng));
}

namespace {

void right_multiply(std::vector<int>& state, const std::vector<int>& step,
                    std::vector<int>& scratch) {
  // state <- state . step, i.e. apply step first
  for (std::size_t i = 0; i < state.size(); ++i) {
    int si = step[i];
    scratch[i] = si > 0 ? state[si - 1] : -state[-si - 1];
  }
  state.swap(scratch);
}

std::vector<int> trajectory(const StepSampler& sampler, int n, long steps,
                            std::uint64_t seed, std::uint64_t trial) {
  Xoshiro256ss rng = Xoshiro256ss::for_trial(seed, trial);
  std::vector<int> state(n), scratch(n);
  for (int i = 0; i < n; ++i) state[i] = i + 1;
  for (long s = 0; s < steps; ++s)
    right_multiply(state, sampler.atom_window(sampler.sample_index(rng)), scratch);
  return state;
}

}  // namespace

std::vector<int> run_trajectory(const SimConfig& config, std::uint64_t trial) {
  validate_spec(config.spec);
  if (config.steps < 0) throw InvalidArgument("steps must be non-negative");
  StepSampler sampler(step_windows(config.spec));
  return trajectory(sampler, config.spec.n, config.steps, config.seed, trial);
}

FixedPointStats estimate_fixed_point_mean(const SimConfig& config) {
  validate_spec(config.spec);
  if (config.steps < 0) throw InvalidArgument("steps must be non-negative");
  if (config.trials < 1) throw InvalidArgument("need at least one trial");
  StepSampler sampler(step_windows(config.spec));
  int n = config.spec.n;

  unsigned threads = config.threads ? config.threads : 1;
  std::uint64_t trials = static_cast<std::uint64_t>(config.trials);
  std::vector<std::uint64_t> part_f(threads, 0), part_f2(threads, 0);

  auto worker = [&](unsigned who, std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t sf = 0, sf2 = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      std::vector<int> w = trajectory(sampler, n, config.steps, config.seed, t);
      std::uint64_t f = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (std::abs(w[i]) == static_cast<int>(i) + 1) ++f;
      sf += f;
      sf2 += f * f;
    }
    part_f[who] = sf;
    part_f2[who] = sf2;
  };

  if (threads <= 1) {
    worker(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      std::uint64_t lo = i * chunk, hi = std::min<std::uint64_t>(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, i, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  FixedPointStats stats;
  stats.trials = config.trials;
  for (unsigned i = 0; i < threads; ++i) {
    stats.sum_f += part_f[i];
    stats.sum_f2 += part_f2[i];
  }
  double t = static_cast<double>(trials);
  stats.mean = static_cast<double>(stats.sum_f) / t;
  if (trials > 1) {
    double var = (static_cast<double>(stats.sum_f2) - t * stats.mean * stats.mean) / (t - 1.0);
    if (var < 0) var = 0;  // guard tiny negative from rounding
    stats.stderr_of_mean = std::sqrt(var / t);
  }
  return stats;
}

std::vector<std::uint64_t> simulate_histogram(const SimConfig& config,
                                              std::uint64_t group_cap) {
  validate_spec(config.spec);
  GroupId g = group_of(config.spec);
  std::uint64_t order = group_order(g);
  if (order > group_cap) throw CapExceeded("group order exceeds histogram cap");
  StepSampler sampler(step_windows(config.spec));
  std::vector<std::uint64_t> counts(order, 0);
  for (long t = 0; t < config.trials; ++t) {
    std::vector<int> w =
        trajectory(sampler, config.spec.n, config.steps, config.seed,
                   static_cast<std::uint64_t>(t));
    ++counts[rank_element(w, g)];
  }
  return counts;
}

std::string simulate_csv(const SimConfig& config) {
  FixedPointStats stats = estimate_fixed_point_mean(config);
  std::ostringstream os;
  os << "k,mean_f,stderr,trials,seed,walk_kind,n\n";
  os << config.steps << ',' << dec_str(stats.mean) << ','
     << dec_str(stats.stderr_of_mean) << ',' << stats.trials << ',' << config.seed << ','
     << walk_kind_name(config.spec.kind) << ',' << config.spec.n << '\n';
  return os.str();
}

}  // namespace fliptop
