#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "group.hpp"
#include "rational.hpp"
#include "walk_spec.hpp"

namespace fliptop {

// A finitely supported probability measure on a group, atoms keyed by element
// rank. All step measures here are symmetric: p(x) = p(x^-1).
struct StepMeasure {
  GroupId group;
  std::vector<std::pair<std::uint64_t, Rat>> atoms;  // distinct ranks, probs sum to 1
};

StepMeasure step_measure(const WalkSpec& spec);

// The same atoms in window form. No element ranks involved, so this works at
// any n the window arithmetic supports; the Monte Carlo sampler runs on
// windows directly while the exact engine needs the ranked form above.
struct WindowMeasure {
  GroupId group;
  std::vector<std::pair<std::vector<int>, Rat>> atoms;
};

WindowMeasure step_windows(const WalkSpec& spec);

enum class Mode { Exact, Floating };

// A probability distribution on a whole group, indexed by element rank.
// Exact mode keeps integer numerators over one common denominator; floating
// mode keeps doubles. Demotion to floating is one-way, driven by the walk
// engine's bit budget.
class GroupDistribution {
 public:
  static GroupDistribution delta_at_identity(GroupId g, std::uint64_t group_cap = 50000);
  static GroupDistribution uniform(GroupId g, std::uint64_t group_cap = 50000);

  GroupId group() const { return group_; }
  Mode mode() const { return mode_; }
  std::uint64_t size() const;

  Rat value(std::uint64_t r) const;      // exact mode only
  double fvalue(std::uint64_t r) const;  // either mode
  Rat total_mass() const;                // exact mode only
  const Int& common_denominator() const { return den_; }

  void to_floating();

 private:
  friend GroupDistribution convolve_with_tables(
      const GroupDistribution&, const StepMeasure&,
      const std::vector<std::vector<std::uint32_t>>&, const Int&, unsigned);
  friend GroupDistribution pushforward_projection(const GroupDistribution&);
  friend Rat tv_to_uniform_exact(const GroupDistribution&);
  friend std::pair<Rat, Rat> fixed_point_moments(const GroupDistribution&);

  GroupId group_{Family::B, 1};
  Mode mode_ = Mode::Exact;
  std::vector<Int> num_;
  Int den_ = 1;
  std::vector<double> fval_;
};

// One convolution step: result(x) = sum_s d(x s^-1) m(s).
GroupDistribution convolve_step(const GroupDistribution& d, const StepMeasure& m,
                                unsigned threads = 1);

Rat tv_to_uniform_exact(const GroupDistribution& d);
double tv_to_uniform(const GroupDistribution& d);

// Image under the sign-forgetting projection B_n/D_n -> S_n.
GroupDistribution pushforward_projection(const GroupDistribution& d);

// First and second moments of the fixed-point count under a distribution on
// S_n. Exact mode only.
std::pair<Rat, Rat> fixed_point_moments(const GroupDistribution& d);

struct WalkEngineOptions {
  std::uint64_t group_cap = 50000;
  unsigned bit_budget = 4096;  // demote to floating when the denominator outgrows this
  Mode mode = Mode::Exact;
  unsigned threads = 1;
};

// Drives repeated convolution of one walk from the identity. Precomputes the
// right-multiplication tables for the step support once.
class WalkEngine {
 public:
  explicit WalkEngine(WalkSpec spec, WalkEngineOptions opts = {});

  void step();
  long k() const { return k_; }
  const GroupDistribution& dist() const { return dist_; }
  const StepMeasure& measure() const { return measure_; }
  Rat tv_exact() const { return tv_to_uniform_exact(dist_); }
  double tv() const { return tv_to_uniform(dist_); }

 private:
  WalkSpec spec_;
  WalkEngineOptions opts_;
  StepMeasure measure_;
  GroupDistribution dist_;
  std::vector<std::vector<std::uint32_t>> act_;
  Int step_den_ = 1;
  long k_ = 0;
};

// First k <= k_max with TV(walk^(*k), uniform) <= threshold, if any.
std::optional<long> mixing_time(const WalkSpec& spec, double threshold = 0.25,
                                long k_max = 1000, WalkEngineOptions opts = {});

// CSV with columns k,tv,mode,n,walk_kind for k = 0..k_max. In exact mode with
// exact_cells set, tv cells are canonical rationals like "7/8".
std::string tv_curve_csv(const WalkSpec& spec, long k_max, bool exact_cells,
                         WalkEngineOptions opts = {});

}  // namespace fliptop
