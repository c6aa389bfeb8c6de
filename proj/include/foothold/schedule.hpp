#pragma once

#include "foothold/config.hpp"
#include "foothold/rng.hpp"
#include "foothold/types.hpp"

#include <deque>
#include <span>
#include <string>
#include <vector>

namespace foothold {

// CV = population std / |mean|; a zero mean with nonzero spread maps to
// +infinity. Throws when fewer than two returns are given.
double coefficient_of_variation(std::span<const double> returns);

// p_smpl = tanh(CV(R)), capped at 1 - 1e-6 so that p < 1 holds strictly
// (the cap also covers the zero-mean case). Throws when fewer than two
// returns are given.
double adasmpl_probability(std::span<const double> returns);

// Bernoulli(p) draw deciding whether the policy sees ground truth instead of
// the reconstruction this step.
bool sample_ground_truth_substitution(double p, Pcg32& rng);

// Linear ramp from 0 at T_start to p_max at T_end, clamped on both sides.
double curriculum_probability(double t, double t_start, double t_end, double p_max);

// Families reachable through the progressive curriculum. Gaps terrain is
// assigned by a fixed population quota outside this progression.
enum class TerrainAssignment {
  kLowRandomStones,
  kFlatAuxiliary,
  kHighRandomStones,
  kBalanceBeam,
  kSteppingBeams,
};

std::string to_string(TerrainAssignment assignment);

// One step up on strong traversal, one step down on weak, clamped to 1..10.
int update_difficulty(int level, double traversed_fraction,
                      double promote_threshold = 0.8, double demote_threshold = 0.4);

// vx ~ U[0, 1.5]; forward commands below 0.3 m/s clamp to zero, and only
// those zero commands carry a yaw rate, drawn from U[-1.2, 1.2].
Command sample_command(Pcg32& rng);

/// Mutable per-trainer scheduling state: rolling return window, curriculum
/// counters and the per-env difficulty level.
class ScheduleState {
 public:
  explicit ScheduleState(const ScheduleConfig& config = {})
      : config_(config), difficulty_(1) {}

  void push_return(double episode_return);
  void advance_iteration(double count = 1.0) { iteration_ += count; }
  void record_traversal(double traversed_fraction);

  double adasmpl() const;  // throws until the window has 2 returns
  double cv() const;       // coefficient of variation of the window
  double p_advance() const;
  int difficulty() const { return difficulty_; }
  double iteration() const { return iteration_; }
  size_t window_size() const { return window_.size(); }
  const ScheduleConfig& config() const { return config_; }

 private:
  ScheduleConfig config_;
  std::deque<double> window_;
  double iteration_{0.0};
  int difficulty_;
};

// Draws the terrain assignment for one environment: with probability
// p_advance one of the advanced families (uniform thirds), otherwise the
// starter pool (low-randomness stones or auxiliary flat, uniform halves).
// Gaps terrain is excluded from this progression; a fixed share of the
// population is pinned to it up front via gaps_quota.
TerrainAssignment assign_terrain(const ScheduleState& state, Pcg32& rng);

// Environments reserved for Gaps terrain out of a population of n_envs.
int gaps_quota(int n_envs, double gaps_fraction);

}  // namespace foothold
