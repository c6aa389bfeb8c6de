#include "foothold/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace foothold {

double coefficient_of_variation(std::span<const double> returns) {
  if (returns.size() < 2)
    throw std::invalid_argument("adasmpl: need at least two episode returns");
  double mean = 0.0;
  for (double r : returns) mean += r;
  mean /= static_cast<double>(returns.size());
  double var = 0.0;
  for (double r : returns) var += (r - mean) * (r - mean);
  var /= static_cast<double>(returns.size());  // population variance
  double std_dev = std::sqrt(var);
  if (mean == 0.0)
    return std_dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std_dev / std::abs(mean);
}

double adasmpl_probability(std::span<const double> returns) {
  constexpr double kCap = 1.0 - 1e-6;
  return std::min(std::tanh(coefficient_of_variation(returns)), kCap);
}

bool sample_ground_truth_substitution(double p, Pcg32& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("substitution probability outside [0, 1]");
  return rng.bernoulli(p);
}

double curriculum_probability(double t, double t_start, double t_end, double p_max) {
  if (!(t_start < t_end))
    throw std::invalid_argument("curriculum: need T_start < T_end");
  double ramp = p_max * (t - t_start) / (t_end - t_start);
  return std::clamp(ramp, 0.0, p_max);
}

std::string to_string(TerrainAssignment assignment) {
  switch (assignment) {
    case TerrainAssignment::kLowRandomStones: return "low-random-stones";
    case TerrainAssignment::kFlatAuxiliary: return "flat";
    case TerrainAssignment::kHighRandomStones: return "high-random-stones";
    case TerrainAssignment::kBalanceBeam: return "balance-beam";
    case TerrainAssignment::kSteppingBeams: return "stepping-beams";
  }
  throw std::invalid_argument("unknown terrain assignment");
}

int update_difficulty(int level, double traversed_fraction, double promote_threshold,
                      double demote_threshold) {
  if (level < 1 || level > 10)
    throw std::invalid_argument("difficulty level outside 1..10");
  if (traversed_fraction > promote_threshold) ++level;
  else if (traversed_fraction < demote_threshold) --level;
  return std::clamp(level, 1, 10);
}

Command sample_command(Pcg32& rng) {
  Command cmd;
  cmd.vx = rng.uniform(0.0, 1.5);
  if (cmd.vx < 0.3) {
    cmd.vx = 0.0;
    cmd.wyaw = rng.uniform(-1.2, 1.2);
  } else {
    cmd.wyaw = 0.0;
  }
  cmd.vy = 0.0;
  return cmd;
}

void ScheduleState::push_return(double episode_return) {
  window_.push_back(episode_return);
  while (window_.size() > static_cast<size_t>(config_.reward_window))
    window_.pop_front();
}

void ScheduleState::record_traversal(double traversed_fraction) {
  difficulty_ = update_difficulty(difficulty_, traversed_fraction,
                                  config_.promote_threshold, config_.demote_threshold);
}

double ScheduleState::adasmpl() const {
  std::vector<double> values(window_.begin(), window_.end());
  return adasmpl_probability(values);
}

double ScheduleState::cv() const {
  std::vector<double> values(window_.begin(), window_.end());
  return coefficient_of_variation(values);
}

double ScheduleState::p_advance() const {
  return curriculum_probability(iteration_, config_.t_start, config_.t_end,
                                config_.p_max);
}

int gaps_quota(int n_envs, double gaps_fraction) {
  if (n_envs < 0) throw std::invalid_argument("gaps_quota: negative population");
  if (!(gaps_fraction >= 0.0 && gaps_fraction <= 1.0))
    throw std::invalid_argument("gaps_quota: fraction outside [0, 1]");
  return static_cast<int>(std::lround(n_envs * gaps_fraction));
}

TerrainAssignment assign_terrain(const ScheduleState& state, Pcg32& rng) {
  if (rng.bernoulli(state.p_advance())) {
    switch (rng.uniform_u32(3)) {
      case 0: return TerrainAssignment::kHighRandomStones;
      case 1: return TerrainAssignment::kBalanceBeam;
      default: return TerrainAssignment::kSteppingBeams;
    }
  }
  return rng.uniform_u32(2) == 0 ? TerrainAssignment::kLowRandomStones
                                 : TerrainAssignment::kFlatAuxiliary;
}

}  // namespace foothold
