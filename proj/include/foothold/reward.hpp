#pragma once

#include "foothold/config.hpp"
#include "foothold/perception.hpp"
#include "foothold/types.hpp"

#include <array>
#include <string_view>

namespace foothold {

enum RewardTerm : int {
  kLinVelTracking = 0,
  kAngVelTracking,
  kLinVelZ,
  kAngVelXY,
  kOrientation,
  kTorques,
  kActionRate,
  kSmoothness,
  kJointPower,
  kJointAccel,
  kJointError,
  kCollision,
  kStumble,
  kFeetEdge,
  kNumRewardTerms,
};

const std::array<std::string_view, kNumRewardTerms>& reward_term_names();
const std::array<double, kNumRewardTerms>& reward_term_weights();

// Edge-penalty bands: within 2.5 cm weighs 1.0, within 5 cm weighs 0.5.
constexpr std::array<double, 2> kFeetEdgeDistances = {0.025, 0.05};
constexpr std::array<double, 2> kFeetEdgeWeights = {1.0, 0.5};

struct RewardBreakdown {
  std::array<double, kNumRewardTerms> raw{};       // term values before weights
  std::array<double, kNumRewardTerms> weighted{};  // raw * weight
  double weighted_total{0.0};
};

// Evaluates every reward term for one control step. Action history is
// zero-filled at episode start. Pure; rejects non-finite inputs.
RewardBreakdown compute_rewards(const RobotState& state, const Command& cmd,
                                const Vec12& action, const Vec12& prev_action,
                                const Vec12& prev_prev_action,
                                const EdgeDistanceField& edge_field,
                                const RobotConfig& robot);

}  // namespace foothold
