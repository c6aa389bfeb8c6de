#include "foothold/reward.hpp"

#include <cmath>
#include <stdexcept>

namespace foothold {

const std::array<std::string_view, kNumRewardTerms>& reward_term_names() {
  static const std::array<std::string_view, kNumRewardTerms> names = {
      "lin_vel_tracking", "ang_vel_tracking", "lin_vel_z", "ang_vel_xy",
      "orientation",      "torques",          "action_rate", "smoothness",
      "joint_power",      "joint_accel",      "joint_error", "collision",
      "stumble",          "feet_edge",
  };
  return names;
}

const std::array<double, kNumRewardTerms>& reward_term_weights() {
  static const std::array<double, kNumRewardTerms> weights = {
      1.5,    // lin vel tracking
      0.5,    // ang vel tracking
      -2.0,   // lin vel (z)
      -0.05,  // ang vel (xy)
      -1.0,   // orientation
      -1.0e-5,   // torques
      -0.01,  // action rate
      -0.01,  // smoothness
      -2.0e-5,   // joint power
      -2.5e-7,   // joint accelerations
      -0.01,  // joint error
      -10.0,  // collision
      -1.0,   // stumble
      -1.0,   // feet edge
  };
  return weights;
}

namespace {

void require_finite(const double* data, int n, const char* what) {
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(data[i]))
      throw std::invalid_argument(std::string("compute_rewards: non-finite ") + what);
}

}  // namespace

RewardBreakdown compute_rewards(const RobotState& state, const Command& cmd,
                                const Vec12& action, const Vec12& prev_action,
                                const Vec12& prev_prev_action,
                                const EdgeDistanceField& edge_field,
                                const RobotConfig& robot) {
  require_finite(state.base_lin_vel.data(), 3, "base velocity");
  require_finite(state.base_ang_vel.data(), 3, "angular velocity");
  require_finite(state.gravity_in_body.data(), 3, "gravity");
  require_finite(state.joint_torques.data(), 12, "torques");
  require_finite(state.joint_vels.data(), 12, "joint velocities");
  require_finite(state.joint_accels.data(), 12, "joint accelerations");
  require_finite(state.joint_angles.data(), 12, "joint angles");
  require_finite(action.data(), 12, "action");
  require_finite(prev_action.data(), 12, "previous action");
  require_finite(prev_prev_action.data(), 12, "action history");
  double cmd_data[3] = {cmd.vx, cmd.vy, cmd.wyaw};
  require_finite(cmd_data, 3, "command");

  RewardBreakdown out;
  auto& raw = out.raw;

  // Tracking uses min(v, v_cmd) elementwise over (vx, vy): running faster
  // than commanded is never penalized.
  Vec2 v_xy{state.base_lin_vel.x(), state.base_lin_vel.y()};
  Vec2 v_cmd{cmd.vx, cmd.vy};
  Vec2 v_clamped{std::min(v_xy.x(), v_cmd.x()), std::min(v_xy.y(), v_cmd.y())};
  raw[kLinVelTracking] = std::exp(-(v_clamped - v_cmd).squaredNorm() / 0.25);

  double wyaw_err = state.base_ang_vel.z() - cmd.wyaw;
  raw[kAngVelTracking] = std::exp(-wyaw_err * wyaw_err / 0.25);

  raw[kLinVelZ] = state.base_lin_vel.z() * state.base_lin_vel.z();
  raw[kAngVelXY] = state.base_ang_vel.head<2>().squaredNorm();
  raw[kOrientation] = state.gravity_in_body.head<2>().squaredNorm();
  raw[kTorques] = state.joint_torques.squaredNorm();
  raw[kActionRate] = (action - prev_action).squaredNorm();
  raw[kSmoothness] = (action - 2.0 * prev_action + prev_prev_action).squaredNorm();
  raw[kJointPower] =
      (state.joint_torques.array().abs() * state.joint_vels.array().abs()).sum();
  raw[kJointAccel] = state.joint_accels.squaredNorm();
  raw[kJointError] = (state.joint_angles - robot.default_joint_angles).squaredNorm();

  // Collision counts non-foot bodies in contact (feet are excluded).
  double collisions = 0.0;
  for (double force : state.nonfoot_contact_forces)
    if (force > 0.1) collisions += 1.0;
  raw[kCollision] = collisions;

  bool stumble = false;
  for (int i = 0; i < kNumFeet; ++i) {
    const Vec3& f = state.foot_contact_forces[i];
    if (f.head<2>().norm() > 4.0 * std::abs(f.z())) stumble = true;
  }
  raw[kStumble] = stumble ? 1.0 : 0.0;

  // Feet edge: contacting feet accumulate the band weights for every edge
  // band they fall in; swing feet contribute nothing (and are not looked
  // up, so they may be outside the patch).
  double feet_edge = 0.0;
  for (int i = 0; i < kNumFeet; ++i) {
    if (!state.contact_state[i]) continue;
    Vec2 p = state.foot_positions[i].head<2>();
    for (size_t b = 0; b < kFeetEdgeDistances.size(); ++b)
      if (edge_mask(edge_field, p, kFeetEdgeDistances[b]))
        feet_edge += kFeetEdgeWeights[b];
  }
  raw[kFeetEdge] = feet_edge;

  const auto& weights = reward_term_weights();
  double total = 0.0;
  for (int k = 0; k < kNumRewardTerms; ++k) {
    out.weighted[k] = weights[k] * raw[k];
    total += out.weighted[k];
  }
  out.weighted_total = total;
  return out;
}

}  // namespace foothold
