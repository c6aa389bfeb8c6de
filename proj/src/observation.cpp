#include "foothold/observation.hpp"

#include "foothold/perception.hpp"

#include <stdexcept>

namespace foothold {

namespace {

void require_finite(const double* data, int n, const char* what) {
  for (int i = 0; i < n; ++i)
    if (!std::isfinite(data[i]))
      throw std::invalid_argument(std::string("build_observation: non-finite ") + what);
}

}  // namespace

Observation build_observation(const RobotState& state, const Command& cmd,
                              const Vec12& prev_action) {
  require_finite(state.base_ang_vel.data(), 3, "base angular velocity");
  require_finite(state.gravity_in_body.data(), 3, "gravity vector");
  double cmd_data[3] = {cmd.vx, cmd.vy, cmd.wyaw};
  require_finite(cmd_data, 3, "command");
  require_finite(state.joint_angles.data(), 12, "joint angles");
  require_finite(state.joint_vels.data(), 12, "joint velocities");
  require_finite(prev_action.data(), 12, "previous action");

  Observation obs;
  obs.segment<3>(0) = state.base_ang_vel;
  obs.segment<3>(3) = state.gravity_in_body;
  obs(6) = cmd.vx;
  obs(7) = cmd.vy;
  obs(8) = cmd.wyaw;
  obs.segment<12>(9) = state.joint_angles;
  obs.segment<12>(21) = state.joint_vels;
  obs.segment<12>(33) = prev_action;
  return obs;
}

ObservationSlices slice_observation(const Observation& obs) {
  ObservationSlices s;
  s.base_ang_vel = obs.segment<3>(0);
  s.gravity_in_body = obs.segment<3>(3);
  s.command = obs.segment<3>(6);
  s.joint_angles = obs.segment<12>(9);
  s.joint_vels = obs.segment<12>(21);
  s.prev_action = obs.segment<12>(33);
  return s;
}

PrivilegedState build_privileged(const RobotState& state, const HeightField& field) {
  if (!field.contains(state.base_position.x(), state.base_position.y()))
    throw std::out_of_range("build_privileged: base outside the patch");

  PrivilegedState priv;
  priv.base_lin_vel = state.base_lin_vel;
  priv.contact_state = state.contact_state;

  BasePose base{state.base_position.x(), state.base_position.y(),
                state.base_position.z(), state.base_yaw};
  priv.body_map = raster_local_heightmap(field, base);
  for (int i = 0; i < kNumFeet; ++i)
    priv.foot_maps[i] = foot_patch(field, state.foot_positions[i]);
  return priv;
}

}  // namespace foothold
