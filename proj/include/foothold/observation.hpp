#pragma once

#include "foothold/types.hpp"

namespace foothold {

// Assembles the 45-dim proprioceptive observation
// [w_t, g_t, cmd_t, q_t, qdot_t, a_prev]. Pure; rejects non-finite inputs
// with std::invalid_argument.
Observation build_observation(const RobotState& state, const Command& cmd,
                              const Vec12& prev_action);

// Slices an observation back into its components (inverse of the
// concatenation order).
struct ObservationSlices {
  Vec3 base_ang_vel;
  Vec3 gravity_in_body;
  Vec3 command;
  Vec12 joint_angles;
  Vec12 joint_vels;
  Vec12 prev_action;
};
ObservationSlices slice_observation(const Observation& obs);

// Privileged environment state: true base velocity, contacts, and the body /
// foot heightmaps produced by the perception rasterizers. The base pose for
// the body map is yaw-aligned and gravity-leveled. Throws std::out_of_range
// when the base is outside the patch.
PrivilegedState build_privileged(const RobotState& state, const HeightField& field);

}  // namespace foothold
