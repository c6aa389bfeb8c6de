#pragma once

#include "foothold/types.hpp"

#include <string>

namespace foothold {

/// Robot geometry constants, thresholds and default pose. Values are
/// robot-specific (Lite3-sized defaults) and live in config, not in the
/// formulas.
struct RobotConfig {
  double mass{12.0};                    // kg
  double standing_height{0.32};         // base height over stance feet, m
  double contact_force_threshold{1.0};  // N; far below standing load
  double hip_longitudinal{0.2};         // |x| hip offset, m
  double hip_lateral{0.1};              // |y| hip offset, m
  Vec12 default_joint_angles;

  RobotConfig() {
    // hip abduction, hip flexion, knee per leg: FL, FR, RL, RR
    default_joint_angles << 0.0, 0.8, -1.6, 0.0, 0.8, -1.6,
                            0.0, 0.8, -1.6, 0.0, 0.8, -1.6;
  }
};

/// Head camera model: D435i-like FOV, mounted above the base front and
/// pitched down so stones 0.3-1.5 m ahead stay in view.
struct CameraConfig {
  int width{60};
  int height{60};
  double hfov_deg{87.0};
  double near_clip{0.1};
  double far_clip{3.0};
  double mount_forward{0.2};   // ahead of base origin, m
  double mount_height{0.08};   // above base origin, m
  double pitch_down_deg{30.0};
  double noise_sigma{0.0};     // multiplicative Gaussian, 0 = off
};

struct WalkerConfig {
  double step_frequency{2.0};   // gait cycles per second
  double reach{0.15};           // foothold search radius around nominal, m
  double min_clearance{0.025};  // required edge distance, m
  double dt{0.02};              // log timestep (50 Hz)
  double goal_distance{6.0};    // m
  double start_x{0.5};          // m from patch edge
};

struct ScheduleConfig {
  int reward_window{100};
  double t_start{2000.0};
  double t_end{6000.0};
  double p_max{0.9};
  double promote_threshold{0.8};
  double demote_threshold{0.4};
  double gaps_fraction{0.1};  // share of envs pinned to Gaps, outside the progression
};

struct AppConfig {
  RobotConfig robot;
  CameraConfig camera;
  WalkerConfig walker;
  ScheduleConfig schedule;
};

// JSON key/value config file; unknown keys are rejected, missing keys keep
// defaults. Schema is documented in the README.
AppConfig load_config(const std::string& path);
void save_config(const AppConfig& config, const std::string& path);

}  // namespace foothold
