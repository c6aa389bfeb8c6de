#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace foothold {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using BoolGrid = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Generated patches are 8 m x 4 m at 5 cm, terrain axis along x.
constexpr double kPatchLengthX = 8.0;
constexpr double kPatchLengthY = 4.0;
constexpr double kGridResolution = 0.05;

/// World-frame elevation grid plus steppable mask for one terrain patch.
/// Pits are real floors at -pit_depth below the platform base (z = 0), never
/// missing data; heights are finite everywhere.
struct HeightField {
  Vec2 origin{0.0, 0.0};  // lower-left corner, world frame
  double resolution{kGridResolution};
  int nx{0};
  int ny{0};
  Eigen::MatrixXd heights;  // nx x ny, meters
  BoolGrid steppable;       // nx x ny
  double pit_depth{0.0};    // meters below the platform base

  bool contains(double x, double y) const {
    return x >= origin.x() && y >= origin.y() &&
           x < origin.x() + nx * resolution && y < origin.y() + ny * resolution;
  }

  // Containing cell of a world point (equivalently: nearest cell center).
  int cell_x(double x) const {
    return static_cast<int>(std::floor((x - origin.x()) / resolution));
  }
  int cell_y(double y) const {
    return static_cast<int>(std::floor((y - origin.y()) / resolution));
  }
  double center_x(int i) const { return origin.x() + (i + 0.5) * resolution; }
  double center_y(int j) const { return origin.y() + (j + 0.5) * resolution; }

  // Nearest-cell height sample; outside the patch the terrain continues as
  // the pit floor.
  double height_or_pit(double x, double y) const {
    if (!contains(x, y)) return -pit_depth;
    return heights(cell_x(x), cell_y(y));
  }

  uint64_t content_hash() const;
};

/// Robot-frame 32x16 elevation grid at 5 cm, heights relative to base height.
/// Spans [-0.5, +1.1] m longitudinal x [-0.4, +0.4] m lateral in the
/// yaw-aligned, gravity-leveled robot frame.
struct LocalHeightmap {
  static constexpr int kLengthCells = 32;
  static constexpr int kWidthCells = 16;
  static constexpr double kResolution = 0.05;
  static constexpr double kMinX = -0.5;
  static constexpr double kMaxX = 1.1;
  static constexpr double kMinY = -0.4;
  static constexpr double kMaxY = 0.4;

  Eigen::Matrix<double, kLengthCells, kWidthCells> height =
      Eigen::Matrix<double, kLengthCells, kWidthCells>::Zero();

  // Robot-frame offset sampled by cell (i, j).
  static Vec2 cell_center(int i, int j) {
    return {kMinX + (i + 0.5) * kResolution, kMinY + (j + 0.5) * kResolution};
  }
};

// 5x5 foot-centric patch at 5 cm (centers span +/-0.1 m), heights relative
// to foot height.
using FootPatch = Eigen::Matrix<double, 5, 5>;
constexpr double kFootPatchResolution = 0.05;
constexpr int kFootPatchCells = 5;

/// Velocity command. vy is identically zero; forward commands below
/// 0.3 m/s are clamped to zero at sampling time, turning is commanded only
/// when standing.
struct Command {
  double vx{0.0};
  double vy{0.0};
  double wyaw{0.0};

  void validate() const;  // throws std::invalid_argument on violation
};

constexpr int kNumJoints = 12;
constexpr int kNumFeet = 4;

/// Kinematic/dynamic snapshot of the robot. Produced kinematically by the
/// walker or synthetically by tests; there is no dynamics engine behind it.
struct RobotState {
  Vec3 base_position{Vec3::Zero()};
  double base_yaw{0.0};
  double base_roll{0.0};
  double base_pitch{0.0};
  Vec3 base_lin_vel{Vec3::Zero()};        // body frame, m/s
  Vec3 base_ang_vel{Vec3::Zero()};        // body frame, rad/s
  Vec3 gravity_in_body{0.0, 0.0, -1.0};   // unit vector
  Vec12 joint_angles{Vec12::Zero()};
  Vec12 joint_vels{Vec12::Zero()};
  Vec12 joint_accels{Vec12::Zero()};
  Vec12 joint_torques{Vec12::Zero()};
  std::array<Vec3, kNumFeet> foot_positions{Vec3::Zero(), Vec3::Zero(),
                                            Vec3::Zero(), Vec3::Zero()};
  std::array<Vec3, kNumFeet> foot_contact_forces{Vec3::Zero(), Vec3::Zero(),
                                                 Vec3::Zero(), Vec3::Zero()};
  std::array<bool, kNumFeet> contact_state{false, false, false, false};
  std::vector<double> nonfoot_contact_forces;  // magnitude per collision body

  // contact_state[i] <=> |F_i| > threshold (1 N by default).
  void derive_contacts(double force_threshold);
};

// Gravity direction expressed in the body frame for ZYX (yaw-pitch-roll)
// Euler angles. Invariant under yaw.
Vec3 gravity_in_body_frame(double roll, double pitch);

constexpr int kObservationDim = 45;
// Ordered [w_t(3), g_t(3), cmd_t(3), q_t(12), qdot_t(12), a_prev(12)].
using Observation = Eigen::Matrix<double, kObservationDim, 1>;

/// Privileged (simulator-only) environment state.
struct PrivilegedState {
  Vec3 base_lin_vel{Vec3::Zero()};
  std::array<bool, kNumFeet> contact_state{false, false, false, false};
  LocalHeightmap body_map;
  std::array<FootPatch, kNumFeet> foot_maps{FootPatch::Zero(), FootPatch::Zero(),
                                            FootPatch::Zero(), FootPatch::Zero()};
};

/// Yaw-aligned, gravity-leveled base pose used by the heightmap rasterizer.
struct BasePose {
  double x{0.0};
  double y{0.0};
  double z{0.0};
  double yaw{0.0};
};

}  // namespace foothold
