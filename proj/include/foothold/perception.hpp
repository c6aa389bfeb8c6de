#pragma once

#include "foothold/config.hpp"
#include "foothold/rng.hpp"
#include "foothold/types.hpp"

#include <Eigen/Core>

namespace foothold {

/// Per-cell Euclidean distance from the cell center to the nearest
/// steppable/non-steppable boundary, where the boundary is the contour of
/// the non-steppable region treated as solid 5 cm squares. Non-steppable
/// cells carry 0. A mask with no boundary at all yields kNoBoundary
/// everywhere (finite cap standing in for +inf).
struct EdgeDistanceField {
  static constexpr double kNoBoundary = 1.0e3;

  Vec2 origin{0.0, 0.0};
  double resolution{kGridResolution};
  int nx{0};
  int ny{0};
  Eigen::MatrixXd distance;  // meters

  bool contains(double x, double y) const {
    return x >= origin.x() && y >= origin.y() &&
           x < origin.x() + nx * resolution && y < origin.y() + ny * resolution;
  }
  int cell_x(double x) const {
    return static_cast<int>(std::floor((x - origin.x()) / resolution));
  }
  int cell_y(double y) const {
    return static_cast<int>(std::floor((y - origin.y()) / resolution));
  }
  // Distance at the cell containing p; throws std::out_of_range outside.
  double at(const Vec2& p) const;
};

// Exact Euclidean distance transform of the steppable mask boundary.
EdgeDistanceField edge_distance_field(const HeightField& field);

// E_d[p]: whether p lies within d meters of an edge. Sub-cell positions map
// to the containing cell.
bool edge_mask(const EdgeDistanceField& field, const Vec2& p, double d);

// 32x16 local heightmap sampled around a yaw-aligned base pose; values are
// terrain height minus base height, nearest-cell sampling (no interpolation,
// edges stay sharp). Cells falling off the patch take the pit-floor value.
// Throws std::out_of_range when the whole window misses the patch.
LocalHeightmap raster_local_heightmap(const HeightField& field, const BasePose& base);

// 5x5 patch at 5 cm centered on the foot, heights relative to foot height.
// Throws std::out_of_range when the foot is outside the patch.
FootPatch foot_patch(const HeightField& field, const Vec3& foot_position);

struct CameraIntrinsics {
  int width{60};
  int height{60};
  double hfov_deg{87.0};
  double near_clip{0.1};
  double far_clip{3.0};

  double fx() const;  // = fy; square pixels
  double cx() const { return 0.5 * width; }
  double cy() const { return 0.5 * height; }
  void validate() const;  // throws std::invalid_argument when degenerate

  static CameraIntrinsics from_config(const CameraConfig& config) {
    return {config.width, config.height, config.hfov_deg, config.near_clip,
            config.far_clip};
  }
};

/// Gravity-leveled camera pose: yaw heading plus a downward pitch.
struct CameraPose {
  Vec3 position{Vec3::Zero()};
  double yaw{0.0};
  double pitch_down{0.0};  // radians, positive tilts the optical axis down

  Vec3 forward() const;
  Vec3 right() const;
  Vec3 down() const;
};

// Head-mounted extrinsics derived from the base pose.
CameraPose head_camera_pose(const BasePose& base, const CameraConfig& config);

struct DepthImage {
  int width{0};
  int height{0};
  Eigen::MatrixXf depth;  // (row v, col u), meters along the optical axis
  CameraIntrinsics intrinsics;
  CameraPose pose;
};

// Per-pixel ray / heightfield intersection depth along the optical axis via
// a 2D grid walk. Outside the patch the terrain continues as the pit floor;
// misses clamp to the far clip. Deterministic.
DepthImage render_depth(const HeightField& field, const CameraPose& pose,
                        const CameraIntrinsics& intrinsics);

// Optional multiplicative Gaussian noise (sigma = 0 leaves the image
// untouched); values stay clipped to [near, far].
void apply_depth_noise(DepthImage& image, double sigma, Pcg32& rng);

}  // namespace foothold
