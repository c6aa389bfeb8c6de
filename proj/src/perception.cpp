#include "foothold/perception.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace foothold {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 1D squared-distance transform (Felzenszwalb & Huttenlocher). f holds
// squared distances; empty sites carry kEmptySite (large finite, so parabola
// intersections never hit inf - inf). Exact for integer-valued inputs.
constexpr double kEmptySite = 1e18;
void edt_1d(const std::vector<double>& f, std::vector<double>& d,
            std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  const double kInf = std::numeric_limits<double>::infinity();
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    while (s <= z[k]) {
      --k;
      s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

double EdgeDistanceField::at(const Vec2& p) const {
  if (!contains(p.x(), p.y()))
    throw std::out_of_range("edge distance query outside the patch");
  return distance(cell_x(p.x()), cell_y(p.y()));
}

EdgeDistanceField edge_distance_field(const HeightField& field) {
  if (field.nx <= 0 || field.ny <= 0)
    throw std::invalid_argument("edge_distance_field: empty field");

  EdgeDistanceField out;
  out.origin = field.origin;
  out.resolution = field.resolution;
  out.nx = field.nx;
  out.ny = field.ny;
  out.distance.resize(field.nx, field.ny);

  const long n_pit = static_cast<long>(field.nx) * field.ny - field.steppable.count();
  if (n_pit == 0) {
    out.distance.setConstant(EdgeDistanceField::kNoBoundary);
    return out;
  }

  // Work on a half-cell lattice so that cell *boundaries* are representable:
  // non-steppable cell (i, j) covers fine points [2i, 2i+2] x [2j, 2j+2] and
  // the query centers sit at odd coordinates. Distances stay exact integers
  // (squared, in half-cell units).
  const int fx = 2 * field.nx + 1;
  const int fy = 2 * field.ny + 1;
  std::vector<double> grid(static_cast<size_t>(fx) * fy, kEmptySite);
  auto idx = [fy](int a, int b) { return static_cast<size_t>(a) * fy + b; };
  for (int i = 0; i < field.nx; ++i)
    for (int j = 0; j < field.ny; ++j)
      if (!field.steppable(i, j))
        for (int a = 2 * i; a <= 2 * i + 2; ++a)
          for (int b = 2 * j; b <= 2 * j + 2; ++b) grid[idx(a, b)] = 0.0;

  const int n_max = std::max(fx, fy);
  std::vector<double> f(n_max), d(n_max), z(n_max + 1);
  std::vector<int> v(n_max);

  // columns (along b), then rows (along a)
  for (int a = 0; a < fx; ++a) {
    for (int b = 0; b < fy; ++b) f[b] = grid[idx(a, b)];
    f.resize(fy);
    d.resize(fy);
    edt_1d(f, d, v, z);
    for (int b = 0; b < fy; ++b) grid[idx(a, b)] = d[b];
    f.resize(n_max);
    d.resize(n_max);
  }
  for (int b = 0; b < fy; ++b) {
    for (int a = 0; a < fx; ++a) f[a] = grid[idx(a, b)];
    f.resize(fx);
    d.resize(fx);
    edt_1d(f, d, v, z);
    for (int a = 0; a < fx; ++a) grid[idx(a, b)] = d[a];
    f.resize(n_max);
    d.resize(n_max);
  }

  const double half_cell = 0.5 * field.resolution;
  for (int i = 0; i < field.nx; ++i) {
    for (int j = 0; j < field.ny; ++j) {
      if (!field.steppable(i, j)) {
        out.distance(i, j) = 0.0;
      } else {
        double d2 = grid[idx(2 * i + 1, 2 * j + 1)];
        out.distance(i, j) = half_cell * std::sqrt(d2);
      }
    }
  }
  return out;
}

bool edge_mask(const EdgeDistanceField& field, const Vec2& p, double d) {
  return field.at(p) <= d;
}

LocalHeightmap raster_local_heightmap(const HeightField& field, const BasePose& base) {
  LocalHeightmap map;
  const double c = std::cos(base.yaw);
  const double s = std::sin(base.yaw);
  int inside = 0;
  for (int i = 0; i < LocalHeightmap::kLengthCells; ++i) {
    for (int j = 0; j < LocalHeightmap::kWidthCells; ++j) {
      Vec2 offset = LocalHeightmap::cell_center(i, j);
      double wx = base.x + c * offset.x() - s * offset.y();
      double wy = base.y + s * offset.x() + c * offset.y();
      if (field.contains(wx, wy)) ++inside;
      map.height(i, j) = field.height_or_pit(wx, wy) - base.z;
    }
  }
  if (inside == 0)
    throw std::out_of_range("local heightmap window entirely outside the patch");
  return map;
}

FootPatch foot_patch(const HeightField& field, const Vec3& foot_position) {
  if (!field.contains(foot_position.x(), foot_position.y()))
    throw std::out_of_range("foot outside the patch");
  FootPatch patch;
  constexpr int kHalf = kFootPatchCells / 2;
  for (int a = 0; a < kFootPatchCells; ++a) {
    for (int b = 0; b < kFootPatchCells; ++b) {
      double wx = foot_position.x() + (a - kHalf) * kFootPatchResolution;
      double wy = foot_position.y() + (b - kHalf) * kFootPatchResolution;
      patch(a, b) = field.height_or_pit(wx, wy) - foot_position.z();
    }
  }
  return patch;
}

double CameraIntrinsics::fx() const {
  return 0.5 * width / std::tan(0.5 * hfov_deg * kPi / 180.0);
}

void CameraIntrinsics::validate() const {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("camera: non-positive image size");
  if (!(hfov_deg > 0.0 && hfov_deg < 180.0))
    throw std::invalid_argument("camera: horizontal FOV outside (0, 180) deg");
  if (!(near_clip > 0.0 && near_clip < far_clip))
    throw std::invalid_argument("camera: need 0 < near < far");
}

Vec3 CameraPose::forward() const {
  double cy = std::cos(yaw), sy = std::sin(yaw);
  double cp = std::cos(pitch_down), sp = std::sin(pitch_down);
  return {cp * cy, cp * sy, -sp};
}

Vec3 CameraPose::right() const {
  return {std::sin(yaw), -std::cos(yaw), 0.0};
}

Vec3 CameraPose::down() const {
  return forward().cross(right());
}

CameraPose head_camera_pose(const BasePose& base, const CameraConfig& config) {
  CameraPose pose;
  double cy = std::cos(base.yaw), sy = std::sin(base.yaw);
  pose.position = {base.x + cy * config.mount_forward,
                   base.y + sy * config.mount_forward,
                   base.z + config.mount_height};
  pose.yaw = base.yaw;
  pose.pitch_down = config.pitch_down_deg * kPi / 180.0;
  return pose;
}

namespace {

// Walks one view ray across the height grid. Direction d is scaled so that
// the parameter s *is* depth along the optical axis (d . forward == 1).
// The terrain is the prism surface of the grid, continued outside the patch
// as the flat pit floor.
double trace_ray(const HeightField& field, const Vec3& origin, const Vec3& d,
                 double s_far) {
  const double res = field.resolution;
  const double x0 = field.origin.x();
  const double y0 = field.origin.y();
  const double x1 = x0 + field.nx * res;
  const double y1 = y0 + field.ny * res;
  const double pit = -field.pit_depth;

  auto plane_hit = [&](double h, double s_lo, double s_hi) {
    // hit of z(s) = oz + dz s against horizontal plane z = h within [s_lo, s_hi]
    if (origin.z() + d.z() * s_lo <= h) return s_lo;  // already at/below
    if (d.z() >= 0.0) return -1.0;
    double s = (h - origin.z()) / d.z();
    return (s >= s_lo && s <= s_hi) ? s : -1.0;
  };

  // Parameter range where the ray's xy-projection overlaps the patch.
  double s_enter = 0.0, s_exit = s_far;
  bool overlaps = true;
  for (int axis = 0; axis < 2 && overlaps; ++axis) {
    double o = axis == 0 ? origin.x() : origin.y();
    double dd = axis == 0 ? d.x() : d.y();
    double lo = axis == 0 ? x0 : y0;
    double hi = axis == 0 ? x1 : y1;
    if (std::abs(dd) < 1e-15) {
      if (o < lo || o >= hi) overlaps = false;
    } else {
      double ta = (lo - o) / dd;
      double tb = (hi - o) / dd;
      if (ta > tb) std::swap(ta, tb);
      s_enter = std::max(s_enter, ta);
      s_exit = std::min(s_exit, tb);
    }
  }
  if (!overlaps || s_enter >= s_exit) {
    double s = plane_hit(pit, 0.0, s_far);
    return s >= 0.0 ? s : s_far;
  }

  // Pit floor before the patch.
  if (s_enter > 0.0) {
    double s = plane_hit(pit, 0.0, s_enter);
    if (s >= 0.0 && s < s_enter) return s;
  }

  // DDA over grid cells between s_enter and s_exit.
  double px = origin.x() + d.x() * s_enter;
  double py = origin.y() + d.y() * s_enter;
  int i = std::clamp(static_cast<int>(std::floor((px - x0) / res)), 0, field.nx - 1);
  int j = std::clamp(static_cast<int>(std::floor((py - y0) / res)), 0, field.ny - 1);
  int step_i = d.x() > 0.0 ? 1 : -1;
  int step_j = d.y() > 0.0 ? 1 : -1;
  auto boundary_s = [&](int cell, int step, double o, double dd, double lo) {
    if (std::abs(dd) < 1e-15) return std::numeric_limits<double>::infinity();
    double edge = lo + (cell + (step > 0 ? 1 : 0)) * res;
    return (edge - o) / dd;
  };
  double s_cur = s_enter;
  double next_x = boundary_s(i, step_i, origin.x(), d.x(), x0);
  double next_y = boundary_s(j, step_j, origin.y(), d.y(), y0);

  while (s_cur < s_exit) {
    double s_cell_end = std::min({next_x, next_y, s_exit});
    double h = field.heights(i, j);
    double s = plane_hit(h, s_cur, s_cell_end);
    if (s >= 0.0) return s;
    s_cur = s_cell_end;
    if (s_cur >= s_exit) break;
    if (next_x <= next_y) {
      i += step_i;
      next_x = boundary_s(i, step_i, origin.x(), d.x(), x0);
      if (i < 0 || i >= field.nx) break;
    } else {
      j += step_j;
      next_y = boundary_s(j, step_j, origin.y(), d.y(), y0);
      if (j < 0 || j >= field.ny) break;
    }
  }

  // Pit floor beyond the patch.
  double s = plane_hit(pit, s_exit, s_far);
  return s >= 0.0 ? s : s_far;
}

}  // namespace

DepthImage render_depth(const HeightField& field, const CameraPose& pose,
                        const CameraIntrinsics& intrinsics) {
  intrinsics.validate();
  if (field.nx <= 0 || field.ny <= 0)
    throw std::invalid_argument("render_depth: empty field");

  DepthImage image;
  image.width = intrinsics.width;
  image.height = intrinsics.height;
  image.intrinsics = intrinsics;
  image.pose = pose;
  image.depth.resize(intrinsics.height, intrinsics.width);

  const Vec3 fwd = pose.forward();
  const Vec3 right = pose.right();
  const Vec3 down = pose.down();
  const double fx = intrinsics.fx();

  for (int v = 0; v < intrinsics.height; ++v) {
    double py = (v + 0.5 - intrinsics.cy()) / fx;
    for (int u = 0; u < intrinsics.width; ++u) {
      double px = (u + 0.5 - intrinsics.cx()) / fx;
      Vec3 d = right * px + down * py + fwd;
      double s = trace_ray(field, pose.position, d, intrinsics.far_clip);
      image.depth(v, u) = static_cast<float>(
          std::clamp(s, intrinsics.near_clip, intrinsics.far_clip));
    }
  }
  return image;
}

void apply_depth_noise(DepthImage& image, double sigma, Pcg32& rng) {
  if (sigma == 0.0) return;
  for (int v = 0; v < image.height; ++v) {
    for (int u = 0; u < image.width; ++u) {
      double scale = 1.0 + rng.normal(0.0, sigma);
      double value = image.depth(v, u) * scale;
      image.depth(v, u) = static_cast<float>(std::clamp(
          value, image.intrinsics.near_clip, image.intrinsics.far_clip));
    }
  }
}

}  // namespace foothold
