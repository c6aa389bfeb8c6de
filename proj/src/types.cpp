#include "foothold/types.hpp"

#include <cstring>
#include <stdexcept>

namespace foothold {

void Command::validate() const {
  if (!std::isfinite(vx) || !std::isfinite(vy) || !std::isfinite(wyaw))
    throw std::invalid_argument("command: non-finite component");
  if (vy != 0.0) throw std::invalid_argument("command: vy must be zero");
  if (vx < 0.0 || vx > 1.5)
    throw std::invalid_argument("command: vx outside [0, 1.5]");
  if (vx > 0.0 && vx < 0.3)
    throw std::invalid_argument("command: forward commands below 0.3 m/s are clamped to zero");
  if (wyaw < -1.2 || wyaw > 1.2)
    throw std::invalid_argument("command: wyaw outside [-1.2, 1.2]");
}

void RobotState::derive_contacts(double force_threshold) {
  for (int i = 0; i < kNumFeet; ++i)
    contact_state[i] = foot_contact_forces[i].norm() > force_threshold;
}

Vec3 gravity_in_body_frame(double roll, double pitch) {
  // g_body = (Rz Ry Rx)^T * (0, 0, -1); the yaw factor drops out.
  double sr = std::sin(roll), cr = std::cos(roll);
  double sp = std::sin(pitch), cp = std::cos(pitch);
  return {sp, -sr * cp, -cr * cp};
}

uint64_t HeightField::content_hash() const {
  // FNV-1a over the geometric header and both grids; identifies a terrain
  // patch across serialization boundaries.
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  double header[6] = {origin.x(), origin.y(), resolution,
                      static_cast<double>(nx), static_cast<double>(ny), pit_depth};
  mix(header, sizeof(header));
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      double v = heights(i, j);
      mix(&v, sizeof(v));
      unsigned char s = steppable(i, j) ? 1 : 0;
      mix(&s, 1);
    }
  }
  return h;
}

}  // namespace foothold
