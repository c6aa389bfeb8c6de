#pragma once

#include "foothold/metrics.hpp"
#include "foothold/perception.hpp"
#include "foothold/types.hpp"

#include <string>

namespace foothold {

// Headered little-endian binary grid container ("FGRD", version 1):
//   magic[4] version:u32 kind:u32 flags:u32 nx:u32 ny:u32
//   resolution:f64 origin_x:f64 origin_y:f64 aux:f64
//   payload: f32 x-major (nx rows of ny values), then nx*ny mask bytes when
//   flags bit 0 is set.
// aux carries pit_depth for heightfields, base/foot height for local maps,
// the far clip for depth images and the bandwidth for KDE grids.
enum class GridKind : uint32_t {
  kHeightField = 0,
  kLocalHeightmap = 1,
  kDepth = 2,
  kDensity = 3,
};

void write_heightfield(const HeightField& field, const std::string& path);
HeightField read_heightfield(const std::string& path);

void write_local_heightmap(const LocalHeightmap& map, const std::string& path);
LocalHeightmap read_local_heightmap(const std::string& path);

void write_depth_grid(const DepthImage& image, const std::string& path);
void write_kde_grid(const KdeGrid& grid, const std::string& path);

// CSV: one row per x index, ny comma-separated values.
void write_heightfield_csv(const HeightField& field, const std::string& heights_path,
                           const std::string& mask_path);
void write_local_heightmap_csv(const LocalHeightmap& map, const std::string& path);
void write_kde_csv(const KdeGrid& grid, const std::string& path);

// 16-bit PGM, millimeter quantization, big-endian sample bytes.
void write_depth_pgm(const DepthImage& image, const std::string& path);

}  // namespace foothold
