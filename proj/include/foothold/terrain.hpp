#pragma once

#include "foothold/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace foothold {

enum class TerrainFamily {
  kFlat,  // auxiliary flat ground used by the curriculum
  kSteppingStones,
  kBalanceBeam,
  kSteppingBeams,
  kGaps,
};

enum class Randomness { kLow, kHigh };

std::string to_string(TerrainFamily family);
std::string to_string(Randomness randomness);
TerrainFamily terrain_family_from_string(const std::string& name);
Randomness randomness_from_string(const std::string& name);

/// Family geometry at a given difficulty level. Gap widths for stones and
/// beams ramp linearly from zero (level 1 is near-continuous) to the
/// maximum-difficulty values; element widths shrink linearly from 0.3 m.
struct TerrainGeometry {
  double element_width_x{0.0};  // stone width / beam thickness along x, m
  double element_width_y{0.0};  // stone width along y (full-width for beams), m
  double gap_x{0.0};            // m
  double gap_y{0.0};            // m
  double height_variation{0.05};  // per-element offset bound, m
};

struct TerrainSpec {
  TerrainFamily family{TerrainFamily::kSteppingStones};
  int difficulty{1};  // 1..10
  Randomness randomness{Randomness::kLow};
  uint64_t seed{0};

  TerrainGeometry geometry() const;  // throws on invalid family/difficulty
  void validate() const;
};

/// One rectangular platform element, continuous coordinates, before
/// rasterization. dz is the per-element height offset.
struct TerrainElement {
  double x0{0.0};
  double y0{0.0};
  double width{0.0};   // along x
  double length{0.0};  // along y
  double dz{0.0};
  int col{0};
  int row{0};
};

/// Continuous-space layout realized for one patch: the element list plus the
/// patch-wide pit depth. This is what the JSON sidecar reports.
struct TerrainLayout {
  TerrainSpec spec;
  double pit_depth{0.0};
  std::vector<TerrainElement> elements;
};

// Unjittered layout for a spec (pit depth and element heights already
// sampled from the seed).
TerrainLayout base_layout(const TerrainSpec& spec);

// Two-level stone randomization: every stone shifts on both axes by
// uniform offsets in [-0.5 gap, +0.5 gap] (per-axis gap) and every column
// additionally shifts along x by uniform in [-0.45 gap_x, +0.45 gap_x].
// The scale factors are parameters so tests can force them to zero.
TerrainLayout jittered_layout(const TerrainSpec& spec,
                              double stone_jitter_factor = 0.5,
                              double column_jitter_factor = 0.45);

// Rasterize a layout onto the 8 m x 4 m grid: a cell is steppable iff its
// center lies in some element; later elements win on overlap. Everything
// else is pit floor at -pit_depth.
HeightField rasterize(const TerrainLayout& layout);

// Generate the patch for a spec. Deterministic in the seed.
HeightField generate(const TerrainSpec& spec);

// Re-derive the layout for `spec`, apply stone randomization and rasterize.
// Valid only for high-randomness stepping stones.
HeightField randomize_stones(const HeightField& field, const TerrainSpec& spec);

// Fraction of non-steppable cells.
double sparsity(const HeightField& field);

}  // namespace foothold
