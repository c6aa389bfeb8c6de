#include "foothold/terrain.hpp"

#include "foothold/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace foothold {

namespace {

constexpr double kPitDepthMin = 0.2;
constexpr double kPitDepthMax = 0.7;

// Maximum-difficulty geometry; easier levels interpolate toward wider
// elements and narrower gaps.
constexpr double kStoneWidthMax = 0.3, kStoneWidthMin = 0.2;
constexpr double kStoneGapX = 0.25, kStoneGapY = 0.175;
constexpr double kBalanceBeamWidthMax = 0.3, kBalanceBeamWidthMin = 0.175;
constexpr double kSteppingBeamWidthMax = 0.3, kSteppingBeamWidthMin = 0.15;
constexpr double kSteppingBeamGap = 0.275;
constexpr double kGapWidthMax = 0.7;
constexpr double kHeightVariation = 0.05;

double level_fraction(int difficulty) { return (difficulty - 1) / 9.0; }

// Interpolated dimensions snap to the raster: element widths to whole cells,
// gaps to half cells. A whole-cell-wide element covers exactly its cell
// count at any lattice phase, which keeps measured sparsity free of
// resonance bias and monotone across difficulty levels. All
// maximum-difficulty dimensions are already on these lattices.
double snap_cell(double x) { return std::round(x / kGridResolution) * kGridResolution; }
double snap_half_cell(double x) {
  return std::round(x / (0.5 * kGridResolution)) * (0.5 * kGridResolution);
}

// First cell index whose center (i + 0.5) * res is >= a. The 1e-9 nudge
// absorbs last-bit noise from the difficulty interpolation so that intervals
// whose true width is a whole number of cells always cover exactly that many
// centers, independent of lattice phase.
int first_center_at_or_after(double a, double res) {
  return static_cast<int>(std::ceil(a / res - 0.5 - 1e-9));
}

}  // namespace

std::string to_string(TerrainFamily family) {
  switch (family) {
    case TerrainFamily::kFlat: return "flat";
    case TerrainFamily::kSteppingStones: return "stepping-stones";
    case TerrainFamily::kBalanceBeam: return "balance-beam";
    case TerrainFamily::kSteppingBeams: return "stepping-beams";
    case TerrainFamily::kGaps: return "gaps";
  }
  throw std::invalid_argument("unknown terrain family");
}

std::string to_string(Randomness randomness) {
  return randomness == Randomness::kLow ? "low" : "high";
}

TerrainFamily terrain_family_from_string(const std::string& name) {
  if (name == "flat") return TerrainFamily::kFlat;
  if (name == "stepping-stones" || name == "stones") return TerrainFamily::kSteppingStones;
  if (name == "balance-beam" || name == "beam") return TerrainFamily::kBalanceBeam;
  if (name == "stepping-beams" || name == "beams") return TerrainFamily::kSteppingBeams;
  if (name == "gaps") return TerrainFamily::kGaps;
  throw std::invalid_argument("unknown terrain family: " + name);
}

Randomness randomness_from_string(const std::string& name) {
  if (name == "low") return Randomness::kLow;
  if (name == "high") return Randomness::kHigh;
  throw std::invalid_argument("unknown randomness level: " + name);
}

void TerrainSpec::validate() const {
  if (difficulty < 1 || difficulty > 10)
    throw std::invalid_argument("terrain difficulty must be in 1..10");
  if (randomness == Randomness::kHigh && family != TerrainFamily::kSteppingStones)
    throw std::invalid_argument("high randomness applies to stepping stones only");
}

TerrainGeometry TerrainSpec::geometry() const {
  validate();
  double f = level_fraction(difficulty);
  TerrainGeometry g;
  g.height_variation = kHeightVariation;
  switch (family) {
    case TerrainFamily::kFlat:
      g.element_width_x = kPatchLengthX;
      g.element_width_y = kPatchLengthY;
      g.height_variation = 0.0;
      break;
    case TerrainFamily::kSteppingStones: {
      double w = snap_cell(kStoneWidthMax - (kStoneWidthMax - kStoneWidthMin) * f);
      g.element_width_x = w;
      g.element_width_y = w;
      g.gap_x = snap_half_cell(kStoneGapX * f);
      g.gap_y = snap_half_cell(kStoneGapY * f);
      break;
    }
    case TerrainFamily::kBalanceBeam:
      g.element_width_x = kPatchLengthX;
      g.element_width_y = snap_half_cell(
          kBalanceBeamWidthMax - (kBalanceBeamWidthMax - kBalanceBeamWidthMin) * f);
      break;
    case TerrainFamily::kSteppingBeams:
      g.element_width_x = snap_cell(
          kSteppingBeamWidthMax - (kSteppingBeamWidthMax - kSteppingBeamWidthMin) * f);
      g.element_width_y = kPatchLengthY;
      g.gap_x = snap_half_cell(kSteppingBeamGap * f);
      break;
    case TerrainFamily::kGaps:
      // A zero-width gap would degenerate the family, so level 1 keeps 20%
      // of the maximum width.
      g.gap_x = snap_half_cell(kGapWidthMax * (0.2 + 0.8 * f));
      g.height_variation = 0.0;
      break;
  }
  return g;
}

TerrainLayout base_layout(const TerrainSpec& spec) {
  spec.validate();
  TerrainGeometry g = spec.geometry();

  TerrainLayout layout;
  layout.spec = spec;
  Pcg32 pit_rng = make_rng(spec.seed, RngStream::kPitDepth);
  layout.pit_depth = pit_rng.uniform(kPitDepthMin, kPitDepthMax);

  Pcg32 height_rng = make_rng(spec.seed, RngStream::kElementHeights);
  auto element_dz = [&]() {
    return g.height_variation > 0.0
               ? height_rng.uniform(-g.height_variation, g.height_variation)
               : 0.0;
  };

  switch (spec.family) {
    case TerrainFamily::kFlat:
      layout.elements.push_back({0.0, 0.0, kPatchLengthX, kPatchLengthY, 0.0, 0, 0});
      break;

    case TerrainFamily::kSteppingStones: {
      double period_x = g.element_width_x + g.gap_x;
      double period_y = g.element_width_y + g.gap_y;
      // Lattice inset: half a gap along x, one full gap along y. This keeps
      // the 8 m x 4 m patch average at the asymptotic lattice sparsity
      // (76.3% at level 10) instead of over-weighting edge rows.
      double inset_x = 0.5 * g.gap_x;
      double inset_y = 1.0 * g.gap_y;
      for (int col = 0;; ++col) {
        double x0 = inset_x + col * period_x;
        if (x0 >= kPatchLengthX) break;
        for (int row = 0;; ++row) {
          double y0 = inset_y + row * period_y;
          if (y0 >= kPatchLengthY) break;
          layout.elements.push_back(
              {x0, y0, g.element_width_x, g.element_width_y, element_dz(), col, row});
        }
      }
      break;
    }

    case TerrainFamily::kBalanceBeam: {
      double y0 = 0.5 * (kPatchLengthY - g.element_width_y);
      layout.elements.push_back(
          {0.0, y0, kPatchLengthX, g.element_width_y, element_dz(), 0, 0});
      break;
    }

    case TerrainFamily::kSteppingBeams: {
      double period_x = g.element_width_x + g.gap_x;
      double inset_x = 0.5 * g.gap_x;
      for (int col = 0;; ++col) {
        double x0 = inset_x + col * period_x;
        if (x0 >= kPatchLengthX) break;
        layout.elements.push_back(
            {x0, 0.0, g.element_width_x, kPatchLengthY, element_dz(), col, 0});
      }
      break;
    }

    case TerrainFamily::kGaps: {
      double band_lo = 0.5 * (kPatchLengthX - g.gap_x);
      double band_hi = 0.5 * (kPatchLengthX + g.gap_x);
      layout.elements.push_back({0.0, 0.0, band_lo, kPatchLengthY, 0.0, 0, 0});
      layout.elements.push_back(
          {band_hi, 0.0, kPatchLengthX - band_hi, kPatchLengthY, 0.0, 1, 0});
      break;
    }
  }
  return layout;
}

TerrainLayout jittered_layout(const TerrainSpec& spec, double stone_jitter_factor,
                              double column_jitter_factor) {
  if (spec.family != TerrainFamily::kSteppingStones)
    throw std::invalid_argument("stone randomization applies to stepping stones only");
  TerrainLayout layout = base_layout(spec);
  TerrainGeometry g = spec.geometry();

  int n_cols = 0;
  for (const TerrainElement& e : layout.elements) n_cols = std::max(n_cols, e.col + 1);

  Pcg32 col_rng = make_rng(spec.seed, RngStream::kColumnOffsets);
  std::vector<double> column_dx(n_cols);
  for (double& dx : column_dx)
    dx = col_rng.uniform(-column_jitter_factor * g.gap_x, column_jitter_factor * g.gap_x);

  Pcg32 jitter_rng = make_rng(spec.seed, RngStream::kStoneJitter);
  for (TerrainElement& e : layout.elements) {
    double jx = jitter_rng.uniform(-stone_jitter_factor * g.gap_x,
                                   stone_jitter_factor * g.gap_x);
    double jy = jitter_rng.uniform(-stone_jitter_factor * g.gap_y,
                                   stone_jitter_factor * g.gap_y);
    e.x0 += jx + column_dx[e.col];
    e.y0 += jy;
  }
  return layout;
}

HeightField rasterize(const TerrainLayout& layout) {
  HeightField field;
  field.origin = {0.0, 0.0};
  field.resolution = kGridResolution;
  field.nx = static_cast<int>(std::lround(kPatchLengthX / kGridResolution));
  field.ny = static_cast<int>(std::lround(kPatchLengthY / kGridResolution));
  field.pit_depth = layout.pit_depth;
  field.heights = Eigen::MatrixXd::Constant(field.nx, field.ny, -layout.pit_depth);
  field.steppable = BoolGrid::Constant(field.nx, field.ny, false);

  for (const TerrainElement& e : layout.elements) {
    int i0 = std::max(0, first_center_at_or_after(e.x0, field.resolution));
    int i1 = std::min(field.nx, first_center_at_or_after(e.x0 + e.width, field.resolution));
    int j0 = std::max(0, first_center_at_or_after(e.y0, field.resolution));
    int j1 = std::min(field.ny, first_center_at_or_after(e.y0 + e.length, field.resolution));
    for (int i = i0; i < i1; ++i) {
      for (int j = j0; j < j1; ++j) {
        field.steppable(i, j) = true;
        field.heights(i, j) = e.dz;
      }
    }
  }
  return field;
}

HeightField generate(const TerrainSpec& spec) {
  spec.validate();
  if (spec.family == TerrainFamily::kSteppingStones && spec.randomness == Randomness::kHigh)
    return rasterize(jittered_layout(spec));
  return rasterize(base_layout(spec));
}

HeightField randomize_stones(const HeightField& field, const TerrainSpec& spec) {
  if (spec.family != TerrainFamily::kSteppingStones)
    throw std::invalid_argument("randomize_stones: spec is not stepping stones");
  if (spec.randomness != Randomness::kHigh)
    throw std::invalid_argument("randomize_stones: spec is not high-randomness");
  if (field.nx == 0 || field.ny == 0)
    throw std::invalid_argument("randomize_stones: empty field");
  return rasterize(jittered_layout(spec));
}

double sparsity(const HeightField& field) {
  if (field.nx <= 0 || field.ny <= 0)
    throw std::invalid_argument("sparsity: empty field");
  long total = static_cast<long>(field.nx) * field.ny;
  long non_steppable = total - field.steppable.count();
  return static_cast<double>(non_steppable) / static_cast<double>(total);
}

}  // namespace foothold
