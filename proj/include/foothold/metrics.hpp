#pragma once

#include "foothold/perception.hpp"
#include "foothold/types.hpp"
#include "foothold/walker.hpp"

#include <span>
#include <vector>

namespace foothold {

// Fraction of runs that completed the full distance. Throws on an empty set.
double success_rate(std::span<const EpisodeLog> logs, double goal_distance);

struct MeanStd {
  double mean{0.0};
  double std_dev{0.0};  // population
};

// Per-episode distance_traversed / total_distance, aggregated.
MeanStd traversing_rate(std::span<const EpisodeLog> logs);

// Fraction of logged contacts whose edge distance is <= threshold. The edge
// field must describe the terrain the logs were recorded on; mismatches
// (out-of-range cells or recorded distances that disagree with the field)
// raise std::invalid_argument.
double mean_edge_violation(std::span<const EpisodeLog> logs,
                           const EdgeDistanceField& edge_field, double threshold);

struct KdeGridSpec {
  Vec2 origin{0.0, 0.0};
  double resolution{0.05};
  int nx{0};
  int ny{0};
};

struct KdeGrid {
  Vec2 origin{0.0, 0.0};
  double resolution{0.05};
  int nx{0};
  int ny{0};
  Eigen::MatrixXd density;  // integrates to ~1 when the grid covers the mass
};

// Isotropic Gaussian KDE of 2D contact locations evaluated at grid cell
// centers. Throws on zero contacts or non-positive bandwidth.
KdeGrid foothold_kde(std::span<const Vec2> contacts, double bandwidth,
                     const KdeGridSpec& grid);

// Silverman's rule for 2D isotropic kernels: sigma_avg * n^(-1/6). Falls
// back to one grid cell (5 cm) when the spread is zero (e.g. one contact).
double silverman_bandwidth(std::span<const Vec2> contacts);

// Collects contact positions from a set of logs.
std::vector<Vec2> collect_contacts(std::span<const EpisodeLog> logs);

struct ReconstructionError {
  double mae{0.0};
  double rmse{0.0};
};

// Per-cell error between an estimated and a ground-truth heightmap grid.
ReconstructionError reconstruction_error(const Eigen::Ref<const Eigen::MatrixXd>& estimate,
                                         const Eigen::Ref<const Eigen::MatrixXd>& truth);
ReconstructionError reconstruction_error(const LocalHeightmap& estimate,
                                         const LocalHeightmap& truth);

}  // namespace foothold
