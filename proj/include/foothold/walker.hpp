#pragma once

#include "foothold/config.hpp"
#include "foothold/perception.hpp"
#include "foothold/terrain.hpp"
#include "foothold/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace foothold {

/// Greedy foothold choice on the edge-distance field: the steppable cell
/// center within `reach` of the nominal point that maximizes edge distance,
/// ties broken by least distance to nominal, then lexicographic cell index.
/// Infeasible when no candidate clears min_clearance (candidates must lie
/// strictly outside the inner penalty band).
struct Foothold {
  Eigen::Vector2i cell;
  Vec2 position;          // cell center, world frame
  double edge_distance;   // meters
};

std::optional<Foothold> plan_foothold(const EdgeDistanceField& field,
                                      const Vec2& nominal, double reach,
                                      double min_clearance = 0.025);

enum class EpisodeOutcome { kSuccess, kFall, kTimeout };

std::string to_string(EpisodeOutcome outcome);

struct ContactEvent {
  double time{0.0};
  int foot{0};  // 0 FL, 1 FR, 2 RL, 3 RR
  Vec3 position{Vec3::Zero()};
  Eigen::Vector2i cell{0, 0};
  double edge_distance{0.0};
};

struct EpisodeStep {
  double time{0.0};
  Vec3 base_position{Vec3::Zero()};
  double yaw{0.0};
  std::array<bool, kNumFeet> stance{true, true, true, true};
  std::vector<ContactEvent> contacts;  // touchdowns at this step
};

/// Identifies the terrain a log was recorded on.
struct TerrainTag {
  TerrainFamily family{TerrainFamily::kFlat};
  int difficulty{1};
  Randomness randomness{Randomness::kLow};
  uint64_t seed{0};
  uint64_t field_hash{0};
};

struct EpisodeLog {
  TerrainTag terrain;
  Command command;
  uint64_t seed{0};
  double dt{0.02};
  EpisodeOutcome outcome{EpisodeOutcome::kTimeout};
  double distance_traversed{0.0};
  double total_distance{0.0};
  std::vector<EpisodeStep> steps;
};

// Runs one scripted trot episode: the base advances kinematically at the
// command, swing feet are placed by plan_foothold, a Fall is declared when
// any placement is infeasible, Success when the goal distance is covered.
// Deterministic in (field, cmd, seed, config).
EpisodeLog run_episode(const HeightField& field, const Command& cmd,
                       double max_time, uint64_t seed,
                       const WalkerConfig& walker = {},
                       const RobotConfig& robot = {});

// Fills a RobotState for one log step: velocities by finite differences,
// body weight split over stance feet, torques zero.
RobotState synthesize_state(const EpisodeLog& log, size_t step_index,
                            const RobotConfig& robot);

}  // namespace foothold
