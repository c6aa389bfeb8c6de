#pragma once

#include "foothold/terrain.hpp"
#include "foothold/walker.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace foothold {

// One JSON object per line, one line per episode.
void write_episode_jsonl(const std::vector<EpisodeLog>& logs, const std::string& path);
std::vector<EpisodeLog> read_episode_jsonl(const std::string& path);

std::string episode_to_json(const EpisodeLog& log);
EpisodeLog episode_from_json(const std::string& line);

// Terrain sidecar: spec, realized geometry and sparsity for a generated
// patch.
void write_terrain_sidecar(const TerrainSpec& spec, const TerrainLayout& layout,
                           const HeightField& field, const std::string& path);

}  // namespace foothold
