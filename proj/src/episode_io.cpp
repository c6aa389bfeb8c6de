#include "foothold/episode_io.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace foothold {

namespace {

using nlohmann::json;

json terrain_tag_to_json(const TerrainTag& tag) {
  return json{{"family", to_string(tag.family)},
              {"difficulty", tag.difficulty},
              {"randomness", to_string(tag.randomness)},
              {"seed", tag.seed},
              {"field_hash", tag.field_hash}};
}

TerrainTag terrain_tag_from_json(const json& j) {
  TerrainTag tag;
  tag.family = terrain_family_from_string(j.at("family").get<std::string>());
  tag.difficulty = j.at("difficulty").get<int>();
  tag.randomness = randomness_from_string(j.at("randomness").get<std::string>());
  tag.seed = j.at("seed").get<uint64_t>();
  tag.field_hash = j.at("field_hash").get<uint64_t>();
  return tag;
}

}  // namespace

std::string episode_to_json(const EpisodeLog& log) {
  json j;
  j["version"] = 1;
  j["terrain"] = terrain_tag_to_json(log.terrain);
  j["command"] = {{"vx", log.command.vx}, {"vy", log.command.vy}, {"wyaw", log.command.wyaw}};
  j["seed"] = log.seed;
  j["dt"] = log.dt;
  j["outcome"] = to_string(log.outcome);
  j["distance_traversed"] = log.distance_traversed;
  j["total_distance"] = log.total_distance;

  json steps = json::array();
  for (const EpisodeStep& step : log.steps) {
    json s;
    s["t"] = step.time;
    s["base"] = {step.base_position.x(), step.base_position.y(), step.base_position.z()};
    s["yaw"] = step.yaw;
    s["stance"] = {step.stance[0], step.stance[1], step.stance[2], step.stance[3]};
    if (!step.contacts.empty()) {
      json contacts = json::array();
      for (const ContactEvent& c : step.contacts) {
        contacts.push_back({{"t", c.time},
                            {"foot", c.foot},
                            {"pos", {c.position.x(), c.position.y(), c.position.z()}},
                            {"cell", {c.cell.x(), c.cell.y()}},
                            {"edge_distance", c.edge_distance}});
      }
      s["contacts"] = std::move(contacts);
    }
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

EpisodeLog episode_from_json(const std::string& line) {
  json j = json::parse(line);
  EpisodeLog log;
  log.terrain = terrain_tag_from_json(j.at("terrain"));
  log.command.vx = j.at("command").at("vx").get<double>();
  log.command.vy = j.at("command").at("vy").get<double>();
  log.command.wyaw = j.at("command").at("wyaw").get<double>();
  log.seed = j.at("seed").get<uint64_t>();
  log.dt = j.at("dt").get<double>();
  std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "success") log.outcome = EpisodeOutcome::kSuccess;
  else if (outcome == "fall") log.outcome = EpisodeOutcome::kFall;
  else if (outcome == "timeout") log.outcome = EpisodeOutcome::kTimeout;
  else throw std::invalid_argument("unknown episode outcome: " + outcome);
  log.distance_traversed = j.at("distance_traversed").get<double>();
  log.total_distance = j.at("total_distance").get<double>();

  for (const json& s : j.at("steps")) {
    EpisodeStep step;
    step.time = s.at("t").get<double>();
    const json& base = s.at("base");
    step.base_position = {base.at(0).get<double>(), base.at(1).get<double>(),
                          base.at(2).get<double>()};
    step.yaw = s.at("yaw").get<double>();
    const json& stance = s.at("stance");
    for (int i = 0; i < kNumFeet; ++i) step.stance[i] = stance.at(i).get<bool>();
    if (s.contains("contacts")) {
      for (const json& c : s.at("contacts")) {
        ContactEvent event;
        event.time = c.at("t").get<double>();
        event.foot = c.at("foot").get<int>();
        const json& pos = c.at("pos");
        event.position = {pos.at(0).get<double>(), pos.at(1).get<double>(),
                          pos.at(2).get<double>()};
        event.cell = {c.at("cell").at(0).get<int>(), c.at("cell").at(1).get<int>()};
        event.edge_distance = c.at("edge_distance").get<double>();
        step.contacts.push_back(event);
      }
    }
    log.steps.push_back(std::move(step));
  }
  return log;
}

void write_episode_jsonl(const std::vector<EpisodeLog>& logs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const EpisodeLog& log : logs) out << episode_to_json(log) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<EpisodeLog> read_episode_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<EpisodeLog> logs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    logs.push_back(episode_from_json(line));
  }
  return logs;
}

void write_terrain_sidecar(const TerrainSpec& spec, const TerrainLayout& layout,
                           const HeightField& field, const std::string& path) {
  json j;
  j["version"] = 1;
  j["spec"] = {{"family", to_string(spec.family)},
               {"difficulty", spec.difficulty},
               {"randomness", to_string(spec.randomness)},
               {"seed", spec.seed}};
  TerrainGeometry g = spec.geometry();
  j["geometry"] = {{"element_width_x", g.element_width_x},
                   {"element_width_y", g.element_width_y},
                   {"gap_x", g.gap_x},
                   {"gap_y", g.gap_y},
                   {"height_variation", g.height_variation},
                   {"pit_depth", layout.pit_depth}};
  j["sparsity"] = sparsity(field);
  j["field_hash"] = field.content_hash();
  json elements = json::array();
  for (const TerrainElement& e : layout.elements) {
    elements.push_back({{"x0", e.x0},
                        {"y0", e.y0},
                        {"width", e.width},
                        {"length", e.length},
                        {"dz", e.dz},
                        {"col", e.col},
                        {"row", e.row}});
  }
  j["elements"] = std::move(elements);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace foothold
