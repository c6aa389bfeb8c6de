#include "foothold/config.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace foothold {

namespace {

using nlohmann::json;

// Applies `src` onto the struct fields via the setter map; throws on keys
// that do not exist so typos in config files fail loudly.
template <typename Apply>
void apply_section(const json& root, const char* section, Apply&& apply) {
  if (!root.contains(section)) return;
  const json& j = root.at(section);
  if (!j.is_object())
    throw std::invalid_argument(std::string("config: section '") + section +
                                "' must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) apply(it.key(), it.value());
}

[[noreturn]] void unknown_key(const char* section, const std::string& key) {
  throw std::invalid_argument(std::string("config: unknown key '") + section + "." + key + "'");
}

}  // namespace

AppConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  json root = json::parse(in);

  AppConfig config;

  apply_section(root, "robot", [&](const std::string& key, const json& value) {
    auto& r = config.robot;
    if (key == "mass") r.mass = value.get<double>();
    else if (key == "standing_height") r.standing_height = value.get<double>();
    else if (key == "contact_force_threshold") r.contact_force_threshold = value.get<double>();
    else if (key == "hip_longitudinal") r.hip_longitudinal = value.get<double>();
    else if (key == "hip_lateral") r.hip_lateral = value.get<double>();
    else if (key == "default_joint_angles") {
      if (!value.is_array() || value.size() != 12)
        throw std::invalid_argument("config: default_joint_angles needs 12 values");
      for (int i = 0; i < 12; ++i) r.default_joint_angles(i) = value.at(i).get<double>();
    } else unknown_key("robot", key);
  });

  apply_section(root, "camera", [&](const std::string& key, const json& value) {
    auto& c = config.camera;
    if (key == "width") c.width = value.get<int>();
    else if (key == "height") c.height = value.get<int>();
    else if (key == "hfov_deg") c.hfov_deg = value.get<double>();
    else if (key == "near_clip") c.near_clip = value.get<double>();
    else if (key == "far_clip") c.far_clip = value.get<double>();
    else if (key == "mount_forward") c.mount_forward = value.get<double>();
    else if (key == "mount_height") c.mount_height = value.get<double>();
    else if (key == "pitch_down_deg") c.pitch_down_deg = value.get<double>();
    else if (key == "noise_sigma") c.noise_sigma = value.get<double>();
    else unknown_key("camera", key);
  });

  apply_section(root, "walker", [&](const std::string& key, const json& value) {
    auto& w = config.walker;
    if (key == "step_frequency") w.step_frequency = value.get<double>();
    else if (key == "reach") w.reach = value.get<double>();
    else if (key == "min_clearance") w.min_clearance = value.get<double>();
    else if (key == "dt") w.dt = value.get<double>();
    else if (key == "goal_distance") w.goal_distance = value.get<double>();
    else if (key == "start_x") w.start_x = value.get<double>();
    else unknown_key("walker", key);
  });

  apply_section(root, "schedule", [&](const std::string& key, const json& value) {
    auto& s = config.schedule;
    if (key == "reward_window") s.reward_window = value.get<int>();
    else if (key == "t_start") s.t_start = value.get<double>();
    else if (key == "t_end") s.t_end = value.get<double>();
    else if (key == "p_max") s.p_max = value.get<double>();
    else if (key == "promote_threshold") s.promote_threshold = value.get<double>();
    else if (key == "demote_threshold") s.demote_threshold = value.get<double>();
    else if (key == "gaps_fraction") s.gaps_fraction = value.get<double>();
    else unknown_key("schedule", key);
  });

  for (auto it = root.begin(); it != root.end(); ++it) {
    const std::string& key = it.key();
    if (key != "robot" && key != "camera" && key != "walker" && key != "schedule")
      throw std::invalid_argument("config: unknown section '" + key + "'");
  }
  return config;
}

void save_config(const AppConfig& config, const std::string& path) {
  json j;
  j["robot"] = {{"mass", config.robot.mass},
                {"standing_height", config.robot.standing_height},
                {"contact_force_threshold", config.robot.contact_force_threshold},
                {"hip_longitudinal", config.robot.hip_longitudinal},
                {"hip_lateral", config.robot.hip_lateral}};
  json joints = json::array();
  for (int i = 0; i < 12; ++i) joints.push_back(config.robot.default_joint_angles(i));
  j["robot"]["default_joint_angles"] = std::move(joints);
  j["camera"] = {{"width", config.camera.width},
                 {"height", config.camera.height},
                 {"hfov_deg", config.camera.hfov_deg},
                 {"near_clip", config.camera.near_clip},
                 {"far_clip", config.camera.far_clip},
                 {"mount_forward", config.camera.mount_forward},
                 {"mount_height", config.camera.mount_height},
                 {"pitch_down_deg", config.camera.pitch_down_deg},
                 {"noise_sigma", config.camera.noise_sigma}};
  j["walker"] = {{"step_frequency", config.walker.step_frequency},
                 {"reach", config.walker.reach},
                 {"min_clearance", config.walker.min_clearance},
                 {"dt", config.walker.dt},
                 {"goal_distance", config.walker.goal_distance},
                 {"start_x", config.walker.start_x}};
  j["schedule"] = {{"reward_window", config.schedule.reward_window},
                   {"t_start", config.schedule.t_start},
                   {"t_end", config.schedule.t_end},
                   {"p_max", config.schedule.p_max},
                   {"promote_threshold", config.schedule.promote_threshold},
                   {"demote_threshold", config.schedule.demote_threshold},
                   {"gaps_fraction", config.schedule.gaps_fraction}};

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open config for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace foothold
