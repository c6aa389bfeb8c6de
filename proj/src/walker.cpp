#include "foothold/walker.hpp"

#include "foothold/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace foothold {

std::string to_string(EpisodeOutcome outcome) {
  switch (outcome) {
    case EpisodeOutcome::kSuccess: return "success";
    case EpisodeOutcome::kFall: return "fall";
    case EpisodeOutcome::kTimeout: return "timeout";
  }
  throw std::invalid_argument("unknown episode outcome");
}

std::optional<Foothold> plan_foothold(const EdgeDistanceField& field,
                                      const Vec2& nominal, double reach,
                                      double min_clearance) {
  if (!field.contains(nominal.x(), nominal.y()))
    throw std::out_of_range("plan_foothold: nominal outside the patch");
  if (reach <= 0.0) throw std::invalid_argument("plan_foothold: reach must be positive");

  const double res = field.resolution;
  int i_lo = std::max(0, field.cell_x(nominal.x() - reach));
  int i_hi = std::min(field.nx - 1, field.cell_x(nominal.x() + reach));
  int j_lo = std::max(0, field.cell_y(nominal.y() - reach));
  int j_hi = std::min(field.ny - 1, field.cell_y(nominal.y() + reach));

  bool found = false;
  Foothold best{};
  double best_dist2 = 0.0;
  const double reach2 = reach * reach;
  for (int i = i_lo; i <= i_hi; ++i) {
    for (int j = j_lo; j <= j_hi; ++j) {
      double d = field.distance(i, j);
      if (d <= min_clearance) continue;  // non-steppable (0) or inside the edge band
      double cx = field.origin.x() + (i + 0.5) * res;
      double cy = field.origin.y() + (j + 0.5) * res;
      double dx = cx - nominal.x();
      double dy = cy - nominal.y();
      double dist2 = dx * dx + dy * dy;
      if (dist2 > reach2) continue;
      bool better = false;
      if (!found) {
        better = true;
      } else if (d != best.edge_distance) {
        better = d > best.edge_distance;
      } else if (dist2 != best_dist2) {
        better = dist2 < best_dist2;
      } else {
        better = i < best.cell.x() || (i == best.cell.x() && j < best.cell.y());
      }
      if (better) {
        found = true;
        best.cell = {i, j};
        best.position = {cx, cy};
        best.edge_distance = d;
        best_dist2 = dist2;
      }
    }
  }
  if (!found) return std::nullopt;
  return best;
}

namespace {

constexpr double kGravity = 9.81;

// Foot order: FL, FR, RL, RR. Trot pairs: A = {FL, RR}, B = {FR, RL}.
constexpr std::array<int, 2> kPairA = {0, 3};
constexpr std::array<int, 2> kPairB = {1, 2};

Vec2 hip_offset(int foot, const RobotConfig& robot) {
  double lx = foot < 2 ? robot.hip_longitudinal : -robot.hip_longitudinal;
  double ly = (foot == 0 || foot == 2) ? robot.hip_lateral : -robot.hip_lateral;
  return {lx, ly};
}

Vec2 rotate(const Vec2& v, double yaw) {
  double c = std::cos(yaw), s = std::sin(yaw);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

}  // namespace

EpisodeLog run_episode(const HeightField& field, const Command& cmd,
                       double max_time, uint64_t seed, const WalkerConfig& walker,
                       const RobotConfig& robot) {
  cmd.validate();
  if (max_time <= 0.0) throw std::invalid_argument("run_episode: max_time must be positive");

  EpisodeLog log;
  log.command = cmd;
  log.seed = seed;
  log.dt = walker.dt;
  log.total_distance = walker.goal_distance;
  log.terrain.field_hash = field.content_hash();

  EdgeDistanceField edge_field = edge_distance_field(field);

  Pcg32 rng = make_rng(seed, RngStream::kEpisode);
  const double x0 = field.origin.x() + walker.start_x + rng.uniform(0.0, 0.25);
  const double y_center = field.origin.y() + 0.5 * field.ny * field.resolution;
  double x = x0;
  double y = y_center + rng.uniform(-0.05, 0.05);
  double yaw = 0.0;

  const double half_cycle = 0.5 / walker.step_frequency;
  const double lead = cmd.vx / (2.0 * walker.step_frequency);
  const bool walking = cmd.vx > 0.0 || cmd.wyaw != 0.0;

  std::array<Vec3, kNumFeet> foot_pos{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(),
                                      Vec3::Zero()};
  std::array<bool, kNumFeet> stance{true, true, true, true};

  // Plans one foot at the current base pose; returns false on infeasible.
  auto place_foot = [&](int foot, double time, std::vector<ContactEvent>& events) {
    Vec2 offset = hip_offset(foot, robot);
    offset.x() += lead;
    Vec2 nominal = Vec2{x, y} + rotate(offset, yaw);
    std::optional<Foothold> hold;
    try {
      hold = plan_foothold(edge_field, nominal, walker.reach, walker.min_clearance);
    } catch (const std::out_of_range&) {
      return false;  // walked off the patch
    }
    if (!hold) return false;
    double z = field.heights(hold->cell.x(), hold->cell.y());
    foot_pos[foot] = {hold->position.x(), hold->position.y(), z};
    events.push_back({time, foot, foot_pos[foot], hold->cell, hold->edge_distance});
    return true;
  };

  auto base_height = [&]() {
    double sum = 0.0;
    int n = 0;
    for (int i = 0; i < kNumFeet; ++i) {
      if (stance[i]) {
        sum += foot_pos[i].z();
        ++n;
      }
    }
    return (n > 0 ? sum / n : 0.0) + robot.standing_height;
  };

  // Initial stand: all four feet planted at once.
  EpisodeStep step0;
  step0.time = 0.0;
  bool start_ok = true;
  for (int foot = 0; foot < kNumFeet; ++foot)
    if (!place_foot(foot, 0.0, step0.contacts)) start_ok = false;
  step0.base_position = {x, y, base_height()};
  step0.yaw = yaw;
  step0.stance = stance;
  log.steps.push_back(step0);
  if (!start_ok) {
    log.outcome = EpisodeOutcome::kFall;
    log.distance_traversed = 0.0;
    return log;
  }
  if (walker.goal_distance <= 0.0) {
    log.outcome = EpisodeOutcome::kSuccess;
    log.distance_traversed = 0.0;
    return log;
  }

  int next_event = 1;  // events at k * half_cycle; odd k move pair B, even k pair A
  const long max_steps = std::lround(std::ceil(max_time / walker.dt));
  log.outcome = EpisodeOutcome::kTimeout;

  for (long n = 1; n <= max_steps; ++n) {
    double t = static_cast<double>(n) * walker.dt;
    yaw += cmd.wyaw * walker.dt;
    x += cmd.vx * std::cos(yaw) * walker.dt;
    y += cmd.vx * std::sin(yaw) * walker.dt;

    EpisodeStep step;
    step.time = t;
    bool fell = false;

    while (walking && next_event * half_cycle <= t) {
      const auto& pair = (next_event % 2 == 1) ? kPairB : kPairA;
      for (int foot : pair) {
        if (!place_foot(foot, t, step.contacts)) {
          fell = true;
          break;
        }
      }
      ++next_event;
      if (fell) break;
    }

    // 50% duty trot: a pair is in swing for the half cycle before its
    // touchdown event.
    if (walking) {
      double next_b = std::ceil((t / half_cycle - 1.0) / 2.0) * 2.0 + 1.0;
      double next_a = std::ceil((t / half_cycle) / 2.0) * 2.0;
      if (next_a <= 0.0) next_a = 2.0;
      bool a_swing = t > (next_a - 1.0) * half_cycle && t < next_a * half_cycle;
      bool b_swing = t > (next_b - 1.0) * half_cycle && t < next_b * half_cycle;
      for (int foot : kPairA) stance[foot] = !a_swing;
      for (int foot : kPairB) stance[foot] = !b_swing;
    }

    step.base_position = {x, y, base_height()};
    step.yaw = yaw;
    step.stance = stance;
    log.steps.push_back(step);
    log.distance_traversed = std::max(log.distance_traversed, x - x0);

    if (fell) {
      log.outcome = EpisodeOutcome::kFall;
      break;
    }
    if (x - x0 >= walker.goal_distance) {
      log.outcome = EpisodeOutcome::kSuccess;
      log.distance_traversed = walker.goal_distance;
      break;
    }
  }
  return log;
}

RobotState synthesize_state(const EpisodeLog& log, size_t step_index,
                            const RobotConfig& robot) {
  if (step_index >= log.steps.size())
    throw std::out_of_range("synthesize_state: step index out of range");
  const EpisodeStep& step = log.steps[step_index];

  RobotState state;
  state.base_position = step.base_position;
  state.base_yaw = step.yaw;
  state.gravity_in_body = {0.0, 0.0, -1.0};
  state.joint_angles = robot.default_joint_angles;

  if (step_index > 0) {
    const EpisodeStep& prev = log.steps[step_index - 1];
    double dt = step.time - prev.time;
    Vec3 world_vel = (step.base_position - prev.base_position) / dt;
    double c = std::cos(step.yaw), s = std::sin(step.yaw);
    state.base_lin_vel = {c * world_vel.x() + s * world_vel.y(),
                          -s * world_vel.x() + c * world_vel.y(), world_vel.z()};
    state.base_ang_vel = {0.0, 0.0, (step.yaw - prev.yaw) / dt};
  }

  // Last touchdown position per foot up to this step.
  std::array<Vec3, kNumFeet> foot_pos;
  std::array<bool, kNumFeet> seen{false, false, false, false};
  for (size_t k = 0; k <= step_index; ++k) {
    for (const ContactEvent& c : log.steps[k].contacts) {
      foot_pos[c.foot] = c.position;
      seen[c.foot] = true;
    }
  }

  int n_stance = 0;
  for (int i = 0; i < kNumFeet; ++i)
    if (step.stance[i]) ++n_stance;

  for (int i = 0; i < kNumFeet; ++i) {
    if (step.stance[i] && seen[i]) {
      state.foot_positions[i] = foot_pos[i];
      state.foot_contact_forces[i] = {0.0, 0.0, robot.mass * 9.81 / n_stance};
      state.contact_state[i] = true;
    } else {
      // Swing feet hover under the hip; they carry no force and never enter
      // contact-gated terms.
      Vec2 offset = rotate(hip_offset(i, robot), step.yaw);
      state.foot_positions[i] = {step.base_position.x() + offset.x(),
                                 step.base_position.y() + offset.y(),
                                 step.base_position.z() - robot.standing_height + 0.05};
      state.contact_state[i] = false;
    }
  }
  return state;
}

}  // namespace foothold
