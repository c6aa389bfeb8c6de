#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "foothold/config.hpp"
#include "foothold/observation.hpp"
#include "foothold/rng.hpp"
#include "foothold/terrain.hpp"

#include <cmath>

using namespace foothold;

namespace {

RobotState default_stand() {
  RobotState state;
  RobotConfig robot;
  state.joint_angles = robot.default_joint_angles;
  state.base_position = {4.0, 2.0, 0.32};
  return state;
}

RobotState random_state(Pcg32& rng) {
  RobotState s;
  s.base_ang_vel = {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
  s.base_roll = rng.uniform(-0.4, 0.4);
  s.base_pitch = rng.uniform(-0.4, 0.4);
  s.base_yaw = rng.uniform(-3.14, 3.14);
  s.gravity_in_body = gravity_in_body_frame(s.base_roll, s.base_pitch);
  for (int i = 0; i < 12; ++i) {
    s.joint_angles(i) = rng.uniform(-2, 2);
    s.joint_vels(i) = rng.uniform(-10, 10);
  }
  return s;
}

}  // namespace

TEST_CASE("default stand produces the rest-case vector") {
  RobotState state = default_stand();
  Command cmd;
  Observation obs = build_observation(state, cmd, Vec12::Zero());
  REQUIRE(obs.size() == 45);
  // Gravity at indices 3..5, joint defaults at 9..20, zeros elsewhere.
  CHECK(obs(3) == 0.0);
  CHECK(obs(4) == 0.0);
  CHECK(obs(5) == -1.0);
  RobotConfig robot;
  for (int i = 0; i < 12; ++i) CHECK(obs(9 + i) == robot.default_joint_angles(i));
  for (int i : {0, 1, 2, 6, 7, 8}) CHECK(obs(i) == 0.0);
  for (int i = 21; i < 45; ++i) CHECK(obs(i) == 0.0);
}

TEST_CASE("pure yaw spin shows up in w_t and leaves gravity untouched") {
  RobotState state = default_stand();
  state.base_ang_vel = {0.0, 0.0, 1.0};
  Observation obs = build_observation(state, Command{}, Vec12::Zero());
  CHECK(obs(2) == 1.0);
  CHECK(obs(3) == 0.0);
  CHECK(obs(4) == 0.0);
  CHECK(obs(5) == -1.0);
}

TEST_CASE("length is 45 and slicing round-trips on randomized states") {
  Pcg32 rng(7, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    RobotState s = random_state(rng);
    Command cmd;
    cmd.vx = rng.bernoulli(0.5) ? rng.uniform(0.3, 1.5) : 0.0;
    cmd.wyaw = cmd.vx == 0.0 ? rng.uniform(-1.2, 1.2) : 0.0;
    Vec12 prev;
    for (int i = 0; i < 12; ++i) prev(i) = rng.uniform(-1, 1);

    Observation obs = build_observation(s, cmd, prev);
    REQUIRE(obs.size() == 45);
    ObservationSlices slices = slice_observation(obs);
    CHECK(slices.base_ang_vel == s.base_ang_vel);
    CHECK(slices.gravity_in_body == s.gravity_in_body);
    CHECK(slices.command(0) == cmd.vx);
    CHECK(slices.command(1) == cmd.vy);
    CHECK(slices.command(2) == cmd.wyaw);
    CHECK(slices.joint_angles == s.joint_angles);
    CHECK(slices.joint_vels == s.joint_vels);
    CHECK(slices.prev_action == prev);
  }
}

TEST_CASE("build_observation is pure: identical inputs, bit-identical outputs") {
  Pcg32 rng(21, 2);
  RobotState s = random_state(rng);
  Observation a = build_observation(s, Command{}, Vec12::Zero());
  Observation b = build_observation(s, Command{}, Vec12::Zero());
  CHECK(a == b);
}

TEST_CASE("gravity is invariant under yaw") {
  for (double yaw : {0.0, 0.5, 1.5, 3.0, -2.0}) {
    Vec3 g = gravity_in_body_frame(0.0, 0.0);
    CHECK(g == Vec3{0.0, 0.0, -1.0});
    (void)yaw;  // gravity_in_body_frame has no yaw input by construction
  }
  // Unit norm for arbitrary roll/pitch.
  Pcg32 rng(3, 9);
  for (int trial = 0; trial < 100; ++trial) {
    Vec3 g = gravity_in_body_frame(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    CHECK(std::abs(g.norm() - 1.0) <= 1e-9);
  }
}

TEST_CASE("non-finite inputs are rejected with a diagnostic") {
  RobotState state = default_stand();
  state.joint_vels(4) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(build_observation(state, Command{}, Vec12::Zero()),
                  std::invalid_argument);
  state = default_stand();
  Command cmd;
  cmd.vx = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(build_observation(state, cmd, Vec12::Zero()), std::invalid_argument);
}

TEST_CASE("contact threshold derives contacts from forces") {
  RobotState state = default_stand();
  state.foot_contact_forces[0] = {0.0, 0.0, 30.0};
  state.foot_contact_forces[1] = {0.0, 0.0, 0.5};   // below 1 N
  state.foot_contact_forces[2] = {0.8, 0.0, 0.8};   // norm > 1 N
  state.foot_contact_forces[3] = {0.0, 0.0, 0.0};
  state.derive_contacts(1.0);
  CHECK(state.contact_state[0]);
  CHECK_FALSE(state.contact_state[1]);
  CHECK(state.contact_state[2]);
  CHECK_FALSE(state.contact_state[3]);
}

TEST_CASE("privileged state on flat ground") {
  HeightField field;
  field.nx = 160;
  field.ny = 80;
  field.resolution = 0.05;
  field.pit_depth = 0.4;
  field.heights = Eigen::MatrixXd::Zero(160, 80);
  field.steppable = BoolGrid::Constant(160, 80, true);

  RobotState state = default_stand();
  state.base_position = {4.0, 2.0, 0.3};
  for (int i = 0; i < 4; ++i) {
    state.foot_positions[i] = {3.8 + 0.1 * i, 2.0, 0.0};
    state.foot_contact_forces[i] = {0.0, 0.0, 30.0};
  }
  state.derive_contacts(1.0);
  state.base_lin_vel = {0.7, 0.0, 0.0};

  PrivilegedState priv = build_privileged(state, field);
  CHECK(priv.base_lin_vel == state.base_lin_vel);
  for (int i = 0; i < 4; ++i) CHECK(priv.contact_state[i]);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 16; ++j) CHECK(priv.body_map.height(i, j) == doctest::Approx(-0.3));
  for (int f = 0; f < 4; ++f) CHECK(priv.foot_maps[f].isZero(1e-12));
}

TEST_CASE("privileged state on max-difficulty stones stays in the two-level set") {
  TerrainSpec spec;
  spec.family = TerrainFamily::kSteppingStones;
  spec.difficulty = 10;
  spec.randomness = Randomness::kLow;
  spec.seed = 51;
  HeightField field = generate(spec);

  RobotState state = default_stand();
  const double base_z = 0.34;
  state.base_position = {4.0, 2.0, base_z};
  for (int i = 0; i < 4; ++i) state.foot_positions[i] = {4.0, 2.0, 0.0};

  PrivilegedState priv = build_privileged(state, field);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 16; ++j) {
      double v = priv.body_map.height(i, j);
      bool stone_level = std::abs(v + base_z) <= 0.05 + 1e-12;
      bool pit_level = std::abs(v + base_z + field.pit_depth) <= 1e-12;
      CHECK((stone_level || pit_level));
    }
}

TEST_CASE("base outside the patch is an out-of-bounds error") {
  HeightField field;
  field.nx = 10;
  field.ny = 10;
  field.resolution = 0.05;
  field.heights = Eigen::MatrixXd::Zero(10, 10);
  field.steppable = BoolGrid::Constant(10, 10, true);
  RobotState state = default_stand();
  state.base_position = {5.0, 5.0, 0.3};
  CHECK_THROWS_AS(build_privileged(state, field), std::out_of_range);
}

TEST_CASE("command invariants") {
  Command ok;
  ok.vx = 0.7;
  ok.validate();
  Command turning;
  turning.wyaw = 1.0;
  turning.validate();

  Command bad;
  bad.vx = 0.2;  // in the clamped band
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.vx = 1.7;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.vx = 0.5;
  bad.vy = 0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.vy = 0.0;
  bad.wyaw = 1.3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
