#include <CLI11.hpp>

#include "foothold/config.hpp"
#include "foothold/episode_io.hpp"
#include "foothold/gridio.hpp"
#include "foothold/losses.hpp"
#include "foothold/metrics.hpp"
#include "foothold/observation.hpp"
#include "foothold/perception.hpp"
#include "foothold/reward.hpp"
#include "foothold/rng.hpp"
#include "foothold/schedule.hpp"
#include "foothold/terrain.hpp"
#include "foothold/walker.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace foothold;

struct TerrainFlags {
  std::string family{"stepping-stones"};
  int difficulty{5};
  std::string randomness{"low"};

  TerrainSpec spec(uint64_t seed) const {
    TerrainSpec s;
    s.family = terrain_family_from_string(family);
    s.difficulty = difficulty;
    s.randomness = randomness_from_string(randomness);
    s.seed = seed;
    return s;
  }
};

void add_terrain_flags(CLI::App* cmd, TerrainFlags& flags) {
  cmd->add_option("--family,--terrain", flags.family,
                  "terrain family: flat|stepping-stones|balance-beam|stepping-beams|gaps")
      ->capture_default_str();
  cmd->add_option("--difficulty", flags.difficulty, "difficulty level 1..10")
      ->capture_default_str();
  cmd->add_option("--randomness", flags.randomness,
                  "stone randomization: low|high (stepping stones only)")
      ->capture_default_str();
}

// Worker count comes from the environment only, so that command lines (and
// with them output bytes) never depend on the host machine.
unsigned worker_count() {
  if (const char* env = std::getenv("FOOTHOLD_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  // splitmix64 step
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

TerrainTag tag_for(const TerrainSpec& spec, const HeightField& field) {
  return {spec.family, spec.difficulty, spec.randomness, spec.seed,
          field.content_hash()};
}

HeightField regenerate_from_tag(const TerrainTag& tag) {
  TerrainSpec spec{tag.family, tag.difficulty, tag.randomness, tag.seed};
  HeightField field = generate(spec);
  if (field.content_hash() != tag.field_hash)
    throw std::invalid_argument(
        "terrain hash mismatch: log was not recorded on this generator version");
  return field;
}

// ---------------------------------------------------------------- gen ----

int run_gen(const TerrainFlags& flags, uint64_t seed, const std::string& out) {
  TerrainSpec spec = flags.spec(seed);
  TerrainLayout layout =
      (spec.family == TerrainFamily::kSteppingStones && spec.randomness == Randomness::kHigh)
          ? jittered_layout(spec)
          : base_layout(spec);
  HeightField field = rasterize(layout);
  write_heightfield(field, out + ".fgrd");
  write_heightfield_csv(field, out + ".heights.csv", out + ".mask.csv");
  write_terrain_sidecar(spec, layout, field, out + ".json");
  std::printf("wrote %s.fgrd (%dx%d), sparsity %.4f, pit depth %.3f m\n", out.c_str(),
              field.nx, field.ny, sparsity(field), field.pit_depth);
  return 0;
}

// ------------------------------------------------------------- raster ----

int run_raster(const TerrainFlags& flags, uint64_t seed, const std::string& terrain_bin,
               const BasePose& base, const std::string& out) {
  HeightField field =
      terrain_bin.empty() ? generate(flags.spec(seed)) : read_heightfield(terrain_bin);
  LocalHeightmap map = raster_local_heightmap(field, base);
  write_local_heightmap(map, out + ".fgrd");
  write_local_heightmap_csv(map, out + ".csv");
  std::printf("wrote %s.fgrd and %s.csv (32x16 at 5 cm)\n", out.c_str(), out.c_str());
  return 0;
}

// ------------------------------------------------------------- render ----

int run_render(const TerrainFlags& flags, uint64_t seed, const std::string& terrain_bin,
               const BasePose& base, const AppConfig& config, double noise_sigma,
               const std::string& out) {
  HeightField field =
      terrain_bin.empty() ? generate(flags.spec(seed)) : read_heightfield(terrain_bin);
  CameraPose pose = head_camera_pose(base, config.camera);
  DepthImage image = render_depth(field, pose, CameraIntrinsics::from_config(config.camera));
  if (noise_sigma > 0.0) {
    Pcg32 rng = make_rng(seed, RngStream::kNoise);
    apply_depth_noise(image, noise_sigma, rng);
  }
  write_depth_pgm(image, out + ".pgm");
  write_depth_grid(image, out + ".fgrd");
  std::printf("wrote %s.pgm and %s.fgrd (%dx%d)\n", out.c_str(), out.c_str(), image.width,
              image.height);
  return 0;
}

// --------------------------------------------------------------- eval ----

int run_eval(const TerrainFlags& flags, uint64_t seed, int runs, int terrains,
             double distance, double vx, double max_time, const AppConfig& config,
             const std::string& out_dir) {
  if (runs <= 0 || terrains <= 0)
    throw std::invalid_argument("eval: --runs and --terrains must be positive");
  std::filesystem::create_directories(out_dir);

  WalkerConfig walker = config.walker;
  walker.goal_distance = distance;
  Command cmd;
  cmd.vx = vx;
  cmd.validate();

  // Terrains are generated up front; episodes fan out over a worker pool and
  // land in a pre-sized vector, so output order is parallelism-invariant.
  std::vector<HeightField> fields;
  std::vector<TerrainSpec> specs;
  for (int t = 0; t < terrains; ++t) {
    TerrainSpec spec = flags.spec(mix_seed(seed, 1000 + t));
    specs.push_back(spec);
    fields.push_back(generate(spec));
    TerrainLayout layout = (spec.family == TerrainFamily::kSteppingStones &&
                            spec.randomness == Randomness::kHigh)
                               ? jittered_layout(spec)
                               : base_layout(spec);
    write_terrain_sidecar(spec, layout, fields.back(),
                          out_dir + "/terrain_" + std::to_string(t) + ".json");
  }

  std::vector<EpisodeLog> logs(runs);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (int run = next.fetch_add(1); run < runs; run = next.fetch_add(1)) {
      int t = run % terrains;
      EpisodeLog log = run_episode(fields[t], cmd, max_time, mix_seed(seed, run),
                                   walker, config.robot);
      log.terrain = tag_for(specs[t], fields[t]);
      logs[run] = std::move(log);
    }
  };
  unsigned n_workers = std::min<unsigned>(worker_count(), runs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();

  write_episode_jsonl(logs, out_dir + "/episodes.jsonl");

  std::ofstream csv(out_dir + "/summary.csv", std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + out_dir + "/summary.csv");
  csv << "run,terrain,difficulty,outcome,distance_traversed,total_distance,steps,contacts\n";
  for (int run = 0; run < runs; ++run) {
    const EpisodeLog& log = logs[run];
    size_t contacts = 0;
    for (const EpisodeStep& step : log.steps) contacts += step.contacts.size();
    csv << run << ',' << run % terrains << ',' << log.terrain.difficulty << ','
        << to_string(log.outcome) << ',' << csv_double(log.distance_traversed) << ','
        << csv_double(log.total_distance) << ',' << log.steps.size() << ',' << contacts
        << '\n';
  }

  double sr = success_rate(logs, distance);
  MeanStd tr = traversing_rate(logs);
  std::printf("%d runs on %d terrains (%s, difficulty %d): success %.3f, traversing %.2f+/-%.2f\n",
              runs, terrains, flags.family.c_str(), flags.difficulty, sr, tr.mean,
              tr.std_dev);
  return 0;
}

// ------------------------------------------------------------ metrics ----

int run_metrics(const std::vector<std::string>& log_paths, double mev_threshold,
                const std::string& out, const std::string& kde_out, int kde_difficulty,
                double bandwidth) {
  std::vector<EpisodeLog> all;
  for (const std::string& path : log_paths) {
    std::vector<EpisodeLog> logs = read_episode_jsonl(path);
    all.insert(all.end(), logs.begin(), logs.end());
  }
  if (all.empty()) throw std::invalid_argument("metrics: no episodes in input");

  std::map<int, std::vector<EpisodeLog>> by_difficulty;
  for (EpisodeLog& log : all) by_difficulty[log.terrain.difficulty].push_back(std::move(log));

  std::ofstream csv(out, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + out);
  csv << "difficulty,runs,success_rate,traversing_mean,traversing_std,mev\n";
  for (auto& [difficulty, logs] : by_difficulty) {
    double sr = success_rate(logs, logs.front().total_distance);
    MeanStd tr = traversing_rate(logs);

    // MEV needs the edge field of each log's terrain; group by terrain seed.
    std::map<uint64_t, std::vector<const EpisodeLog*>> by_terrain;
    for (const EpisodeLog& log : logs) by_terrain[log.terrain.seed].push_back(&log);
    long contacts = 0, violations = 0;
    for (auto& [terrain_seed, terrain_logs] : by_terrain) {
      HeightField field = regenerate_from_tag(terrain_logs.front()->terrain);
      EdgeDistanceField edges = edge_distance_field(field);
      std::vector<EpisodeLog> group;
      group.reserve(terrain_logs.size());
      for (const EpisodeLog* log : terrain_logs) group.push_back(*log);
      double mev = mean_edge_violation(group, edges, mev_threshold);
      long n = 0;
      for (const EpisodeLog& log : group)
        for (const EpisodeStep& step : log.steps) n += step.contacts.size();
      contacts += n;
      violations += std::lround(mev * n);
    }
    double mev = contacts > 0 ? static_cast<double>(violations) / contacts : 0.0;
    csv << difficulty << ',' << logs.size() << ',' << csv_double(sr) << ','
        << csv_double(tr.mean) << ',' << csv_double(tr.std_dev) << ',' << csv_double(mev)
        << '\n';
  }

  if (!kde_out.empty()) {
    int target = kde_difficulty;
    if (target < 0) target = by_difficulty.rbegin()->first;  // highest present
    auto it = by_difficulty.find(target);
    if (it == by_difficulty.end())
      throw std::invalid_argument("metrics: no logs at the requested KDE difficulty");
    std::vector<Vec2> contacts = collect_contacts(it->second);
    if (contacts.empty()) throw std::invalid_argument("metrics: no contacts for KDE");
    double h = bandwidth > 0.0 ? bandwidth : silverman_bandwidth(contacts);
    KdeGridSpec grid_spec{{0.0, 0.0}, kGridResolution,
                          static_cast<int>(std::lround(kPatchLengthX / kGridResolution)),
                          static_cast<int>(std::lround(kPatchLengthY / kGridResolution))};
    KdeGrid grid = foothold_kde(contacts, h, grid_spec);
    write_kde_grid(grid, kde_out + ".fgrd");
    write_kde_csv(grid, kde_out + ".csv");
    std::printf("KDE over %zu contacts at difficulty %d, bandwidth %.4f m\n",
                contacts.size(), target, h);
  }
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

// -------------------------------------------------------- reward-eval ----

int run_reward_eval(const std::string& log_path, const AppConfig& config,
                    const std::string& out) {
  std::vector<EpisodeLog> logs = read_episode_jsonl(log_path);
  if (logs.empty()) throw std::invalid_argument("reward-eval: no episodes in input");

  std::ofstream csv(out, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + out);
  csv << "run,step,time";
  for (auto name : reward_term_names()) csv << ',' << name;
  csv << ",weighted_total\n";

  std::map<uint64_t, EdgeDistanceField> edge_cache;
  for (size_t run = 0; run < logs.size(); ++run) {
    const EpisodeLog& log = logs[run];
    auto it = edge_cache.find(log.terrain.field_hash);
    if (it == edge_cache.end()) {
      HeightField field = regenerate_from_tag(log.terrain);
      it = edge_cache.emplace(log.terrain.field_hash, edge_distance_field(field)).first;
    }
    const EdgeDistanceField& edges = it->second;

    // Oracle joint targets sit at the default pose, so the action history is
    // constant and the smoothness terms vanish, as they should for a
    // kinematic replay.
    Vec12 action = config.robot.default_joint_angles;
    for (size_t k = 0; k < log.steps.size(); ++k) {
      RobotState state = synthesize_state(log, k, config.robot);
      RewardBreakdown r =
          compute_rewards(state, log.command, action, action, action, edges, config.robot);
      csv << run << ',' << k << ',' << csv_double(log.steps[k].time);
      for (double raw : r.raw) csv << ',' << csv_double(raw);
      csv << ',' << csv_double(r.weighted_total) << '\n';
    }
  }
  std::printf("wrote %s (%zu runs)\n", out.c_str(), logs.size());
  return 0;
}

// ----------------------------------------------------------- schedule ----

int run_schedule_sim(uint64_t seed, int iterations, const AppConfig& config,
                     const std::string& out) {
  if (iterations <= 0) throw std::invalid_argument("schedule: iterations must be positive");
  ScheduleState state(config.schedule);
  Pcg32 rng = make_rng(seed, RngStream::kSchedule);

  std::ofstream csv(out, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + out);
  csv << "iteration,cv,p_smpl,p_advance,difficulty\n";

  for (int t = 0; t < iterations; ++t) {
    // Synthetic training curve: returns rise toward a plateau while their
    // spread decays, which drives p_smpl from ~1 toward 0.
    double progress = 1.0 - std::exp(-3.0 * t / iterations);
    double mean_return = 25.0 * progress + 1.0;
    double spread = 8.0 * std::exp(-2.0 * t / iterations) + 0.2;
    state.push_return(mean_return + rng.normal(0.0, spread));
    state.advance_iteration();

    double traversed = std::clamp(progress + rng.normal(0.0, 0.15), 0.0, 1.0);
    state.record_traversal(traversed);

    bool ready = state.window_size() >= 2;
    double cv = ready ? state.cv() : 0.0;
    double p_smpl = ready ? state.adasmpl() : 1.0;
    csv << t << ',' << csv_double(cv) << ',' << csv_double(p_smpl) << ','
        << csv_double(state.p_advance()) << ',' << state.difficulty() << '\n';
  }
  std::printf("wrote %s (%d iterations)\n", out.c_str(), iterations);
  return 0;
}

// ------------------------------------------------------- losses-check ----

int run_losses_check() {
  Pcg32 rng(20240901, 1);
  struct Row {
    const char* name;
    double max_rel;
    double limit;
  };
  std::vector<Row> rows;

  auto random_vec = [&rng](int n, double lo, double hi) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.uniform(lo, hi);
    return v;
  };

  double worst_mse = 0.0, worst_l1 = 0.0, worst_kl = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_u32(12));
    Eigen::VectorXd b = random_vec(n, -2, 2);
    Eigen::VectorXd a = random_vec(n, -2, 2);
    worst_mse = std::max(worst_mse,
                         grad_check([&](const Eigen::VectorXd& x) { return mse(x, b); }, a,
                                    mse_grad(a, b)));
    Eigen::VectorXd a1 = b.array() + rng.uniform(0.2, 0.8);  // keep away from ties
    worst_l1 = std::max(worst_l1,
                        grad_check([&](const Eigen::VectorXd& x) { return l1(x, b); }, a1,
                                   l1_grad(a1, b)));
    Eigen::VectorXd mu = random_vec(n, -1.5, 1.5);
    Eigen::VectorXd sigma = random_vec(n, 0.4, 2.5);
    Eigen::VectorXd packed(2 * n);
    packed << mu, sigma;
    Eigen::VectorXd d_mu, d_sigma;
    kl_grad({mu, sigma}, d_mu, d_sigma);
    Eigen::VectorXd analytic(2 * n);
    analytic << d_mu, d_sigma;
    worst_kl = std::max(worst_kl, grad_check(
                                      [n](const Eigen::VectorXd& x) {
                                        return kl_to_standard_normal({x.head(n), x.tail(n)});
                                      },
                                      packed, analytic));
  }
  rows.push_back({"mse gradient", worst_mse, 1e-5});
  rows.push_back({"l1 gradient (off ties)", worst_l1, 1e-5});
  rows.push_back({"kl gradient", worst_kl, 1e-5});

  // Closed-form spot values.
  DiagGaussian standard{Eigen::VectorXd::Zero(4), Eigen::VectorXd::Ones(4)};
  rows.push_back({"kl(0,1) == 0", std::abs(kl_to_standard_normal(standard)), 1e-12});
  DiagGaussian unit{Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1)};
  rows.push_back({"kl(1,1) == 0.5", std::abs(kl_to_standard_normal(unit) - 0.5), 1e-12});
  DiagGaussian wide{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Constant(1, 2.0)};
  rows.push_back(
      {"kl(0,2) == 0.806853", std::abs(kl_to_standard_normal(wide) - 0.8068528194400547),
       1e-12});

  bool all_ok = true;
  std::printf("%-28s %-14s %-10s %s\n", "check", "max rel err", "limit", "status");
  for (const Row& row : rows) {
    bool ok = row.max_rel < row.limit;
    all_ok = all_ok && ok;
    std::printf("%-28s %-14.3e %-10.0e %s\n", row.name, row.max_rel, row.limit,
                ok ? "pass" : "FAIL");
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse-foothold terrain and locomotion evaluation harness"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags (--seed, --config) may follow the subcommand

  uint64_t seed = 0;
  app.add_option("--seed", seed, "global seed; all randomness derives from it")
      ->capture_default_str();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file overriding module defaults");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a terrain patch");
  TerrainFlags gen_flags;
  add_terrain_flags(gen, gen_flags);
  std::string gen_out = "terrain";
  gen->add_option("--out", gen_out, "output path prefix")->capture_default_str();

  // raster
  auto* raster = app.add_subcommand("raster", "rasterize a robot-frame local heightmap");
  TerrainFlags raster_flags;
  add_terrain_flags(raster, raster_flags);
  std::string raster_bin;
  raster->add_option("--terrain-bin", raster_bin, "read terrain from .fgrd instead of generating");
  BasePose raster_pose{4.0, 2.0, 0.32, 0.0};
  raster->add_option("--x", raster_pose.x)->capture_default_str();
  raster->add_option("--y", raster_pose.y)->capture_default_str();
  raster->add_option("--z", raster_pose.z)->capture_default_str();
  raster->add_option("--yaw", raster_pose.yaw)->capture_default_str();
  std::string raster_out = "heightmap";
  raster->add_option("--out", raster_out)->capture_default_str();

  // render
  auto* render = app.add_subcommand("render", "render a 60x60 depth image");
  TerrainFlags render_flags;
  add_terrain_flags(render, render_flags);
  std::string render_bin;
  render->add_option("--terrain-bin", render_bin, "read terrain from .fgrd instead of generating");
  BasePose render_pose{2.0, 2.0, 0.32, 0.0};
  render->add_option("--x", render_pose.x)->capture_default_str();
  render->add_option("--y", render_pose.y)->capture_default_str();
  render->add_option("--z", render_pose.z)->capture_default_str();
  render->add_option("--yaw", render_pose.yaw)->capture_default_str();
  double render_noise = 0.0;
  render->add_option("--noise-sigma", render_noise, "multiplicative depth noise sigma")
      ->capture_default_str();
  std::string render_out = "depth";
  render->add_option("--out", render_out)->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "run scripted walker episodes and write logs");
  TerrainFlags eval_flags;
  add_terrain_flags(eval, eval_flags);
  int eval_runs = 500, eval_terrains = 10;
  double eval_distance = 6.0, eval_vx = 0.8, eval_max_time = 30.0;
  std::string eval_out = "eval_out";
  eval->add_option("--runs", eval_runs)->capture_default_str();
  eval->add_option("--terrains", eval_terrains)->capture_default_str();
  eval->add_option("--distance", eval_distance)->capture_default_str();
  eval->add_option("--vx", eval_vx, "forward command, m/s")->capture_default_str();
  eval->add_option("--max-time", eval_max_time)->capture_default_str();
  eval->add_option("--out-dir", eval_out)->capture_default_str();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "aggregate episode logs into metric tables");
  std::vector<std::string> metrics_logs;
  metrics->add_option("--logs", metrics_logs, "episode JSONL files")->required();
  double metrics_threshold = 0.025;
  metrics->add_option("--mev-threshold", metrics_threshold, "edge-violation threshold, m")
      ->capture_default_str();
  std::string metrics_out = "metrics.csv";
  metrics->add_option("--out", metrics_out)->capture_default_str();
  std::string metrics_kde;
  metrics->add_option("--kde-out", metrics_kde, "also dump a foothold KDE grid (path prefix)");
  int metrics_kde_difficulty = -1;
  metrics->add_option("--kde-difficulty", metrics_kde_difficulty,
                      "difficulty level for the KDE (default: highest present)");
  double metrics_bandwidth = 0.0;
  metrics->add_option("--bandwidth", metrics_bandwidth,
                      "KDE bandwidth in meters (default: Silverman's rule)");

  // reward-eval
  auto* reward_eval =
      app.add_subcommand("reward-eval", "replay logs through the reward engine");
  std::string reward_logs;
  reward_eval->add_option("--logs", reward_logs, "episode JSONL file")->required();
  std::string reward_out = "rewards.csv";
  reward_eval->add_option("--out", reward_out)->capture_default_str();

  // schedule
  auto* schedule = app.add_subcommand("schedule", "scheduler utilities");
  auto* schedule_sim =
      schedule->add_subcommand("sim", "run the schedulers over a synthetic reward stream");
  int schedule_iterations = 8000;
  schedule_sim->add_option("--iterations", schedule_iterations)->capture_default_str();
  std::string schedule_out = "schedule.csv";
  schedule_sim->add_option("--out", schedule_out)->capture_default_str();
  schedule->require_subcommand(1);

  // losses-check
  auto* losses_check =
      app.add_subcommand("losses-check", "gradient-check the loss primitives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    AppConfig config;
    if (!config_path.empty()) config = load_config(config_path);

    if (gen->parsed()) return run_gen(gen_flags, seed, gen_out);
    if (raster->parsed())
      return run_raster(raster_flags, seed, raster_bin, raster_pose, raster_out);
    if (render->parsed())
      return run_render(render_flags, seed, render_bin, render_pose, config,
                        render_noise > 0.0 ? render_noise : config.camera.noise_sigma,
                        render_out);
    if (eval->parsed())
      return run_eval(eval_flags, seed, eval_runs, eval_terrains, eval_distance, eval_vx,
                      eval_max_time, config, eval_out);
    if (metrics->parsed())
      return run_metrics(metrics_logs, metrics_threshold, metrics_out, metrics_kde,
                         metrics_kde_difficulty, metrics_bandwidth);
    if (reward_eval->parsed()) return run_reward_eval(reward_logs, config, reward_out);
    if (schedule->parsed() && schedule_sim->parsed())
      return run_schedule_sim(seed, schedule_iterations, config, schedule_out);
    if (losses_check->parsed()) return run_losses_check();
    std::fprintf(stderr, "no subcommand\n");
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  }
}
