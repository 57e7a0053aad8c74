#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "beamtune/env.hpp"
#include "beamtune/neural.hpp"
#include "beamtune/rng.hpp"

namespace beamtune {

struct DdpgConfig {
  double actor_lr = 1e-4;
  double critic_lr = 1e-3;
  std::vector<int> hidden = {256, 256};
  double gamma = 0.99;
  double tau = 0.005;
  // Exploration noise std in normalized action units (half-range = 1),
  // decayed linearly over each stage's episodes.
  double noise_sigma = 0.1;
  double noise_sigma_final = 0.02;
  std::size_t buffer_capacity = 100000;
  std::size_t batch_size = 64;
  std::size_t updates_per_step = 1;
  std::size_t eval_every = 5;
  std::uint64_t seed = 0;
  // Scale dQ/da by the distance left to the bound in the ascent direction,
  // so the tanh head cannot be driven into saturation.
  bool invert_gradients = true;
  // Transitions collected before the actor starts learning (critic only).
  std::size_t actor_warmup = 0;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct Transition {
  StateVector state{};
  ActionVector action{};
  double reward = 0.0;
  StateVector next_state{};
  bool done = false;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Fixed-capacity FIFO of transitions with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void push(const Transition& t);
  void clear();
  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  // i-th oldest stored transition.
  const Transition& at(std::size_t i) const;
  // Uniform indices with replacement into [0, size()).
  std::vector<std::size_t> sample_indices(std::size_t count, Rng& rng) const;

  nlohmann::json to_json() const;
  static ReplayBuffer from_json(const nlohmann::json& j);

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // slot of the oldest item once full
  std::vector<Transition> items_;
};

// Fixed rescaling of raw observations (metres, radians) to O(1) network inputs.
Eigen::VectorXd scale_observation(const StateVector& state);

// tanh-head actor output plus Gaussian noise, clamped to [-1, 1].
ActionVector select_action(const Mlp& actor, const StateVector& state, double noise_sigma, Rng& rng);

struct UpdateLosses {
  double critic = 0.0;
  double actor = 0.0;
};

class DdpgAgent {
 public:
  DdpgAgent(const DdpgConfig& config, std::uint64_t init_seed);

  // Fresh networks and optimizers from `init_seed`.
  void reinitialize(std::uint64_t init_seed);

  ActionVector act(const StateVector& state, double noise_sigma, Rng& rng) const;
  ActionVector greedy(const StateVector& state) const;

  // One critic + actor step on a batch followed by soft target updates.
  // `kinds` masks the action components the current stage may use.
  UpdateLosses update(const std::vector<const Transition*>& batch, ActiveKinds kinds, bool update_actor = true);

  const Mlp& actor() const { return actor_; }
  const Mlp& critic() const { return critic_; }
  const Mlp& target_actor() const { return target_actor_; }
  const Mlp& target_critic() const { return target_critic_; }
  Mlp& actor() { return actor_; }
  Mlp& critic() { return critic_; }
  const DdpgConfig& config() const { return config_; }

  double q_value(const StateVector& state, const ActionVector& action) const;

  nlohmann::json to_json() const;
  void load_json(const nlohmann::json& j);

 private:
  DdpgConfig config_;
  Mlp actor_;
  Mlp critic_;
  Mlp target_actor_;
  Mlp target_critic_;
  AdamState actor_opt_;
  AdamState critic_opt_;
};

struct Stage {
  std::string name;
  std::size_t active_prefix = 0;  // leading tunable elements; 0 = all
  ActiveKinds kinds;
  std::size_t episodes = 0;
  bool carry_weights = true;
  bool carry_buffer = true;
};

struct StagePlan {
  std::vector<Stage> stages;

  // Prefixes non-decreasing, parameter families only added, last stage covers
  // every tunable element with every family.
  void validate(std::size_t total_tunables) const;

  static StagePlan single(std::size_t episodes);
  // K1 on the first `prefix` elements, then K1 + kicks, then everything.
  static StagePlan three_stage(std::size_t prefix, std::size_t e1, std::size_t e2, std::size_t e3);
};

struct EvaluationRecord {
  std::size_t episode = 0;  // global training-episode count when evaluated
  std::size_t stage = 0;    // 1-based
  bool full_beamline = false;
  double transmission = 0.0;
  double cumulative_max = 0.0;
  std::vector<double> parameters;  // flat vector over the whole beamline
  EpisodeRecord record;
};

struct TrainResult {
  std::vector<double> best_parameters;
  double best_transmission = 0.0;
  std::size_t best_episode = 0;
  std::vector<EvaluationRecord> evaluations;
  std::vector<EpisodeRecord> episodes;
  std::size_t updates = 0;
};

struct TrainHooks {
  // Called after every stage with the 1-based stage number.
  std::function<void(std::size_t, const DdpgAgent&, const ReplayBuffer&)> on_stage_end;
  std::function<void(const EvaluationRecord&)> on_evaluation;
};

// Runs the stage plan on `env`. The returned best configuration is the
// highest-transmission evaluation among stages that cover the full beamline,
// starting from the all-zero configuration.
TrainResult train(BeamlineEnv& env, DdpgAgent& agent, ReplayBuffer& buffer, const StagePlan& plan,
                  const TrainHooks& hooks = {});

TrainResult train(BeamlineEnv& env, const DdpgConfig& config, const StagePlan& plan);

// Seed used for the initial network weights of a run with this config.
std::uint64_t agent_init_seed(const DdpgConfig& config);

}  // namespace beamtune
