#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beamtune/lattice.hpp"
#include "beamtune/tracking.hpp"

namespace beamtune {

inline constexpr std::size_t kStateDim = 57;
inline constexpr std::size_t kActionDim = 4;

using StateVector = std::array<double, kStateDim>;
using ActionVector = std::array<double, kActionDim>;

// Offsets of the observation blocks inside StateVector.
namespace state_layout {
inline constexpr std::size_t kStats = 0;        // 16: (median, IQR, P10, P90) for x, x', y, y'
inline constexpr std::size_t kHistogram = 16;   // 25: 5x5 x-y occupancy, index = 5*ix + iy
inline constexpr std::size_t kSurvival = 41;    // N_t / N_0
inline constexpr std::size_t kElementType = 42; // 0 quadrupole, 1 dipole
inline constexpr std::size_t kCovariance = 43;  // 10: upper triangle of the 4x4 covariance, row-major
inline constexpr std::size_t kApertures = 53;   // Ax_before, Ay_before, Ax_after, Ay_after
inline constexpr std::size_t kHistogramBins = 5;
}  // namespace state_layout

// Which physical parameter families an action may change.
struct ActiveKinds {
  bool k1 = true;
  bool kicks = true;
  bool fse = true;

  friend bool operator==(const ActiveKinds&, const ActiveKinds&) = default;
};

struct AppliedParameters {
  std::optional<double> k1;
  std::optional<double> hkick;
  std::optional<double> vkick;
  std::optional<double> fse;

  friend bool operator==(const AppliedParameters&, const AppliedParameters&) = default;
};

// Maps a normalized action onto a tunable element and stores the result in it.
// QUAD: K1 = 25 a0, HKICK = 0.005 a1, VKICK = 0.005 a2; SBEND: FSE = 0.005 a3.
// Components are clamped to [-1, 1]; inactive families are forced to zero.
AppliedParameters apply_action(Element& element, const ActionVector& action, ActiveKinds kinds = {});

// The action components an element of this kind actually consumes under `kinds`.
std::array<bool, kActionDim> action_mask(ElementKind kind, ActiveKinds kinds = {});

struct RewardParams {
  std::size_t n_min = 5;
  std::size_t total_steps = 1;  // M
};

// B_t * n_t / n_prev when n_t > n_min, otherwise B_t - sqrt(M^2 - t^2) / M,
// with B_t = n_t / n0 and t the 1-based index of the step just completed.
double compute_reward(std::size_t n_prev, std::size_t n_t, std::size_t n0, std::size_t t,
                      const RewardParams& params);

// Observation at the watch point in front of the tunable element at
// `element_pos`. Aperture fields fall back to `default_bore` when there is no
// aperture on that side.
StateVector extract_state(const Bunch& bunch, const BeamlineGraph& graph, std::size_t element_pos,
                          double default_bore);

using StateExtractor = std::function<StateVector(const Bunch&, const BeamlineGraph&, std::size_t, double)>;

struct EnvConfig {
  BunchGenParams bunch;
  std::size_t n_min = 5;
  double default_bore = 0.025;
  // Number of leading tunable elements the agent sets; 0 means all of them.
  std::size_t active_prefix = 0;
  ActiveKinds kinds;
};

struct StepInfo {
  std::size_t t = 0;  // 0-based step index
  std::string element;
  AppliedParameters applied;
  std::size_t survivors = 0;
  double reward = 0.0;
  bool done = false;
};

struct EpisodeRecord {
  std::vector<StepInfo> steps;
  std::size_t n0 = 0;
  double transmission = 0.0;
};

struct StepResult {
  StateVector state{};
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

// reset()/step() episode driver over a preprocessed copy of the lattice.
class BeamlineEnv {
 public:
  BeamlineEnv(const BeamlineGraph& lattice, EnvConfig config, StateExtractor extractor = extract_state);

  StateVector reset();
  StepResult step(const ActionVector& action);

  // Switches the beamline segment and parameter families for later episodes.
  void set_stage(std::size_t active_prefix, ActiveKinds kinds);

  const BeamlineGraph& graph() const { return graph_; }
  const EnvConfig& config() const { return config_; }
  std::size_t total_steps() const { return steps_; }
  bool covers_full_beamline() const { return steps_ == graph_.tunable_index().size(); }
  std::size_t t() const { return t_; }
  bool done() const { return done_; }
  const Bunch& bunch() const { return bunch_; }
  const EpisodeRecord& record() const { return record_; }
  // Element kind the next step will tune.
  ElementKind current_kind() const;

 private:
  std::size_t episode_end() const;

  BeamlineGraph graph_;
  EnvConfig config_;
  StateExtractor extractor_;
  std::size_t steps_ = 0;

  std::optional<Bunch> initial_bunch_;  // beam at the first watch, all magnets off upstream
  Bunch bunch_;
  std::size_t cursor_ = 0;  // position of the watch the beam currently sits at
  std::size_t t_ = 0;
  bool done_ = true;
  EpisodeRecord record_;
};

// Sanity checks over random-policy episodes.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct EnvCheckReport {
  std::vector<CheckResult> checks;
  std::size_t episodes = 0;
  bool passed() const;
};

EnvCheckReport run_env_checks(const BeamlineGraph& lattice, const EnvConfig& config, std::size_t episodes,
                              std::uint64_t seed, StateExtractor extractor = extract_state);

}  // namespace beamtune
