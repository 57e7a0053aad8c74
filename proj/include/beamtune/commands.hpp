#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "beamtune/config.hpp"
#include "beamtune/env.hpp"

namespace beamtune {

// Process exit codes shared by every verb.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // bad command line or argument values
  kExitParse = 2,     // lattice, parameter file or CSV log could not be parsed
  kExitConfig = 3,    // run configuration missing or invalid keys
  kExitIo = 4,        // file could not be read or written
  kExitCheck = 5,     // env-check or evaluation check failed
  kExitInternal = 6,  // anything else
};

struct Console {
  std::ostream& out;
  std::ostream& err;
};

int cmd_inspect(const std::string& lattice_path, Console io);

int cmd_preprocess(const std::string& in_path, const std::string& out_path, Console io);

struct TrackOptions {
  std::string lattice_path;
  std::string params_path;  // empty: all tunables at zero
  std::string watch_csv;    // empty: statistics are not written
  std::size_t particles = 1000;
  std::uint64_t seed = 0;
  std::array<double, 5> sigma{1e-3, 1e-3, 1e-3, 1e-3, 1e-3};
};

int cmd_track(const TrackOptions& options, Console io);

struct EnvCheckOptions {
  std::string lattice_path;
  std::size_t episodes = 10;
  std::uint64_t seed = 0;
  BunchGenParams bunch{1000, {1e-3, 1e-3, 1e-3, 1e-3, 1e-3}, 0};
  std::size_t n_min = 5;
  double default_bore = 0.025;
};

int cmd_env_check(const EnvCheckOptions& options, Console io, StateExtractor extractor = extract_state);

struct TrainOptions {
  std::optional<std::size_t> workers;  // accepted for symmetry, training is sequential
  bool save_buffer = false;           // include the replay buffer in checkpoints
};

// Writes into the output directory:
//   training_log.csv   one row per greedy evaluation
//   episode_log.csv    one row per training step
//   checkpoint_stage<k>.json after every stage, checkpoint.json at the end
//   best.params        best full-beamline configuration
//   best_watch.csv     watch statistics of best.params at n_train
int cmd_train(const RunConfig& config, const TrainOptions& options, Console io);

struct DeOptions {
  std::optional<std::size_t> workers;
  bool compare_random = false;
};

// Writes de_best.params and de_history.csv (plus random_best.params and
// random_history.csv with compare_random).
int cmd_optimize_de(const RunConfig& config, const DeOptions& options, Console io);

// Tracks the configuration at n_train and n_eval with the beam seed and
// reports the 95 % interval of the n_train estimate. Exit code 5 when the
// n_eval transmission falls outside it.
int cmd_evaluate(const RunConfig& config, const std::string& params_path, Console io);

struct ReportOptions {
  std::string training_log;  // default <output>/training_log.csv
  std::string watch_csv;     // default <output>/best_watch.csv
  std::optional<std::size_t> stage;  // CV stage filter; default last stage in the log
};

// Writes training_curve.svg, cv_table.csv, cv_chart.svg and envelope.svg.
int cmd_report(const RunConfig& config, const ReportOptions& options, Console io);

}  // namespace beamtune
