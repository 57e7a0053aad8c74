#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beamtune/ddpg.hpp"
#include "beamtune/env.hpp"
#include "beamtune/optimize.hpp"

namespace beamtune {

// Lists every missing or invalid key by name.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct RunConfig {
  std::string lattice_path;  // resolved against the config file's directory
  BunchGenParams beam;       // beam.n0 is the training particle count
  std::size_t eval_particles = 100000;
  std::size_t n_min = 5;
  double default_bore = 0.025;
  DdpgConfig ddpg;
  StagePlan stages;
  DeConfig de;
  std::size_t random_trials = 0;  // 0: same budget as DE
  std::uint64_t random_seed = 0;
  double cv_threshold = 0.60;
  std::string output_dir = "out";

  EnvConfig env_config() const;
};

// INI format, see configs/desk.ini for the documented example. Sections:
// [lattice] [beam] [env] [ddpg] [stage1]..[stageN] [de] [random_search]
// [report] [output]. Unknown sections or keys are errors.
RunConfig parse_run_config(std::string_view text, const std::string& base_dir = ".");
RunConfig load_run_config(const std::string& path);

// Parses "K1", "K1,KICKS", "K1,KICKS,FSE" or "ALL".
ActiveKinds parse_kinds(std::string_view text);
std::string format_kinds(ActiveKinds kinds);

}  // namespace beamtune
