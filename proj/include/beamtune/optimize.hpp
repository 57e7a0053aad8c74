#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "beamtune/lattice.hpp"
#include "beamtune/parameters.hpp"
#include "beamtune/tracking.hpp"

namespace beamtune {

// Final transmission of the preprocessed beamline as a function of the flat
// tuning vector. The beam upstream of the first tunable element does not
// depend on the vector and is tracked once.
class TransmissionObjective {
 public:
  TransmissionObjective(const BeamlineGraph& lattice, const BunchGenParams& bunch);

  double operator()(std::span<const double> values) const;

  // Full tracking with per-watch statistics.
  Bunch track(std::span<const double> values, const WatchObserver& observer = {}) const;

  const BeamlineGraph& graph() const { return graph_; }
  const std::vector<ParameterSpec>& specs() const { return specs_; }
  std::size_t dimension() const { return specs_.size(); }
  std::vector<double> lower_bounds() const;
  std::vector<double> upper_bounds() const;

 private:
  BeamlineGraph graph_;
  std::vector<ParameterSpec> specs_;
  BunchGenParams bunch_params_;
  std::size_t first_tunable_ = 0;
  Bunch upstream_;  // beam just before the first tunable element
};

struct DeConfig {
  std::size_t population = 0;  // 0: 15 * dimension, capped at 600
  double crossover = 0.7;
  double f_min = 0.5;          // mutation factor drawn from U[f_min, f_max] per generation
  double f_max = 1.0;
  std::size_t max_evaluations = 2000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  std::size_t population_for(std::size_t dimension) const;
};

struct OptimizationResult {
  std::vector<double> best;
  double transmission = 0.0;
  std::size_t evaluations = 0;
  // Best-so-far transmission after each evaluation.
  std::vector<double> history;
};

// DE/best/1/bin with Latin-hypercube initialisation, dithered F and
// generation-synchronous selection (a trial replaces its parent when it is
// at least as good). Out-of-bounds trial coordinates are redrawn uniformly.
// Throws std::invalid_argument for populations below 4.
OptimizationResult optimize_de(const TransmissionObjective& objective, const DeConfig& config);

// Uniform sampling inside the bounds; ties keep the earliest sample.
OptimizationResult random_search(const TransmissionObjective& objective, std::size_t trials, std::uint64_t seed);

}  // namespace beamtune
