#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beamtune {

// One row of the training log: an evaluation episode and the physical
// parameters it applied.
struct TrainingLogRow {
  std::size_t episode = 0;
  std::size_t stage = 0;
  double transmission = 0.0;
  double cumulative_max = 0.0;
  std::vector<double> parameters;
};

struct TrainingLog {
  std::vector<std::string> labels;  // one per parameter column, e.g. "Q1.K1"
  std::vector<TrainingLogRow> rows;
};

std::vector<double> cumulative_max(std::span<const double> values);

// Normal-approximation interval p +- z * sqrt(p (1 - p) / n), clipped to [0, 1].
struct BinomialInterval {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double p) const { return p >= lower && p <= upper; }
};

BinomialInterval binomial_interval(std::size_t successes, std::size_t trials, double z = 1.96);

// Bands follow the lower-inclusive edges 10, 25 and 50 percent.
enum class CvBand { Below10, From10To25, From25To50, Above50, NotApplicable };

std::string_view band_label(CvBand band);
CvBand cv_band(std::optional<double> cv_percent);

struct CvRow {
  std::string parameter;
  std::size_t samples = 0;
  double mean = 0.0;
  double std = 0.0;                   // population standard deviation
  std::optional<double> cv_percent;   // |std / mean| * 100, empty when mean == 0
  CvBand band = CvBand::NotApplicable;
};

// Coefficient of variation of `values`; empty when the mean is exactly zero.
std::optional<double> coefficient_of_variation(std::span<const double> values);

// Per-parameter CV over log rows with transmission > threshold. When `stage`
// is set only rows of that stage are used. Throws std::invalid_argument when
// fewer than two rows qualify.
std::vector<CvRow> analyze_convergence(const TrainingLog& log, double threshold = 0.60,
                                       std::optional<std::size_t> stage = std::nullopt);

}  // namespace beamtune
