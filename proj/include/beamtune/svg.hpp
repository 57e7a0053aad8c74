#pragma once

#include <span>
#include <string>
#include <vector>

#include "beamtune/analysis.hpp"
#include "beamtune/tracking.hpp"

namespace beamtune {

struct ApertureMark {
  std::string name;
  double s = 0.0;
  double ax = 0.0;
  double ay = 0.0;
};

std::vector<ApertureMark> aperture_marks(const BeamlineGraph& graph);

// Per-evaluation transmission (light blue) and its cumulative maximum
// (dashed red) against episode number.
std::string training_curve_svg(const TrainingLog& log);

// One bar per parameter, coloured by CV band; bars are capped at 100 %.
std::string cv_chart_svg(std::span<const CvRow> rows);

// 2-sigma horizontal and vertical envelopes (mm) against s with aperture
// semi-axes overlaid.
std::string envelope_svg(std::span<const WatchStats> stats, std::span<const ApertureMark> apertures);

}  // namespace beamtune
