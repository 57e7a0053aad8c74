#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamtune/analysis.hpp"
#include "beamtune/ddpg.hpp"
#include "beamtune/env.hpp"
#include "beamtune/parameters.hpp"
#include "beamtune/tracking.hpp"

namespace beamtune {

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

// Episode log:
// episode,step,element,K1,HKICK,VKICK,FSE,n_survivors,reward,done,transmission
// Parameters an element does not have are left empty.
void write_episode_log_header(std::ostream& out);
void write_episode_log(std::ostream& out, std::size_t episode, const EpisodeRecord& record);

// Training log: episode,stage,transmission,cumulative_max,<label>...
void write_training_log(std::ostream& out, const TrainingLog& log);
TrainingLog read_training_log(std::istream& in);
TrainingLog training_log_from(const std::vector<EvaluationRecord>& evaluations, std::vector<std::string> labels);

// Watch statistics:
// s,n_survivors,mean_x,std_x,mean_xp,std_xp,mean_y,std_y,mean_yp,std_yp
void write_watch_stats(std::ostream& out, std::span<const WatchStats> stats);
std::vector<WatchStats> read_watch_stats(std::istream& in);

// CV table: parameter,samples,mean,std,cv_percent,band
void write_cv_table(std::ostream& out, std::span<const CvRow> rows);

std::string read_file(const std::string& path);
// Throws std::ios_base::failure when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace beamtune
