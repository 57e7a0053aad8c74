#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "beamtune/lattice.hpp"

namespace beamtune {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;

// (x, x', y, y', s, delta); metres, slopes, metres, slopes, metres, fraction.
struct PhaseSpaceCoord {
  double x = 0.0;
  double xp = 0.0;
  double y = 0.0;
  double yp = 0.0;
  double s = 0.0;
  double delta = 0.0;

  Vector6 as_vector() const { return (Vector6() << x, xp, y, yp, s, delta).finished(); }
  static PhaseSpaceCoord from_vector(const Vector6& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }

  friend bool operator==(const PhaseSpaceCoord&, const PhaseSpaceCoord&) = default;
};

struct Bunch {
  std::vector<PhaseSpaceCoord> particles;
  std::size_t n0 = 0;
  std::uint64_t seed = 0;

  std::size_t survivors() const { return particles.size(); }
  double transmission() const { return n0 == 0 ? 0.0 : static_cast<double>(particles.size()) / n0; }

  friend bool operator==(const Bunch&, const Bunch&) = default;
};

// x_out = matrix * x_in + offset. The s row holds path-length deviation only;
// the element length is added separately by the tracker.
struct TransferMap {
  Matrix6 matrix = Matrix6::Identity();
  Vector6 offset = Vector6::Zero();
};

struct BunchGenParams {
  std::size_t n0 = 1000;
  // standard deviations of (x, x', y, y', delta)
  std::array<double, 5> sigma{};
  std::uint64_t seed = 0;
};

// Uncorrelated Gaussian bunch centred on the reference orbit, s = 0.
// Draw order per particle: x, x', y, y', delta (see Rng::normal).
Bunch generate_bunch(const BunchGenParams& params);

// Linear map of one element. Throws std::invalid_argument for negative
// length or |K1| > 1e4.
TransferMap element_map(const Element& element);

// Thin corrector kicks at a quadrupole exit.
void apply_kicks(Bunch& bunch, const Element& element);

// Keeps particles with x^2/ax^2 + y^2/ay^2 <= 1, preserving order.
void cull_aperture(Bunch& bunch, double ax, double ay);

struct WatchStats {
  std::string name;
  double s = 0.0;  // position along the beamline
  std::size_t survivors = 0;
  std::array<double, 4> mean{};  // x, x', y, y'
  std::array<double, 4> std{};
};

WatchStats watch_statistics(const Bunch& bunch, const std::string& name, double s);

using WatchObserver = std::function<void(const WatchStats&)>;

// Tracks through the elements in order: map, exit kicks (QUAD), culling
// (APERTURE). `s_start` is the beamline position of the first element and is
// only used to label observer callbacks, which fire at every WATCH.
void track_segment(Bunch& bunch, std::span<const Element> segment, double s_start = 0.0,
                   const WatchObserver& observer = {});

// Copying overload for callers that want a fresh result.
Bunch tracked(Bunch bunch, std::span<const Element> segment);

// Beamline position (sum of element lengths) at the entrance of `pos`.
double position_of(const BeamlineGraph& graph, std::size_t pos);

}  // namespace beamtune
